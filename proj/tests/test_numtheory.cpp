#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <skeincalc/numtheory.hpp>

#include <numeric>
#include <set>

using namespace skeincalc;
using namespace skeincalc::numtheory;

namespace {

// Independent oracle: count elements of order dividing-exactly d in
// (Z/m)^k by scanning the whole group.
long long brute_order_count(long long m, int k, long long d) {
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= m;
  long long count = 0;
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    long long order = 1;
    for (int i = 0; i < k; ++i) {
      long long x = rest % m;
      rest /= m;
      long long ox = m / std::gcd(x, m);
      order = std::lcm(order, ox);
    }
    if (order == d) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("partition_count matches the enumerator and known values") {
  CHECK(partition_count(0) == BigInt(1));
  CHECK(partition_count(5) == BigInt(7));
  CHECK(partition_count(10) == BigInt(42));
  CHECK(partition_count(100).to_string() == "190569292");
  // big enough to spill past 64 bits
  CHECK(partition_count(500).to_string() == "2300165032574323995027");
  for (long long n = 0; n <= 40; ++n) {
    CHECK(partition_count(n) == BigInt(static_cast<long long>(partitions(n).size())));
  }
}

TEST_CASE("partitions enumerates each partition once, lex decreasing") {
  auto parts3 = partitions(3);
  REQUIRE(parts3.size() == 3);
  CHECK(parts3[0] == Partition({3}));
  CHECK(parts3[1] == Partition({2, 1}));
  CHECK(parts3[2] == Partition({1, 1, 1}));
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0)[0].empty());
  CHECK(partitions(4).size() == 5);

  auto all = partitions(9);
  std::set<Partition> dedup(all.begin(), all.end());
  CHECK(dedup.size() == all.size());
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].parts() > all[i].parts());
}

TEST_CASE("jordan_totient against brute order counts") {
  CHECK(jordan_totient(2, 2) == BigInt(3));
  CHECK(jordan_totient(1, 6) == BigInt(2));
  CHECK(jordan_totient(5, 1) == BigInt(1));
  for (long long d = 1; d <= 12; ++d) {
    for (int k = 1; k <= 2; ++k) {
      CHECK(jordan_totient(k, d) == BigInt(brute_order_count(d, k, d)));
    }
  }
  CHECK(jordan_totient(3, 2) == BigInt(brute_order_count(2, 3, 2)));
  CHECK(jordan_totient(3, 6) == BigInt(brute_order_count(6, 3, 6)));
}

TEST_CASE("gcd_of_partition") {
  CHECK(gcd_of_partition(Partition({4, 2, 2})) == 2);
  CHECK(gcd_of_partition(Partition({9})) == 9);
  CHECK(gcd_of_partition(Partition({3, 2})) == 1);
  CHECK_THROWS_AS(gcd_of_partition(Partition()), input_error);
}

TEST_CASE("dirichlet convolution basics") {
  CHECK(dirichlet_convolve(seq_partition_count(), seq_jordan(2), 2) == BigInt(5));
  CHECK(dirichlet_convolve(seq_partition_count(), seq_jordan(3), 2) == BigInt(9));
  // delta is the convolution identity
  for (long long n = 1; n <= 30; ++n) {
    CHECK(dirichlet_convolve(seq_partition_count(), seq_delta(), n) ==
          partition_count(n));
    CHECK(dirichlet_convolve(seq_delta(), seq_jordan(2), n) == jordan_totient(2, n));
  }
}

TEST_CASE("dirichlet convolution is commutative and associative") {
  NatSequence f = seq_partition_count(), g = seq_jordan(2), h = seq_id_power(2);
  for (long long n : {1LL, 6LL, 12LL, 24LL, 30LL, 36LL}) {
    CHECK(dirichlet_convolve(f, g, n) == dirichlet_convolve(g, f, n));
    NatSequence fg{"fg", [&](long long d) { return dirichlet_convolve(f, g, d); }};
    NatSequence gh{"gh", [&](long long d) { return dirichlet_convolve(g, h, d); }};
    CHECK(dirichlet_convolve(fg, h, n) == dirichlet_convolve(f, gh, n));
  }
}

TEST_CASE("identity Id2 * J2 = J3") {
  for (long long n = 1; n <= 200; ++n) CHECK(verify_id2_j2_j3(n));
}

TEST_CASE("orbit size census equals Jordan totients") {
  for (long long n : {2LL, 3LL, 4LL, 6LL, 8LL, 12LL}) {
    for (int k = 2; k <= 3; ++k) {
      auto census = orbit_size_census(n, k);
      for (long long d : divisors(n)) {
        CHECK(census[n / d] == jordan_totient(k, d));
      }
    }
  }
}

TEST_CASE("skein_dim reproduces the published sequences") {
  const long long gl_dims[] = {1,  2,  3,  5,   7,   11,  15,  22, 30,
                               42, 56, 77, 101, 135, 176, 231, 297};
  for (long long n = 1; n <= 17; ++n) {
    CHECK(skein_dim(Group::GL, Torus::T2, n) == BigInt(gl_dims[n - 1]));
    CHECK(skein_dim(Group::GL, Torus::T3, n) == BigInt(gl_dims[n - 1]));
  }
  const long long sl_t2[] = {5,   11,  23,  31,  60,  63,  109, 126,
                             183, 176, 330, 269, 420, 496, 645, 585};
  for (long long n = 2; n <= 17; ++n)
    CHECK(skein_dim(Group::SL, Torus::T2, n) == BigInt(sl_t2[n - 2]));
  const long long sl_t3[] = {9,    29,   75,   131,  266,  357,  617,  810,  1207,
                             1386, 2272, 2297, 3318, 3954, 5145, 5209, 7745, 7348};
  for (long long n = 2; n <= 19; ++n)
    CHECK(skein_dim(Group::SL, Torus::T3, n) == BigInt(sl_t3[n - 2]));
}

TEST_CASE("three-route equality for the dimension sum, N <= 30") {
  for (long long n = 1; n <= 30; ++n) {
    for (int k = 2; k <= 3; ++k) {
      BigInt conv = dirichlet_convolve(seq_partition_count(), seq_jordan(k), n);
      BigInt gcd_sum = 0;
      for (const Partition& lambda : partitions(n))
        gcd_sum += BigInt(gcd_of_partition(lambda)).pow(static_cast<unsigned long long>(k));
      CHECK(conv == gcd_sum);
      if (k == 2 || n <= 21) {
        BigInt vec_sum = 0;
        auto census = orbit_size_census(n, k);
        for (auto& [g, cnt] : census) vec_sum += cnt * partition_count(g);
        CHECK(conv == vec_sum);
      }
    }
  }
}

TEST_CASE("caps refuse rather than approximate") {
  CHECK_THROWS_AS(skein_dim(Group::SL, Torus::T3, 500), cap_exceeded);
  CHECK_THROWS_AS(orbit_size_census(5000, 3), cap_exceeded);
  CHECK_THROWS_AS(skein_dim(Group::GL, Torus::T2, 0), input_error);
}
