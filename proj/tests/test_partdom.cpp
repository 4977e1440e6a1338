#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <skeincalc/partdom.hpp>

using namespace skeincalc;
using namespace skeincalc::partdom;

TEST_CASE("transpose and sort") {
  CHECK(transpose(Partition({2, 2})) == Partition({2, 2}));
  CHECK(transpose(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(transpose(Partition()) == Partition());
  CHECK(sort_to_partition(Composition({1, 3, 2})) == Partition({3, 2, 1}));
  for (long long n = 0; n <= 8; ++n)
    for (const Partition& lambda : numtheory::partitions(n))
      CHECK(transpose(transpose(lambda)) == lambda);
}

TEST_CASE("dominance order") {
  CHECK(dominated_by(Partition({1, 1, 1}), Partition({3})));
  CHECK(dominated_by(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(dominated_by(Partition({3, 1}), Partition({2, 2})));
  CHECK(dominated_by(Partition({2, 1}), Partition({2, 1})));
  CHECK_THROWS_AS(dominated_by(Partition({2}), Partition({3})), input_error);
  // reversal under transposition, exhaustive n <= 8
  for (long long n = 1; n <= 8; ++n) {
    auto all = numtheory::partitions(n);
    for (const Partition& mu : all)
      for (const Partition& lambda : all)
        CHECK(dominated_by(mu, lambda) == dominated_by(transpose(lambda), transpose(mu)));
  }
}

TEST_CASE("hook length dimensions") {
  CHECK(specht_dim(Partition({5})) == BigInt(1));
  CHECK(specht_dim(Partition({2, 1})) == BigInt(2));
  CHECK(specht_dim(Partition({2, 2})) == BigInt(2));
  CHECK(specht_dim(Partition({3, 2})) == BigInt(5));
  CHECK(specht_dim(Partition({1, 1, 1, 1})) == BigInt(1));
  // dimension of the regular representation
  for (long long n = 1; n <= 8; ++n) {
    BigInt sum = 0;
    for (const Partition& lambda : numtheory::partitions(n))
      sum += specht_dim(lambda) * specht_dim(lambda);
    CHECK(sum == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("character values on the S4 table") {
  auto chi = [](std::vector<long long> l, std::vector<long long> m) {
    return character_value(Partition(std::move(l)), Partition(std::move(m)));
  };
  CHECK(chi({4}, {1, 1, 1, 1}) == 1);
  CHECK(chi({4}, {4}) == 1);
  CHECK(chi({1, 1, 1, 1}, {2, 1, 1}) == -1);
  CHECK(chi({1, 1, 1, 1}, {4}) == -1);
  CHECK(chi({3, 1}, {1, 1, 1, 1}) == 3);
  CHECK(chi({3, 1}, {2, 2}) == -1);
  CHECK(chi({3, 1}, {3, 1}) == 0);
  CHECK(chi({3, 1}, {4}) == -1);
  CHECK(chi({2, 2}, {2, 1, 1}) == 0);
  CHECK(chi({2, 2}, {2, 2}) == 2);
  CHECK(chi({2, 2}, {3, 1}) == -1);
  CHECK(chi({2, 1, 1}, {4}) == 1);
  // column orthogonality at the identity: sum of chi(1)^2 = n!
  for (long long n = 1; n <= 7; ++n) {
    Partition ones = Partition::rectangle(1, n);
    BigInt sum = 0;
    for (const Partition& lambda : numtheory::partitions(n)) {
      long long d = character_value(lambda, ones);
      CHECK(BigInt(d) == specht_dim(lambda));
      sum += BigInt(d) * BigInt(d);
    }
    CHECK(sum == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("sign_survives pinned examples") {
  CHECK(sign_survives(Composition({2, 1}), Partition({2, 1})));
  CHECK_FALSE(sign_survives(Composition({2, 1}), Partition({3})));
  for (long long n = 1; n <= 6; ++n) {
    for (const Partition& lambda : numtheory::partitions(n)) {
      CHECK(sign_survives(Composition::rectangle(1, n), lambda));
      bool expect = lambda == Partition::rectangle(1, n);
      if (n == 1) expect = true;
      CHECK(sign_survives(Composition({n}), lambda) ==
            (n == 1 ? expect : lambda == Partition::rectangle(1, n)));
    }
  }
}

TEST_CASE("oracle pinned examples") {
  CHECK(mn_multiplicity_oracle(Composition({2, 1}), Partition({1, 1, 1})) == BigInt(1));
  CHECK(mn_multiplicity_oracle(Composition({3}), Partition({3})) == BigInt(0));
  CHECK(mn_multiplicity_oracle(Composition({4}), Partition({4})) == BigInt(0));
  // regular representation: multiplicity equals the dimension
  for (long long n = 1; n <= 6; ++n)
    for (const Partition& lambda : numtheory::partitions(n))
      CHECK(mn_multiplicity_oracle(Composition::rectangle(1, n), lambda) ==
            specht_dim(lambda));
}

TEST_CASE("survival criterion matches the oracle exhaustively") {
  for (long long n = 0; n <= 6; ++n) {
    for (const Composition& alpha : compositions(n)) {
      for (const Partition& lambda : numtheory::partitions(n)) {
        bool predicted = sign_survives(alpha, lambda);
        bool actual = mn_multiplicity_oracle(alpha, lambda) > BigInt(0);
        INFO("alpha=", alpha.to_string(), " lambda=", lambda.to_string());
        CHECK(predicted == actual);
      }
    }
  }
}

TEST_CASE("induced dimension conservation") {
  for (long long n = 1; n <= 6; ++n) {
    for (const Composition& alpha : compositions(n)) {
      BigInt total = 0;
      for (const Partition& lambda : numtheory::partitions(n))
        total += mn_multiplicity_oracle(alpha, lambda) * specht_dim(lambda);
      BigInt expected = factorial(static_cast<unsigned>(n));
      for (long long p : alpha.parts())
        expected = BigInt::div_exact(expected, factorial(static_cast<unsigned>(p)));
      CHECK(total == expected);
    }
  }
}

TEST_CASE("rectangle-reduction implication, exhaustive small cases") {
  // spec-pinned instance: l=2, m=2, n=5, alpha=(3,2), beta=()
  for (const Partition& lambda : numtheory::partitions(5))
    CHECK(check_kNr_implication(5, 2, 2, 1, 0, Composition({3, 2}), Composition(), lambda));
  // l=1, m=n, alpha=(n)
  for (long long n = 1; n <= 6; ++n)
    for (const Partition& lambda : numtheory::partitions(n))
      CHECK(check_kNr_implication(n, 1, n, 0, 0, Composition({n}), Composition(), lambda));
  // l=2, m=3, n=7, alpha=(4,2), beta=(1)
  for (const Partition& lambda : numtheory::partitions(7))
    CHECK(check_kNr_implication(7, 2, 3, 0, 1, Composition({4, 2}), Composition({1}), lambda));

  // exhaustive over all admissible tuples with n <= 6
  for (long long n = 1; n <= 6; ++n) {
    for (long long m = 1; m <= n; ++m) {
      for (long long ell = 1; ell * m <= n; ++ell) {
        long long r = n - ell * m;
        if (r >= m) continue;
        for (long long r1 = 0; r1 <= r; ++r1) {
          long long r2 = r - r1;
          for (const Composition& alpha : compositions(ell * m + r1)) {
            if (static_cast<long long>(alpha.length()) > ell) continue;
            for (const Composition& beta : compositions(r2)) {
              for (const Partition& lambda : numtheory::partitions(n)) {
                CHECK(check_kNr_implication(n, ell, m, r1, r2, alpha, beta, lambda));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(sign_survives(Composition({2}), Partition({3})), input_error);
  CHECK_THROWS_AS(mn_multiplicity_oracle(Composition({9}), Partition({9})), cap_exceeded);
  CHECK_THROWS_AS(
      check_kNr_implication(6, 2, 2, 1, 1, Composition({3, 2}), Composition({1}),
                            Partition({6})),
      input_error);  // r1 + r2 = m violates r < m
}
