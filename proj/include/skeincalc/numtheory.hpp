#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "skeincalc/bigint.hpp"
#include "skeincalc/errors.hpp"
#include "skeincalc/partition.hpp"

namespace skeincalc::numtheory {

enum class Group { GL, SL };
enum class Torus { T2, T3 };

inline const char* to_string(Group g) { return g == Group::GL ? "gl" : "sl"; }
inline const char* to_string(Torus t) { return t == Torus::T2 ? "t2" : "t3"; }

/// Enumeration caps.  Above these the corresponding brute-force route
/// refuses rather than approximating.
inline constexpr unsigned long long kVectorEnumCap = 10'000'000ULL;
inline constexpr long long kPartitionEnumCap = 60;

/// Number of partitions of n, by the bounded-largest-part recurrence
/// p(n, k) = p(n-k, k) + p(n, k-1).  The table is shared and mutex-guarded
/// so concurrent callers see one consistent memo.
inline BigInt partition_count(long long n) {
  if (n < 0) throw input_error("partition_count: negative argument");
  static std::mutex mu;
  static std::vector<std::vector<BigInt>> table;  // table[n][k], k <= n
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<std::size_t>(n) >= table.size()) {
    std::size_t old = table.size();
    table.resize(static_cast<std::size_t>(n) + 1);
    for (std::size_t m = old; m < table.size(); ++m) {
      table[m].assign(m + 1, BigInt(0));
      if (m == 0) {
        table[0][0] = 1;
        continue;
      }
      for (std::size_t k = 1; k <= m; ++k) {
        BigInt with_k = table[m - k][std::min(m - k, k)];
        table[m][k] = table[m][k - 1] + with_k;
      }
    }
  }
  std::size_t m = static_cast<std::size_t>(n);
  return m == 0 ? BigInt(1) : table[m][m];
}

namespace detail {
inline void enumerate_partitions(long long remaining, long long max_part,
                                 std::vector<long long>& stack,
                                 std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (long long p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    enumerate_partitions(remaining - p, p, stack, out);
    stack.pop_back();
  }
}
}  // namespace detail

/// All partitions of n, in lexicographically decreasing order.
inline std::vector<Partition> partitions(long long n) {
  if (n < 0) throw input_error("partitions: negative argument");
  std::vector<Partition> out;
  std::vector<long long> stack;
  detail::enumerate_partitions(n, n == 0 ? 1 : n, stack, out);
  return out;
}

/// Prime factorization by trial division; pairs (p, exponent) ascending.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw input_error("factorize: argument must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// J_k(d) = d^k prod_{p | d} (1 - p^{-k}), computed exactly as
/// prod p^{k(e-1)} (p^k - 1) over the factorization of d.
inline BigInt jordan_totient(int k, long long d) {
  if (k < 1 || d < 1) throw input_error("jordan_totient: arguments must be >= 1");
  BigInt result = 1;
  for (auto [p, e] : factorize(d)) {
    BigInt pk = BigInt(p).pow(static_cast<unsigned long long>(k));
    result *= pk.pow(static_cast<unsigned long long>(e - 1)) * (pk - BigInt(1));
  }
  return result;
}

/// A named arithmetic function d -> BigInt, the operand type of Dirichlet
/// convolution.
struct NatSequence {
  std::string name;
  std::function<BigInt(long long)> eval;
};

inline NatSequence seq_partition_count() {
  return {"P", [](long long d) { return partition_count(d); }};
}
inline NatSequence seq_jordan(int k) {
  return {"J" + std::to_string(k), [k](long long d) { return jordan_totient(k, d); }};
}
inline NatSequence seq_id_power(int k) {
  return {"Id" + std::to_string(k),
          [k](long long d) { return BigInt(d).pow(static_cast<unsigned long long>(k)); }};
}
inline NatSequence seq_delta() {
  return {"delta", [](long long d) { return BigInt(d == 1 ? 1 : 0); }};
}
/// d |-> d^2 phi(d), the multiplicity weight of the d-summand in the
/// category decomposition consistency check.
inline NatSequence seq_id2_phi() {
  return {"Id2*phi",
          [](long long d) { return BigInt(d) * BigInt(d) * jordan_totient(1, d); }};
}

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (F * G)(n) = sum over d | n of F(d) G(n/d).
inline BigInt dirichlet_convolve(const NatSequence& f, const NatSequence& g,
                                 long long n) {
  if (n < 1) throw input_error("dirichlet_convolve: n must be >= 1");
  BigInt total = 0;
  for (long long d : divisors(n)) total += f.eval(d) * g.eval(n / d);
  return total;
}

/// sum over d | n of d^2 phi(d) J_2(n/d) == J_3(n), both sides computed
/// independently.  This is the arithmetic consistency identity behind the
/// divisor-indexed decomposition of the SL skein category: the d-summand
/// appears with multiplicity d^2 phi(d).
inline bool verify_id2_j2_j3(long long n) {
  return dirichlet_convolve(seq_id2_phi(), seq_jordan(2), n) == jordan_totient(3, n);
}

namespace detail {
/// sum over v in (Z/n)^k of P(gcd(v, n)), by direct enumeration.
/// Refuses above the vector cap.
inline BigInt vector_gcd_sum(long long n, int k) {
  unsigned long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= static_cast<unsigned long long>(n);
    if (count > kVectorEnumCap)
      throw cap_exceeded("vector enumeration over (Z/" + std::to_string(n) +
                         ")^" + std::to_string(k) + " exceeds cap");
  }
  BigInt total = 0;
  std::vector<long long> v(static_cast<std::size_t>(k), 0);
  for (unsigned long long idx = 0; idx < count; ++idx) {
    unsigned long long rest = idx;
    long long g = n;
    for (int i = 0; i < k; ++i) {
      g = std::gcd(g, static_cast<long long>(rest % static_cast<unsigned long long>(n)));
      rest /= static_cast<unsigned long long>(n);
    }
    total += partition_count(g);
  }
  return total;
}

inline BigInt gcd_power_sum(long long n, int k) {
  if (n > kPartitionEnumCap)
    throw cap_exceeded("partition enumeration above n = " +
                       std::to_string(kPartitionEnumCap));
  BigInt total = 0;
  for (const Partition& lambda : partitions(n))
    total += BigInt(gcd_of_partition(lambda)).pow(static_cast<unsigned long long>(k));
  return total;
}
}  // namespace detail

/// Dimension of the skein module: GL gives P(N) for either torus, SL gives
/// (P * J_2)(N) on T^2 and (P * J_3)(N) on T^3.  For SL the value is
/// computed by the convolution, re-derived as sum of gcd(lambda)^k over
/// partitions and as sum of P(gcd(v, N)) over (Z/N)^k, and all routes are
/// required to agree.  Enumeration routes are skipped above their caps when
/// another exact route remains; the vector route is the binding one for SL
/// and refuses above its cap.
inline BigInt skein_dim(Group group, Torus torus, long long n) {
  if (n < 1) throw input_error("skein_dim: N must be >= 1");
  if (group == Group::GL) {
    BigInt value = partition_count(n);
    if (n <= kPartitionEnumCap) {
      BigInt by_count = BigInt(static_cast<long long>(partitions(n).size()));
      if (by_count != value)
        throw consistency_error("skein_dim: partition count vs enumeration mismatch at N=" +
                                std::to_string(n));
    }
    return value;
  }
  int k = torus == Torus::T2 ? 2 : 3;
  BigInt by_conv = dirichlet_convolve(seq_partition_count(), seq_jordan(k), n);
  BigInt by_vectors = detail::vector_gcd_sum(n, k);
  if (by_conv != by_vectors)
    throw consistency_error("skein_dim: convolution vs vector-sum mismatch at N=" +
                            std::to_string(n));
  if (n <= kPartitionEnumCap) {
    BigInt by_gcd = detail::gcd_power_sum(n, k);
    if (by_gcd != by_conv)
      throw consistency_error("skein_dim: convolution vs gcd-sum mismatch at N=" +
                              std::to_string(n));
  }
  return by_conv;
}

/// #{v in (Z/n)^k : gcd(v, n) = n/d} for each divisor d of n, by brute
/// enumeration; used to check that the count equals J_k(d).
inline std::map<long long, BigInt> orbit_size_census(long long n, int k) {
  if (n < 1) throw input_error("orbit_size_census: n must be >= 1");
  unsigned long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= static_cast<unsigned long long>(n);
    if (count > kVectorEnumCap) throw cap_exceeded("orbit_size_census: cap exceeded");
  }
  std::map<long long, BigInt> census;  // keyed by gcd(v, n)
  for (unsigned long long idx = 0; idx < count; ++idx) {
    unsigned long long rest = idx;
    long long g = n;
    for (int i = 0; i < k; ++i) {
      g = std::gcd(g, static_cast<long long>(rest % static_cast<unsigned long long>(n)));
      rest /= static_cast<unsigned long long>(n);
    }
    census[g] += 1;
  }
  return census;
}

}  // namespace skeincalc::numtheory
