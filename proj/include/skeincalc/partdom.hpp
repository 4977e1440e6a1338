#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "skeincalc/bigint.hpp"
#include "skeincalc/errors.hpp"
#include "skeincalc/numtheory.hpp"
#include "skeincalc/partition.hpp"

namespace skeincalc::partdom {

/// Combinatorial survival criterion for the parabolic sign idempotent on a
/// Specht module: e-_alpha does not kill S^lambda exactly when lambda is
/// dominated by sort(alpha) transposed.
inline bool sign_survives(const Composition& alpha, const Partition& lambda) {
  if (alpha.size() != lambda.size())
    throw input_error("sign_survives: |alpha| != |lambda|");
  return dominated_by(lambda, transpose(sort_to_partition(alpha)));
}

/// Character of the Specht module S^lambda at the class of cycle type mu,
/// by the border-strip recursion on beta-numbers.  Memoized; exact.
inline long long character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw input_error("character_value: size mismatch");
  static std::mutex mu_lock;
  static std::map<std::pair<Partition, Partition>, long long> cache;
  if (lambda.empty()) return 1;
  {
    std::lock_guard<std::mutex> lock(mu_lock);
    auto it = cache.find({lambda, mu});
    if (it != cache.end()) return it->second;
  }

  long long strip = mu.parts()[0];
  std::vector<long long> rest_parts(mu.parts().begin() + 1, mu.parts().end());
  Partition rest(std::move(rest_parts));

  // first-column hook lengths (beta numbers), strictly decreasing
  std::vector<long long> beta;
  long long rows = static_cast<long long>(lambda.length());
  for (long long i = 0; i < rows; ++i)
    beta.push_back(lambda.parts()[static_cast<std::size_t>(i)] + (rows - 1 - i));

  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    long long target = beta[i] - strip;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (long long b : beta)
      if (target < b && b < beta[i]) ++height;
    std::vector<long long> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<long long>());
    // strip trailing zeros of the new shape as beta values count down to 0
    std::vector<long long> parts;
    long long m = static_cast<long long>(nb.size());
    for (long long r = 0; r < m; ++r) {
      long long part = nb[static_cast<std::size_t>(r)] - (m - 1 - r);
      if (part < 0) throw consistency_error("character_value: negative part");
      if (part > 0) parts.push_back(part);
    }
    long long sub = character_value(Partition(std::move(parts)), rest);
    total += (height % 2 == 0) ? sub : -sub;
  }
  std::lock_guard<std::mutex> lock(mu_lock);
  cache.emplace(std::make_pair(lambda, mu), total);
  return total;
}

/// Number of standard Young tableaux of shape lambda, by the hook length
/// formula (n! divided hook by hook, each division exact).
inline BigInt specht_dim(const Partition& lambda) {
  long long n = lambda.size();
  BigInt dim = factorial(static_cast<unsigned>(n));
  Partition lt = transpose(lambda);
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (long long j = 0; j < lambda.parts()[i]; ++j) {
      long long hook = lambda.parts()[i] - j + lt.parts()[static_cast<std::size_t>(j)] -
                       static_cast<long long>(i) - 1;
      dim = BigInt::div_exact(dim, BigInt(hook));
    }
  return dim;
}

namespace detail {
/// Size of the conjugacy class of cycle type mu inside S_{|mu|}:
/// n! / prod_k k^{m_k} m_k!.
inline BigInt class_size(const Partition& mu) {
  BigInt z = 1;
  long long run = 0, prev = 0;
  for (long long p : mu.parts()) {
    if (p == prev) {
      ++run;
    } else {
      prev = p;
      run = 1;
    }
    z *= BigInt(p) * BigInt(run);
  }
  return BigInt::div_exact(factorial(static_cast<unsigned>(mu.size())), z);
}

inline void census_rec(const std::vector<long long>& alpha_parts, std::size_t idx,
                       std::vector<long long>& cycle_acc, BigInt weight, long long sign_acc,
                       std::map<std::pair<Partition, long long>, BigInt>& census) {
  if (idx == alpha_parts.size()) {
    std::vector<long long> sorted = cycle_acc;
    std::sort(sorted.begin(), sorted.end(), std::greater<long long>());
    census[{Partition(std::move(sorted)), sign_acc}] += weight;
    return;
  }
  for (const Partition& mu : numtheory::partitions(alpha_parts[idx])) {
    std::size_t before = cycle_acc.size();
    for (long long p : mu.parts()) cycle_acc.push_back(p);
    long long sgn = (alpha_parts[idx] - static_cast<long long>(mu.length())) % 2 == 0 ? 1 : -1;
    census_rec(alpha_parts, idx + 1, cycle_acc, weight * class_size(mu), sign_acc * sgn,
               census);
    cycle_acc.resize(before);
  }
}
}  // namespace detail

/// Independent brute-force oracle for the survival criterion: the
/// multiplicity <Ind_{S_alpha} sgn, chi^lambda>, computed by enumerating
/// cycle types inside the Young subgroup with multinomial class sizes and
/// evaluating chi^lambda by the border-strip recursion.  Works at t = 1,
/// which is sound because the generic-parameter Hecke algebra has the same
/// decomposition numbers as the group algebra.  Refuses above n = 8.
inline BigInt mn_multiplicity_oracle(const Composition& alpha, const Partition& lambda) {
  if (alpha.size() != lambda.size())
    throw input_error("mn_multiplicity_oracle: |alpha| != |lambda|");
  long long n = alpha.size();
  if (n > 8) throw cap_exceeded("mn_multiplicity_oracle: n > 8");
  if (n == 0) return 1;

  std::map<std::pair<Partition, long long>, BigInt> census;
  std::vector<long long> acc;
  detail::census_rec(alpha.parts(), 0, acc, BigInt(1), 1, census);

  BigInt numerator = 0;
  for (const auto& [key, count] : census) {
    const auto& [type, sgn] = key;
    BigInt term = count * BigInt(character_value(lambda, type));
    numerator += sgn > 0 ? term : -term;
  }
  BigInt order = 1;
  for (long long p : alpha.parts()) order *= factorial(static_cast<unsigned>(p));
  return BigInt::div_exact(numerator, order);
}

/// The two checkable claims behind the rectangle-reduction step: writing
/// n = l m + r1 + r2 with alpha a composition of l m + r1 in at most l
/// parts and beta a composition of r2,
///   (a) (m^l, 1^{r1}) is dominated by sort(alpha), and
///   (b) survival of (alpha, beta) on lambda implies survival of
///       (m^l, 1^{r1+r2}).
inline bool check_kNr_implication(long long n, long long ell, long long m, long long r1,
                                  long long r2, const Composition& alpha,
                                  const Composition& beta, const Partition& lambda) {
  if (ell < 1 || m < 1 || r1 < 0 || r2 < 0)
    throw input_error("check_kNr_implication: bad decomposition");
  if (r1 + r2 >= m)
    throw input_error("check_kNr_implication: requires r1 + r2 < m");
  if (n != ell * m + r1 + r2 || alpha.size() != ell * m + r1 || beta.size() != r2 ||
      lambda.size() != n)
    throw input_error("check_kNr_implication: sizes do not decompose n");
  if (static_cast<long long>(alpha.length()) > ell)
    throw input_error("check_kNr_implication: alpha must have <= l parts");

  Composition rect1(Composition::rect_and_ones(m, ell, r1));
  if (!dominated_by(sort_to_partition(rect1), sort_to_partition(alpha))) return false;

  Composition joined = alpha.concat(beta);
  Composition target = Composition::rect_and_ones(m, ell, r1 + r2);
  if (sign_survives(joined, lambda) && !sign_survives(target, lambda)) return false;
  return true;
}

/// All compositions of n, in first-part-major order.
inline std::vector<Composition> compositions(long long n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back(Composition());
    return out;
  }
  for (long long first = 1; first <= n; ++first)
    for (const Composition& rest : compositions(n - first)) {
      std::vector<long long> parts{first};
      for (long long p : rest.parts()) parts.push_back(p);
      out.push_back(Composition(std::move(parts)));
    }
  return out;
}

}  // namespace skeincalc::partdom
