#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skeincalc/errors.hpp"
#include "skeincalc/partition.hpp"
#include "skeincalc/permutation.hpp"
#include "skeincalc/ratfunc.hpp"

namespace skeincalc::hecke {

/// [m]_r = 1 + r + ... + r^{m-1}, expanded as a sum so no spurious
/// denominators appear.
inline RatFunc quantum_integer(int m, const RatFunc& r) {
  if (m < 0) throw input_error("quantum_integer: m must be >= 0");
  RatFunc sum = 0, power = 1;
  for (int i = 0; i < m; ++i) {
    sum += power;
    power *= r;
  }
  return sum;
}

inline RatFunc quantum_factorial(int m, const RatFunc& r) {
  if (m < 0) throw input_error("quantum_factorial: m must be >= 0");
  RatFunc prod = 1;
  for (int i = 2; i <= m; ++i) prod *= quantum_integer(i, r);
  return prod;
}

/// J(alpha) = {1, ..., n-1} minus the partial sums of alpha: the generator
/// labels of the parabolic subalgebra attached to alpha (1-based, T_j acts
/// on strands j, j+1).
inline std::set<int> composition_to_subset(const Composition& alpha, int n) {
  if (alpha.size() > n) throw input_error("composition_to_subset: |alpha| > n");
  std::set<int> out;
  for (int j = 1; j < n; ++j) out.insert(j);
  long long partial = 0;
  for (long long part : alpha.parts()) {
    partial += part;
    out.erase(static_cast<int>(partial));
  }
  // strands past |alpha| count as singleton parts
  for (long long j = alpha.size(); j < n; ++j) out.erase(static_cast<int>(j));
  return out;
}

inline Composition subset_to_composition(const std::set<int>& j_set, int n) {
  std::vector<long long> parts;
  long long prev = 0;
  for (int cut = 1; cut <= n; ++cut) {
    if (cut == n || !j_set.count(cut)) {
      parts.push_back(cut - prev);
      prev = cut;
    }
  }
  return Composition(std::move(parts));
}

/// Element of the finite Hecke algebra on n strands in the T_w basis.
/// Coefficients are exact rational functions in t; zero coefficients are
/// never stored.
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {
    if (n < 1) throw input_error("HeckeElement: n must be >= 1");
  }

  static HeckeElement zero(int n) { return HeckeElement(n); }

  static HeckeElement unit(int n) {
    HeckeElement e(n);
    e.add_term(Permutation::identity(n), RatFunc(1));
    return e;
  }

  static HeckeElement generator(int n, int i) {
    HeckeElement e(n);
    e.add_term(Permutation::transposition(n, i - 1), RatFunc(1));
    return e;
  }

  static HeckeElement basis(int n, const Permutation& w) {
    if (w.degree() != n) throw input_error("HeckeElement::basis: degree mismatch");
    HeckeElement e(n);
    e.add_term(w, RatFunc(1));
    return e;
  }

  int strands() const { return n_; }
  const std::map<Permutation, RatFunc>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  RatFunc coeff(const Permutation& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? RatFunc(0) : it->second;
  }

  void add_term(const Permutation& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    if (a.n_ != b.n_) throw input_error("HeckeElement: strand mismatch");
    HeckeElement out = a;
    for (const auto& [w, c] : b.coeffs_) out.add_term(w, c);
    return out;
  }

  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    return a + b.scaled(RatFunc(-1));
  }

  HeckeElement scaled(const RatFunc& c) const {
    HeckeElement out(n_);
    if (c.is_zero()) return out;
    for (const auto& [w, v] : coeffs_) out.coeffs_.emplace(w, v * c);
    return out;
  }

  /// Right multiplication by the generator T_i (1-based):
  /// T_w T_i = T_{w s_i} when the length goes up, and
  /// (t - t^{-1}) T_w + T_{w s_i} when it goes down.
  HeckeElement times_generator(int i) const {
    require_gen(i);
    HeckeElement out(n_);
    const RatFunc hook = RatFunc::t_power(1) - RatFunc::t_power(-1);
    for (const auto& [w, c] : coeffs_) {
      bool ascent = w(i - 1) < w(i);
      Permutation ws = w * Permutation::transposition(n_, i - 1);
      if (ascent) {
        out.add_term(ws, c);
      } else {
        out.add_term(w, c * hook);
        out.add_term(ws, c);
      }
    }
    return out;
  }

  /// Left multiplication by T_i (1-based); the ascent test uses w^{-1}.
  HeckeElement generator_times(int i) const {
    require_gen(i);
    HeckeElement out(n_);
    const RatFunc hook = RatFunc::t_power(1) - RatFunc::t_power(-1);
    for (const auto& [w, c] : coeffs_) {
      Permutation wi = w.inverse();
      bool ascent = wi(i - 1) < wi(i);
      Permutation sw = Permutation::transposition(n_, i - 1) * w;
      if (ascent) {
        out.add_term(sw, c);
      } else {
        out.add_term(w, c * hook);
        out.add_term(sw, c);
      }
    }
    return out;
  }

  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
    if (x.n_ != y.n_) throw input_error("HeckeElement: strand mismatch");
    HeckeElement out(x.n_);
    for (const auto& [v, d] : y.coeffs_) {
      HeckeElement term = x;
      for (int gen0 : v.reduced_word()) term = term.times_generator(gen0 + 1);
      for (const auto& [w, c] : term.coeffs_) out.add_term(w, c * d);
    }
    return out;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : coeffs_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*T" + w.to_string();
    }
    return s;
  }

 private:
  int n_;
  std::map<Permutation, RatFunc> coeffs_;

  void require_gen(int i) const {
    if (i < 1 || i >= n_) throw input_error("HeckeElement: generator index out of range");
  }
};

namespace detail {
inline void enumerate_young_subgroup(const std::vector<std::pair<int, int>>& blocks,
                                     std::size_t block_idx, std::vector<int>& image,
                                     std::vector<Permutation>& out) {
  if (block_idx == blocks.size()) {
    out.push_back(Permutation(image));
    return;
  }
  auto [start, len] = blocks[block_idx];
  std::vector<int> perm(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    for (int i = 0; i < len; ++i)
      image[static_cast<std::size_t>(start + i)] = start + perm[static_cast<std::size_t>(i)];
    enumerate_young_subgroup(blocks, block_idx + 1, image, out);
  } while (std::next_permutation(perm.begin(), perm.end()));
}
}  // namespace detail

/// All elements of the Young subgroup S_alpha inside S_n (strands past
/// |alpha| are fixed).
inline std::vector<Permutation> young_subgroup(const Composition& alpha, int n) {
  if (alpha.size() > n) throw input_error("young_subgroup: |alpha| > n");
  std::vector<std::pair<int, int>> blocks;
  int start = 0;
  for (long long part : alpha.parts()) {
    blocks.emplace_back(start, static_cast<int>(part));
    start += static_cast<int>(part);
  }
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  detail::enumerate_young_subgroup(blocks, 0, image, out);
  return out;
}

/// Unnormalized q-antisymmetrizer over S_alpha: sum of (-1/t)^len(w) T_w.
/// Coefficients are Laurent monomials, which keeps products denominator
/// free; the idempotent is this divided by sign_normalizer.
inline HeckeElement sign_sum(const Composition& alpha, int n) {
  if (alpha.size() > n) throw input_error("sign_sum: |alpha| > n");
  HeckeElement e(n);
  for (const Permutation& w : young_subgroup(alpha, n)) {
    int len = w.length();
    RatFunc c = RatFunc::t_power(-len);
    if (len % 2 != 0) c = -c;
    e.add_term(w, c);
  }
  return e;
}

/// The Poincare polynomial prod_i [alpha_i]_{t^{-2}}! of the Young
/// subgroup, i.e. sum over S_alpha of t^{-2 len(w)}.
inline RatFunc sign_normalizer(const Composition& alpha) {
  RatFunc normalizer = 1;
  for (long long part : alpha.parts())
    normalizer *= quantum_factorial(static_cast<int>(part), RatFunc::t_power(-2));
  return normalizer;
}

/// Parabolic sign idempotent: the q-antisymmetrizer over S_alpha,
/// normalized by the product of quantum factorials at t^{-2}.  Remaining
/// strands are fixed, following the (alpha, 1^{n-|alpha|}) convention.
inline HeckeElement sign_idempotent(const Composition& alpha, int n) {
  return sign_sum(alpha, n).scaled(sign_normalizer(alpha).inverse());
}

/// e_{m^j}: the sign idempotent of the rectangular composition (m^j).
inline HeckeElement sign_idempotent_rect(long long m, long long j, int n) {
  return sign_idempotent(Composition::rectangle(m, j), n);
}

inline HeckeElement trivial_sum(int n) {
  HeckeElement e(n);
  for (const Permutation& w : young_subgroup(Composition::rectangle(n, 1), n))
    e.add_term(w, RatFunc::t_power(w.length()));
  return e;
}

inline RatFunc trivial_normalizer(int n) {
  return quantum_factorial(n, RatFunc::t_power(2));
}

/// Trivial (q-symmetrizer) idempotent on all n strands.
inline HeckeElement trivial_idempotent(int n) {
  return trivial_sum(n).scaled(trivial_normalizer(n).inverse());
}

struct IdentityCheck {
  std::string name;
  bool passed;
  std::string detail;  // offending term when failed
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {
inline void record_residual(IdentityReport& report, std::string name,
                            const HeckeElement& difference) {
  bool ok = difference.is_zero();
  std::string detail;
  if (!ok) {
    const auto& [w, c] = *difference.coeffs().begin();
    detail = "residual (" + c.to_string() + ")*T" + w.to_string();
  }
  report.checks.push_back({std::move(name), ok, std::move(detail)});
}
}  // namespace detail

/// e^2 = e and (T_j + t^{-1}) e-_alpha = 0 on J(alpha).  Each identity is
/// verified on the normalizer-cleared form (e = S / norm with norm a unit,
/// so e^2 = e exactly when S^2 = norm * S); this keeps every coefficient a
/// Laurent polynomial and the comparison stays exact.
inline IdentityReport verify_sign_identities(const Composition& alpha, int n) {
  if (alpha.size() > n) throw input_error("verify_sign_identities: |alpha| > n");
  IdentityReport report;
  HeckeElement s_sign = sign_sum(alpha, n);
  detail::record_residual(report, "sign_idempotent_squares:" + alpha.to_string(),
                          s_sign * s_sign - s_sign.scaled(sign_normalizer(alpha)));
  for (int j : composition_to_subset(alpha, n)) {
    HeckeElement lhs = s_sign.generator_times(j) + s_sign.scaled(RatFunc::t_power(-1));
    detail::record_residual(
        report, "generator_kills_sign:T" + std::to_string(j) + alpha.to_string(), lhs);
  }
  return report;
}

/// (e+_n)^2 = e+_n, (T_i - t) e+_n = 0, and e+_n e-_n = 0 for n >= 2.
inline IdentityReport verify_trivial_identities(int n) {
  IdentityReport report;
  HeckeElement s_triv = trivial_sum(n);
  detail::record_residual(report, "trivial_idempotent_squares:n=" + std::to_string(n),
                          s_triv * s_triv - s_triv.scaled(trivial_normalizer(n)));
  for (int i = 1; i < n; ++i) {
    HeckeElement lhs = s_triv.generator_times(i) - s_triv.scaled(RatFunc::t_power(1));
    detail::record_residual(report, "generator_fixes_trivial:T" + std::to_string(i), lhs);
  }
  if (n >= 2) {
    detail::record_residual(report, "trivial_times_sign_vanishes:n=" + std::to_string(n),
                            s_triv * sign_sum(Composition::rectangle(n, 1), n));
  }
  return report;
}

/// The defining identities of the idempotents, checked as exact symbolic
/// equalities: e^2 = e, (T_j + t^{-1}) e-_alpha = 0 on J(alpha),
/// (T_i - t) e+_n = 0, and e+_n e-_n = 0 for n >= 2.
inline IdentityReport verify_idempotent_identities(const Composition& alpha, int n,
                                                   int strand_bound = 6) {
  if (n > strand_bound)
    throw cap_exceeded("verify_idempotent_identities: n exceeds the strand bound " +
                       std::to_string(strand_bound));
  IdentityReport report = verify_sign_identities(alpha, n);
  IdentityReport trivial = verify_trivial_identities(n);
  report.checks.insert(report.checks.end(), trivial.checks.begin(), trivial.checks.end());
  return report;
}

}  // namespace skeincalc::hecke
