#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skeincalc/bigint.hpp"
#include "skeincalc/errors.hpp"
#include "skeincalc/lattice.hpp"
#include "skeincalc/numtheory.hpp"
#include "skeincalc/rational.hpp"

namespace skeincalc::hochschild {

using lattice::LatticeSpec;
using lattice::Vec;
using numtheory::Group;

/// An element of Lambda (+) Lambda, the index lattice of the quantum torus.
struct PairVec {
  Vec first, second;
};

/// Carries the lattice and the symplectic pairing
/// omega(u (+) v, x (+) y) = (u, y) - (x, v) built from the Cartan pairing.
struct HochschildContext {
  LatticeSpec spec;

  explicit HochschildContext(LatticeSpec s) : spec(s) {}

  Rational omega(const PairVec& a, const PairVec& b) const {
    return lattice::cartan_pairing(spec, a.first, b.second) -
           lattice::cartan_pairing(spec, b.first, a.second);
  }
};

/// dim HH_0 of the sigma-twisted bimodule: the number of Im(1-sigma)-cosets
/// in U_sigma^perp (+) U_sigma^perp, i.e. (torsion order)^2.
inline BigInt twisted_hh0_dim(const HochschildContext& ctx, const Permutation& sigma) {
  long long t = lattice::coset_structure(ctx.spec, sigma).torsion_order();
  return BigInt(t) * BigInt(t);
}

/// Total HH_0 dimension of the smash product: the sum of the per-class
/// twisted dimensions over one representative per conjugacy class.  The
/// result must match the closed formula route.
inline BigInt hh0_smash_dim(Group group, int n) {
  if (n < 1) throw input_error("hh0_smash_dim: N must be >= 1");
  HochschildContext ctx{LatticeSpec(group, n)};
  BigInt total = 0;
  for (const Permutation& sigma : lattice::class_representatives(n))
    total += twisted_hh0_dim(ctx, sigma);
  BigInt formula = numtheory::skein_dim(group, numtheory::Torus::T2, n);
  if (total != formula)
    throw consistency_error("hh0_smash_dim: class sum " + total.to_string() +
                            " != formula value " + formula.to_string());
  return total;
}

/// a is not in U_sigma^perp (+) U_sigma^perp: a vector b of the form
/// u (+) 0 or 0 (+) u with u fixed by sigma and omega(a, b) != 0.
struct Witness {
  PairVec b;
  Rational omega_value;
};

/// a is in U_sigma^perp (+) U_sigma^perp: its integral coordinates in the
/// returned basis (per component; for SL modulo the all-ones vector).
struct MembershipCertificate {
  std::vector<Vec> perp_basis;
  std::vector<long long> first_coords, second_coords;
};

using WitnessOrMembership = std::variant<Witness, MembershipCertificate>;

namespace detail {
/// coordinates of v in the given basis, allowing an extra multiple of the
/// all-ones vector in the SL case; nullopt if v is not in the span.
inline std::optional<std::vector<long long>> coords_in_basis(const LatticeSpec& spec,
                                                             const std::vector<Vec>& basis,
                                                             const Vec& v) {
  int extra = spec.group == Group::SL ? 1 : 0;
  if (basis.empty() && extra == 0) {
    for (long long x : v)
      if (x != 0) return std::nullopt;
    return std::vector<long long>{};
  }
  IntMatrix m(spec.n, static_cast<int>(basis.size()) + extra);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < spec.n; ++i) m(i, static_cast<int>(j)) = basis[j][static_cast<std::size_t>(i)];
  if (extra)
    for (int i = 0; i < spec.n; ++i) m(i, static_cast<int>(basis.size())) = 1;
  auto sol = solve_integral(smith_normal_form(m), v);
  if (!sol) return std::nullopt;
  sol->resize(basis.size());  // drop the all-ones coefficient
  return sol;
}
}  // namespace detail

/// The dichotomy of the twisted-HH_0 basis computation: either a pairing
/// witness showing a is not perp-perp, or the coordinates certifying it is.
/// Exactly one branch applies for every input.
inline WitnessOrMembership surjectivity_witness(const HochschildContext& ctx,
                                                const Permutation& sigma, const PairVec& a) {
  const LatticeSpec& spec = ctx.spec;
  if (sigma.degree() != spec.n || static_cast<int>(a.first.size()) != spec.n ||
      static_cast<int>(a.second.size()) != spec.n)
    throw input_error("surjectivity_witness: size mismatch");
  auto fp = lattice::fixed_and_perp(spec, sigma);

  // omega(a, 0 (+) u) = (a1, u);  omega(a, u (+) 0) = -(u, a2)
  Vec zero(static_cast<std::size_t>(spec.n), 0);
  for (const Vec& u : fp.fixed) {
    Rational p = lattice::cartan_pairing(spec, a.first, u);
    if (!p.is_zero()) return Witness{PairVec{zero, u}, p};
  }
  for (const Vec& u : fp.fixed) {
    Rational p = lattice::cartan_pairing(spec, u, a.second);
    if (!p.is_zero()) return Witness{PairVec{u, zero}, -p};
  }

  auto c1 = detail::coords_in_basis(spec, fp.perp, a.first);
  auto c2 = detail::coords_in_basis(spec, fp.perp, a.second);
  if (!c1 || !c2)
    throw consistency_error("surjectivity_witness: vector pairs to zero with the fixed "
                            "lattice but is not in the perp lattice");
  return MembershipCertificate{fp.perp, *c1, *c2};
}

/// Audit value for the renormalization exponent: omega((1-sigma)^{-1} a, a)
/// for a in perp (+) perp.  No q-power arithmetic is done anywhere; the
/// exponent is exposed as an exact rational.  Each component is solved over
/// Q; in the SL case the component is first corrected by the multiple of the
/// all-ones vector dictated by the (constant) per-orbit averages.
inline Rational renormalization_pairing(const HochschildContext& ctx, const Permutation& sigma,
                                        const PairVec& a) {
  const LatticeSpec& spec = ctx.spec;
  SnfResult s = smith_normal_form(lattice::one_minus_sigma(spec, sigma));
  int rank = s.rank();
  auto solve_rational = [&](const Vec& v) -> std::pair<Vec, long long> {
    Vec rhs(v);
    long long den = 1;
    if (spec.group == Group::SL) {
      // (1-sigma)x sums to zero over every sigma-orbit, so subtract the
      // orbit-average multiple of the all-ones vector first
      auto cycles = sigma.cycles();
      long long sum0 = 0;
      for (int idx : cycles.front()) sum0 += v[static_cast<std::size_t>(idx)];
      long long len0 = static_cast<long long>(cycles.front().size());
      for (const auto& cyc : cycles) {
        long long sum = 0;
        for (int idx : cyc) sum += v[static_cast<std::size_t>(idx)];
        if (sum * len0 != sum0 * static_cast<long long>(cyc.size()))
          throw consistency_error("renormalization_pairing: component is not in the "
                                  "rational image");
      }
      den = len0;
      for (auto& x : rhs) x = x * len0 - sum0;
    }
    // rational solve through the SNF: y = U rhs, x' = D^+ y, x = V x'
    Vec y = s.U.apply(rhs);
    long long extra_den = 1;
    for (int i = 0; i < rank; ++i) extra_den = std::lcm(extra_den, s.D(i, i));
    for (int i = rank; i < static_cast<int>(y.size()); ++i)
      if (y[static_cast<std::size_t>(i)] != 0)
        throw consistency_error("renormalization_pairing: component is not in the "
                                "rational image");
    Vec xp(static_cast<std::size_t>(s.D.cols()), 0);
    for (int i = 0; i < rank; ++i)
      xp[static_cast<std::size_t>(i)] =
          y[static_cast<std::size_t>(i)] * (extra_den / s.D(i, i));
    return {s.V.apply(xp), den * extra_den};
  };
  auto [x1, d1] = solve_rational(a.first);
  auto [x2, d2] = solve_rational(a.second);
  // omega(x, a) with x = (x1/d1) (+) (x2/d2)
  return lattice::cartan_pairing(spec, x1, a.second) / Rational(d1) -
         lattice::cartan_pairing(spec, a.first, x2) / Rational(d2);
}

/// Full array over (Z/N)^k recording the graded dimensions; entry at v is
/// P(gcd(v, N)) for SL, and the GL table is the partition count
/// concentrated at the origin.
struct GradedTable {
  Group group;
  int n;
  int dim_k;
  std::vector<BigInt> entries;  // row-major over (Z/N)^k

  std::size_t index(const std::vector<int>& v) const {
    std::size_t idx = 0;
    for (int c : v) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
    return idx;
  }

  BigInt total() const {
    BigInt t = 0;
    for (const BigInt& e : entries) t += e;
    return t;
  }
};

inline GradedTable graded_table(Group group, int n, int dim_k) {
  if (n < 1) throw input_error("graded_table: N must be >= 1");
  if (dim_k != 2 && dim_k != 3) throw input_error("graded_table: k must be 2 or 3");
  unsigned long long count = 1;
  for (int i = 0; i < dim_k; ++i) {
    count *= static_cast<unsigned long long>(n);
    if (count > numtheory::kVectorEnumCap)
      throw cap_exceeded("graded_table: N^k exceeds enumeration cap");
  }
  GradedTable table{group, n, dim_k, {}};
  table.entries.assign(count, BigInt(0));
  if (group == Group::GL) {
    table.entries[0] = numtheory::partition_count(n);
    return table;
  }

  // gcd-of-cycle-type per class, for the second route
  std::vector<long long> class_gcds;
  for (const Partition& lambda : numtheory::partitions(n))
    class_gcds.push_back(gcd_of_partition(lambda));

  for (unsigned long long idx = 0; idx < count; ++idx) {
    unsigned long long rest = idx;
    long long g = n;
    for (int i = 0; i < dim_k; ++i) {
      g = std::gcd(g, static_cast<long long>(rest % static_cast<unsigned long long>(n)));
      rest /= static_cast<unsigned long long>(n);
    }
    BigInt value = numtheory::partition_count(g);
    // per-class route: class lambda contributes where (N / g_lambda) | gcd
    long long by_classes = 0;
    for (long long cg : class_gcds)
      if (g % (n / cg) == 0) ++by_classes;
    if (value != BigInt(by_classes))
      throw consistency_error("graded_table: partition route != class route at entry " +
                              std::to_string(idx));
    table.entries[static_cast<std::size_t>(idx)] = value;
  }
  return table;
}

}  // namespace skeincalc::hochschild
