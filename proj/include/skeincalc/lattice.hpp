#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "skeincalc/errors.hpp"
#include "skeincalc/intmatrix.hpp"
#include "skeincalc/numtheory.hpp"
#include "skeincalc/partition.hpp"
#include "skeincalc/permutation.hpp"
#include "skeincalc/rational.hpp"

namespace skeincalc::lattice {

using numtheory::Group;

/// Weight lattice of GL_N (= Z^N) or SL_N (= Z^N modulo the all-ones
/// vector).  SL elements are always handled through Z^N coset
/// representatives; quotient relations are imposed by augmenting generating
/// sets with the all-ones vector, never by choosing a rank-(N-1) basis.
struct LatticeSpec {
  Group group;
  int n;

  LatticeSpec(Group g, int rank) : group(g), n(rank) {
    if (rank < 1) throw input_error("LatticeSpec: rank must be >= 1");
  }
};

using Vec = std::vector<long long>;

inline long long degree_raw(const Vec& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

/// Degree map: Z for GL, Z/N for SL.
inline long long degree(const LatticeSpec& spec, const Vec& v) {
  long long d = degree_raw(v);
  if (spec.group == Group::SL) d = ((d % spec.n) + spec.n) % spec.n;
  return d;
}

/// Cartan pairing: the dot product for GL; for SL representatives, the
/// induced form (u,v) - deg(u) deg(v) / N, which is rational-valued and
/// well defined on cosets of the all-ones vector.
inline Rational cartan_pairing(const LatticeSpec& spec, const Vec& u, const Vec& v) {
  if (static_cast<int>(u.size()) != spec.n || static_cast<int>(v.size()) != spec.n)
    throw input_error("cartan_pairing: vector size mismatch");
  long long dot = 0;
  for (int i = 0; i < spec.n; ++i)
    dot = IntMatrix::checked_add(
        dot, IntMatrix::checked_mul(u[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]));
  if (spec.group == Group::GL) return Rational(dot);
  Rational correction(BigInt(degree_raw(u)) * BigInt(degree_raw(v)), BigInt(spec.n));
  return Rational(dot) - correction;
}

/// The N x N matrix whose columns are e_j - e_{sigma(j)}, a generating set
/// of the image of (1 - sigma) on Z^N.
inline IntMatrix one_minus_sigma(const LatticeSpec& spec, const Permutation& sigma) {
  if (sigma.degree() != spec.n)
    throw input_error("one_minus_sigma: permutation degree does not match lattice rank");
  IntMatrix m(spec.n, spec.n);
  for (int j = 0; j < spec.n; ++j) {
    m(j, j) += 1;
    m(sigma(j), j) -= 1;
  }
  return m;
}

namespace detail {
/// Generators of the sublattice we quotient by: the columns of (1 - sigma),
/// augmented for SL with the all-ones column.
inline IntMatrix quotient_generators(const LatticeSpec& spec, const Permutation& sigma) {
  IntMatrix base = one_minus_sigma(spec, sigma);
  if (spec.group == Group::GL) return base;
  IntMatrix m(spec.n, spec.n + 1);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) m(i, j) = base(i, j);
    m(i, spec.n) = 1;
  }
  return m;
}
}  // namespace detail

/// Torsion of the quotient lattice modulo Im(1 - sigma), with a canonical
/// cyclic generator.
struct CosetStructure {
  std::vector<long long> torsion_invariants;  // invariant factors > 1
  Vec generator;                              // zero vector when torsion is trivial
  long long generator_degree = 0;             // residue mod N

  long long torsion_order() const {
    long long o = 1;
    for (long long d : torsion_invariants) o = IntMatrix::checked_mul(o, d);
    return o;
  }
};

/// Smith-normal-form computation of the torsion of Lambda / Im(1 - sigma).
/// The gcd-of-cycle-type formula is recomputed independently and the two
/// must agree: GL has no torsion, SL has a cyclic group of order
/// g = gcd(cycle type), generated by a vector of N/g ones spread over the
/// sigma-orbits proportionally to their lengths.
inline CosetStructure coset_structure(const LatticeSpec& spec, const Permutation& sigma) {
  if (sigma.degree() != spec.n)
    throw input_error("coset_structure: permutation degree does not match lattice rank");
  SnfResult snf = smith_normal_form(detail::quotient_generators(spec, sigma));
  CosetStructure out;
  out.torsion_invariants = snf.torsion_invariants();

  Partition type = sigma.cycle_type();
  long long g = gcd_of_partition(type);
  if (spec.group == Group::GL) {
    if (!out.torsion_invariants.empty())
      throw consistency_error("coset_structure: GL quotient has unexpected torsion");
    out.generator.assign(static_cast<std::size_t>(spec.n), 0);
    out.generator_degree = 0;
    return out;
  }
  if (out.torsion_invariants.size() > 1)
    throw consistency_error("coset_structure: torsion is not cyclic");
  long long snf_order = out.torsion_order();
  if (snf_order != g)
    throw consistency_error("coset_structure: SNF torsion " + std::to_string(snf_order) +
                            " != gcd of cycle type " + std::to_string(g));

  // N/g ones, lambda_i/g per orbit, placed at the first positions of each
  // orbit (orbits ordered by minimal element)
  out.generator.assign(static_cast<std::size_t>(spec.n), 0);
  for (const auto& cyc : sigma.cycles()) {
    long long ones = static_cast<long long>(cyc.size()) / g;
    for (long long i = 0; i < ones; ++i)
      out.generator[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])] = 1;
  }
  out.generator_degree = (spec.n / g) % spec.n;

  // the generator really has order g in the quotient
  auto scaled_in_span = [&](long long mult) {
    Vec test(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i)
      test[static_cast<std::size_t>(i)] = mult * out.generator[static_cast<std::size_t>(i)];
    return in_column_span(snf, test);
  };
  if (!scaled_in_span(g))
    throw consistency_error("coset_structure: g * generator not in the sublattice");
  for (long long mult = 1; mult < g; ++mult)
    if (g % mult == 0 && scaled_in_span(mult))
      throw consistency_error("coset_structure: generator order below g");
  return out;
}

/// Integral bases of the fixed sublattice U_sigma and of its orthogonal
/// complement under the Cartan pairing (both saturated).  For SL, vectors
/// are Z^N representatives of the quotient lattice.
struct FixedAndPerp {
  std::vector<Vec> fixed;  // basis of U_sigma
  std::vector<Vec> perp;   // basis of U_sigma^perp
};

inline FixedAndPerp fixed_and_perp(const LatticeSpec& spec, const Permutation& sigma) {
  if (sigma.degree() != spec.n)
    throw input_error("fixed_and_perp: permutation degree does not match lattice rank");
  FixedAndPerp out;

  // ker(1 - sigma) on Z^N is spanned by the orbit indicator vectors
  auto cycles = sigma.cycles();
  std::vector<Vec> indicators;
  for (const auto& cyc : cycles) {
    Vec v(static_cast<std::size_t>(spec.n), 0);
    for (int idx : cyc) v[static_cast<std::size_t>(idx)] = 1;
    indicators.push_back(std::move(v));
  }
  if (spec.group == Group::GL) {
    out.fixed = indicators;
    out.perp = saturation_basis(one_minus_sigma(spec, sigma));
    return out;
  }
  // SL: the all-ones vector is the sum of all indicators; dropping the last
  // indicator leaves representatives of a quotient basis.
  out.fixed.assign(indicators.begin(), indicators.end() - 1);
  out.perp = saturation_basis(detail::quotient_generators(spec, sigma));
  // quotient out the all-ones direction from the perp basis: the all-ones
  // vector lies in the saturation, so rewrite the basis with it as the last
  // vector and drop it.
  {
    IntMatrix b = IntMatrix::from_columns(spec.n, out.perp);
    SnfResult sb = smith_normal_form(b);
    Vec ones(static_cast<std::size_t>(spec.n), 1);
    auto coords = solve_integral(sb, ones);
    if (!coords)
      throw consistency_error("fixed_and_perp: all-ones vector missing from SL perp");
    // complete the (primitive) coordinate vector of all-ones to a basis of
    // Z^r via SNF of the single column, then map back
    IntMatrix c(static_cast<int>(out.perp.size()), 1);
    for (int i = 0; i < c.rows(); ++i) c(i, 0) = (*coords)[static_cast<std::size_t>(i)];
    SnfResult sc = smith_normal_form(c);
    if (sc.D(0, 0) != 1)
      throw consistency_error("fixed_and_perp: all-ones vector not primitive in SL perp");
    std::vector<Vec> quotient;
    for (int j = 1; j < sc.Uinv.cols(); ++j) {
      Vec col = sc.Uinv.column(j);
      Vec mapped(static_cast<std::size_t>(spec.n), 0);
      for (std::size_t i = 0; i < out.perp.size(); ++i)
        for (int r = 0; r < spec.n; ++r)
          mapped[static_cast<std::size_t>(r)] = IntMatrix::checked_add(
              mapped[static_cast<std::size_t>(r)],
              IntMatrix::checked_mul(col[i], out.perp[i][static_cast<std::size_t>(r)]));
      quotient.push_back(std::move(mapped));
    }
    out.perp = std::move(quotient);
  }
  return out;
}

/// Torsion order of Lambda / Im(1 - sigma) computed without the Smith
/// normal form: pick an exponent bound M (a nonzero maximal minor of the
/// generator matrix, by Cramer a multiple of the torsion exponent), then
/// count, inside (Z/M)^N, the cosets of the generated subgroup that contain
/// a point of finite order in the original quotient.  The torsion group
/// embeds in Z^N/(L + M Z^N) because M kills it, so the count is exact.
/// Refuses when M^N exceeds the enumeration cap or when N > 6.
inline long long brute_coset_count(const LatticeSpec& spec, const Permutation& sigma) {
  if (sigma.degree() != spec.n)
    throw input_error("brute_coset_count: permutation degree does not match lattice rank");
  if (spec.n > 6) throw cap_exceeded("brute_coset_count: N > 6");
  IntMatrix gens = detail::quotient_generators(spec, sigma);
  FractionFreeResult ff = fraction_free_eliminate(gens);
  long long mod = ff.minor_abs;
  if (mod <= 1) {
    // exponent bound 1: the torsion group is trivial
    return 1;
  }
  unsigned long long total = 1;
  for (int i = 0; i < spec.n; ++i) {
    total *= static_cast<unsigned long long>(mod);
    if (total > numtheory::kVectorEnumCap)
      throw cap_exceeded("brute_coset_count: M^N exceeds enumeration cap");
  }

  auto encode = [&](const std::vector<long long>& v) {
    unsigned long long code = 0;
    for (int i = spec.n - 1; i >= 0; --i)
      code = code * static_cast<unsigned long long>(mod) +
             static_cast<unsigned long long>(v[static_cast<std::size_t>(i)]);
    return code;
  };
  auto decode = [&](unsigned long long code) {
    std::vector<long long> v(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) {
      v[static_cast<std::size_t>(i)] = static_cast<long long>(code % static_cast<unsigned long long>(mod));
      code /= static_cast<unsigned long long>(mod);
    }
    return v;
  };

  // subgroup H = (L + M Z^N) / M Z^N by BFS closure over the generators
  std::vector<char> in_h(total, 0);
  std::vector<unsigned long long> queue{0};
  in_h[0] = 1;
  while (!queue.empty()) {
    unsigned long long code = queue.back();
    queue.pop_back();
    std::vector<long long> v = decode(code);
    for (int j = 0; j < gens.cols(); ++j) {
      std::vector<long long> w(v);
      for (int i = 0; i < spec.n; ++i) {
        long long e = (w[static_cast<std::size_t>(i)] + gens(i, j)) % mod;
        if (e < 0) e += mod;
        w[static_cast<std::size_t>(i)] = e;
      }
      unsigned long long wc = encode(w);
      if (!in_h[wc]) {
        in_h[wc] = 1;
        queue.push_back(wc);
      }
    }
  }

  // count H-cosets containing a finite-order point (rank test over Q)
  int base_rank = ff.rank;
  std::vector<char> seen(total, 0);
  long long cosets = 0;
  for (unsigned long long code = 0; code < total; ++code) {
    if (seen[code]) continue;
    std::vector<long long> v = decode(code);
    IntMatrix aug(spec.n, gens.cols() + 1);
    for (int i = 0; i < spec.n; ++i) {
      for (int j = 0; j < gens.cols(); ++j) aug(i, j) = gens(i, j);
      aug(i, gens.cols()) = v[static_cast<std::size_t>(i)];
    }
    bool finite_order = fraction_free_eliminate(aug).rank == base_rank;
    // H is a group, so one pass marks the whole coset v + H
    for (unsigned long long h = 0; h < total; ++h) {
      if (!in_h[h]) continue;
      std::vector<long long> hv = decode(h);
      std::vector<long long> y(v);
      for (int i = 0; i < spec.n; ++i)
        y[static_cast<std::size_t>(i)] =
            (y[static_cast<std::size_t>(i)] + hv[static_cast<std::size_t>(i)]) % mod;
      seen[encode(y)] = 1;
    }
    if (finite_order) ++cosets;
  }
  return cosets;
}

/// One canonical representative per conjugacy class of S_N, ordered by the
/// partition enumeration order of the cycle types.
inline std::vector<Permutation> class_representatives(int n) {
  std::vector<Permutation> out;
  for (const Partition& lambda : numtheory::partitions(n))
    out.push_back(Permutation::from_cycle_type(lambda));
  return out;
}

}  // namespace skeincalc::lattice
