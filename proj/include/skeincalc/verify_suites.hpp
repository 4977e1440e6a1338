#pragma once

#include <string>
#include <vector>

#include "skeincalc/hecke.hpp"
#include "skeincalc/hochschild.hpp"
#include "skeincalc/lattice.hpp"
#include "skeincalc/multiseg.hpp"
#include "skeincalc/numtheory.hpp"
#include "skeincalc/partdom.hpp"
#include "skeincalc/sampling.hpp"

namespace skeincalc::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // reproduction data on failure
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }
};

namespace detail {
inline void record(SuiteReport& report, std::string name, bool passed,
                   std::string witness = "") {
  report.checks.push_back({std::move(name), passed, passed ? "" : std::move(witness)});
}
}  // namespace detail

/// Torsion of the weight-lattice quotients: SNF route vs the gcd formula,
/// generator degree, cyclicity, and the enumeration oracle at small rank.
inline SuiteReport run_coset_suite(int max_n = 9) {
  using lattice::LatticeSpec;
  using numtheory::Group;
  SuiteReport report{"coset", {}};
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lambda : numtheory::partitions(n)) {
      Permutation sigma = Permutation::from_cycle_type(lambda);
      std::string tag = "n=" + std::to_string(n) + " type=" + lambda.to_string();
      try {
        auto gl = lattice::coset_structure(LatticeSpec(Group::GL, n), sigma);
        detail::record(report, "gl_trivial_torsion " + tag, gl.torsion_order() == 1,
                       "order=" + std::to_string(gl.torsion_order()));
        auto sl = lattice::coset_structure(LatticeSpec(Group::SL, n), sigma);
        long long g = gcd_of_partition(lambda);
        detail::record(report, "sl_torsion_is_gcd " + tag, sl.torsion_order() == g,
                       "order=" + std::to_string(sl.torsion_order()));
        detail::record(report, "sl_torsion_cyclic " + tag, sl.torsion_invariants.size() <= 1);
        detail::record(report, "sl_generator_degree " + tag,
                       sl.generator_degree == (n / g) % n,
                       "degree=" + std::to_string(sl.generator_degree));
      } catch (const consistency_error& e) {
        detail::record(report, "coset_structure " + tag, false, e.what());
      }
      if (n <= 5) {
        for (auto group : {Group::GL, Group::SL}) {
          LatticeSpec spec(group, n);
          long long brute = lattice::brute_coset_count(spec, sigma);
          long long snf = lattice::coset_structure(spec, sigma).torsion_order();
          detail::record(report,
                         std::string("brute_oracle_") + numtheory::to_string(group) + " " + tag,
                         brute == snf,
                         "brute=" + std::to_string(brute) + " snf=" + std::to_string(snf));
        }
      }
    }
  }
  return report;
}

/// Idempotent identities over every composition of every m <= n.  The
/// sign-idempotent checks run per composition; the trivial-idempotent and
/// mixed checks depend only on n and run once per strand count.
inline SuiteReport run_hecke_suite(int max_n = 5) {
  if (max_n > 7)
    throw cap_exceeded("hecke suite: n > 7 (5040 basis elements) is beyond the cost model");
  SuiteReport report{"hecke", {}};
  auto append = [&report](int n, const hecke::IdentityReport& identities) {
    for (const auto& check : identities.checks)
      detail::record(report, "n=" + std::to_string(n) + " " + check.name, check.passed,
                     check.detail);
  };
  for (int n = 1; n <= max_n; ++n) {
    for (long long m = 1; m <= n; ++m)
      for (const Composition& alpha : partdom::compositions(m))
        append(n, hecke::verify_sign_identities(alpha, n));
    append(n, hecke::verify_trivial_identities(n));
  }
  return report;
}

/// Dominance-order survival criterion against the character-theoretic
/// multiplicity oracle, plus the induced-dimension conservation identity.
inline SuiteReport run_dominance_suite(int max_n = 7) {
  SuiteReport report{"dominance", {}};
  for (long long n = 0; n <= max_n; ++n) {
    auto lambdas = numtheory::partitions(n);
    for (const Composition& alpha : partdom::compositions(n)) {
      BigInt dim_total = 0;
      bool all_match = true;
      std::string first_mismatch;
      for (const Partition& lambda : lambdas) {
        BigInt mult = partdom::mn_multiplicity_oracle(alpha, lambda);
        if (partdom::sign_survives(alpha, lambda) != (mult > BigInt(0))) {
          all_match = false;
          if (first_mismatch.empty())
            first_mismatch = "alpha=" + alpha.to_string() + " lambda=" + lambda.to_string();
        }
        dim_total += mult * partdom::specht_dim(lambda);
      }
      detail::record(report, "criterion_matches_oracle alpha=" + alpha.to_string(), all_match,
                     first_mismatch);
      BigInt expected = factorial(static_cast<unsigned>(n));
      for (long long p : alpha.parts())
        expected = BigInt::div_exact(expected, factorial(static_cast<unsigned>(p)));
      detail::record(report, "induced_dimension alpha=" + alpha.to_string(),
                     dim_total == expected,
                     "got=" + dim_total.to_string() + " want=" + expected.to_string());
    }
  }
  return report;
}

/// The rectangle-reduction implication over every admissible decomposition.
inline SuiteReport run_knr_suite(int max_n = 8) {
  SuiteReport report{"knr", {}};
  for (long long n = 1; n <= max_n; ++n) {
    long long checked = 0, failed = 0;
    std::string first_failure;
    for (long long m = 1; m <= n; ++m) {
      for (long long ell = 1; ell * m <= n; ++ell) {
        long long r = n - ell * m;
        if (r >= m) continue;
        for (long long r1 = 0; r1 <= r; ++r1) {
          long long r2 = r - r1;
          for (const Composition& alpha : partdom::compositions(ell * m + r1)) {
            if (static_cast<long long>(alpha.length()) > ell) continue;
            for (const Composition& beta : partdom::compositions(r2)) {
              for (const Partition& lambda : numtheory::partitions(n)) {
                ++checked;
                if (!partdom::check_kNr_implication(n, ell, m, r1, r2, alpha, beta, lambda)) {
                  ++failed;
                  if (first_failure.empty())
                    first_failure = "n=" + std::to_string(n) + " l=" + std::to_string(ell) +
                                    " m=" + std::to_string(m) + " alpha=" + alpha.to_string() +
                                    " beta=" + beta.to_string() +
                                    " lambda=" + lambda.to_string();
                }
              }
            }
          }
        }
      }
    }
    detail::record(report,
                   "implication_exhaustive n=" + std::to_string(n) + " (" +
                       std::to_string(checked) + " tuples)",
                   failed == 0, first_failure);
  }
  return report;
}

/// The cyclic averaging bound on seeded random start-area sequences across
/// the standard slope set.
inline SuiteReport run_window_suite(std::uint64_t seed = 0, long long cases = 1000) {
  SuiteReport report{"window", {}};
  sampling::Rng rng(seed);
  for (const multiseg::SlopeK& k : sampling::standard_slopes()) {
    long long failures = 0;
    std::string witness;
    for (long long i = 0; i < cases; ++i) {
      multiseg::StartAreaSeq seq = sampling::random_start_area_seq(rng, k);
      long long ell = k.floor_k();
      try {
        multiseg::WindowChoice choice = multiseg::find_good_cyclic_shift(seq, ell, k);
        if (choice.window_sum * k.n0 < seq.total() * ell * k.N0) ++failures;
      } catch (const consistency_error& e) {
        ++failures;
        if (witness.empty()) witness = e.what();
      }
    }
    detail::record(report,
                   "averaging_bound k=" + k.to_string() + " cases=" + std::to_string(cases),
                   failures == 0, witness);
  }
  return report;
}

/// The divisor-sum consistency identity and the orbit-size census.
inline SuiteReport run_identity_suite(long long max_n = 500) {
  SuiteReport report{"identity", {}};
  long long bad = 0;
  std::string witness;
  for (long long n = 1; n <= max_n; ++n) {
    if (!numtheory::verify_id2_j2_j3(n)) {
      ++bad;
      if (witness.empty()) witness = "N=" + std::to_string(n);
    }
  }
  detail::record(report, "weighted_identity_to_" + std::to_string(max_n), bad == 0, witness);
  for (long long n = 1; n <= std::min<long long>(max_n, 24); ++n) {
    for (int k = 2; k <= 3; ++k) {
      auto census = numtheory::orbit_size_census(n, k);
      bool ok = true;
      for (long long d : numtheory::divisors(n))
        if (census[n / d] != numtheory::jordan_totient(k, d)) ok = false;
      detail::record(report, "orbit_census N=" + std::to_string(n) + " k=" + std::to_string(k),
                     ok);
    }
  }
  return report;
}

/// Three independent routes to the dimension formulas: the divisor
/// convolution, the gcd-power sum over partitions, and the per-class
/// coset-torsion sum through the Smith normal form.
inline SuiteReport run_three_route_suite(int max_n = 20) {
  using numtheory::Group;
  SuiteReport report{"three_route", {}};
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 2; k <= 3; ++k) {
      BigInt conv = numtheory::dirichlet_convolve(numtheory::seq_partition_count(),
                                                  numtheory::seq_jordan(k), n);
      BigInt gcd_sum = 0;
      BigInt snf_sum = 0;
      for (const Partition& lambda : numtheory::partitions(n)) {
        gcd_sum += BigInt(gcd_of_partition(lambda)).pow(static_cast<unsigned long long>(k));
        long long torsion =
            lattice::coset_structure(lattice::LatticeSpec(Group::SL, n),
                                     Permutation::from_cycle_type(lambda))
                .torsion_order();
        snf_sum += BigInt(torsion).pow(static_cast<unsigned long long>(k));
      }
      std::string tag = "N=" + std::to_string(n) + " k=" + std::to_string(k);
      detail::record(report, "sl_convolution_vs_gcd_sum " + tag, conv == gcd_sum,
                     conv.to_string() + " vs " + gcd_sum.to_string());
      detail::record(report, "sl_convolution_vs_snf_sum " + tag, conv == snf_sum,
                     conv.to_string() + " vs " + snf_sum.to_string());
    }
    // GL: every class contributes 1 through the SNF route
    BigInt gl_classes = 0;
    for (const Partition& lambda : numtheory::partitions(n)) {
      long long torsion =
          lattice::coset_structure(lattice::LatticeSpec(Group::GL, n),
                                   Permutation::from_cycle_type(lambda))
              .torsion_order();
      gl_classes += BigInt(torsion);
    }
    detail::record(report, "gl_class_count_vs_partition_count N=" + std::to_string(n),
                   gl_classes == numtheory::partition_count(n));
  }
  return report;
}

/// Seeded certificate sweep: every admissible (m, j) on random right-ordered
/// k-narrow multisegments must come out valid and replay bit-exactly.
inline SuiteReport run_certificate_suite(std::uint64_t seed = 0, long long cases = 500,
                                         long long max_size = 12) {
  SuiteReport report{"certificate", {}};
  sampling::Rng rng(seed);
  const auto& slopes = sampling::standard_slopes();
  long long produced = 0, invalid = 0, replay_failures = 0;
  std::string witness;
  for (long long i = 0; i < cases; ++i) {
    const multiseg::SlopeK& k = slopes[static_cast<std::size_t>(
        rng.range(0, static_cast<long long>(slopes.size()) - 1))];
    multiseg::Multisegment d = sampling::random_right_ordered_k_narrow(rng, k, max_size);
    long long ell = k.floor_k();
    long long max_m = d.size() * k.N0 / k.n0;
    for (long long m = 1; m <= max_m; ++m) {
      for (long long j = 1; j <= ell; ++j) {
        ++produced;
        multiseg::SurvivalCertificate cert = multiseg::certificate_e_mj(d, m, j);
        if (!cert.valid) {
          ++invalid;
          if (witness.empty())
            witness = d.to_string() + " m=" + std::to_string(m) + " j=" + std::to_string(j);
        } else if (!multiseg::replay_certificate(cert)) {
          ++replay_failures;
          if (witness.empty())
            witness = "replay " + d.to_string() + " m=" + std::to_string(m) +
                      " j=" + std::to_string(j);
        }
      }
    }
  }
  detail::record(report,
                 "certificates_valid (" + std::to_string(produced) + " from " +
                     std::to_string(cases) + " inputs, seed " + std::to_string(seed) + ")",
                 invalid == 0, witness);
  detail::record(report, "certificates_replay", replay_failures == 0, witness);
  // the rectangular shadow: k=2, n=4, m=4 violates m <= n/k and is refused
  bool rejected = false;
  try {
    multiseg::Multisegment rect(multiseg::SlopeK(2, 1),
                                {{multiseg::Start{"L", 0}, 2}, {multiseg::Start{"L", 1}, 2}});
    multiseg::certificate_e_mj(rect, 4, 1);
  } catch (const input_error&) {
    rejected = true;
  }
  detail::record(report, "rectangular_shadow_rejected", rejected);
  return report;
}

}  // namespace skeincalc::verify
