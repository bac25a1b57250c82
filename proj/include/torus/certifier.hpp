#pragma once

// Courant-sharp certification for the flat square torus.
//
// A Courant-sharp eigenvalue with nu >= 4 must satisfy pi j01^2 nu <= lambda.
// Two routes rule that out:
//   * for nu above threshold_k(), the explicit Weyl bound on lambda_nu is
//     already smaller than pi j01^2 nu;
//   * for the finitely many remaining nu, the ratio lambda / (4 pi^2 nu) is
//     compared with j01^2 / (4 pi) directly.
// The eigenvalues with nu < 4 are confirmed by exhibiting an eigenfunction
// whose nodal domain count equals nu.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torus/nodal_lab.hpp"
#include "torus/rational.hpp"
#include "torus/special_functions.hpp"
#include "torus/spectrum.hpp"

namespace torus {

/// Smallest domain count covered by the Faber-Krahn route (a domain of area
/// at most 1/k must have area at most 1/pi).
inline constexpr std::int64_t kMinPleijelCount = 4;

/// Minimum eigenvalue carrying an eigenfunction with k >= 4 nodal domains.
inline double pleijel_lower_bound(std::int64_t k) {
  if (k < kMinPleijelCount)
    throw std::invalid_argument("pleijel_lower_bound: requires k >= 4 so that the smallest nodal domain has area <= 1/pi (got k=" +
                                std::to_string(k) + ")");
  return special::faber_krahn_constant() * static_cast<double>(k);
}

/// Upper bound (4 + 2 sqrt(4 + pi (k + 3)))^2 on lambda_k, from the explicit Weyl bound.
inline double upper_bound_lambda_k(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("upper_bound_lambda_k: k must be non-negative");
  const double root = 4.0 + 2.0 * std::sqrt(4.0 + std::numbers::pi * static_cast<double>(k + 3));
  return root * root;
}

/// Index beyond which upper_bound_lambda_k(k) < pleijel_lower_bound(k).
inline double threshold_k() {
  const double j = special::j01().value;
  const double j2 = j * j;
  const double pi = std::numbers::pi;
  const double num = 4.0 * j + 2.0 * std::sqrt(4.0 * j2 + 3.0 * pi * (j2 - 4.0));
  return num * num / (pi * (j2 - 4.0) * (j2 - 4.0));
}

/// Smallest integer index excluded by the threshold route.
inline std::int64_t threshold_index() { return static_cast<std::int64_t>(std::floor(threshold_k())) + 1; }

/// lambda_k / (4 k pi^2) = s / k, exactly.
inline Rational ratio(const SpectrumTable& table, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("ratio: k must be >= 1");
  return Rational(lambda_k(table, k).s, k);
}

inline Rational ratio(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("ratio: k must be >= 1");
  return Rational(lambda_k(k).s, k);
}

/// nu-values with 4 <= nu < threshold_index(), read off the cumulative multiplicities.
inline std::vector<std::int64_t> candidate_indices(const SpectrumTable& table) {
  const std::int64_t limit = threshold_index();
  if (table.total_count() < limit)
    throw std::invalid_argument("candidate_indices: spectrum table reaches index " +
                                std::to_string(table.total_count()) + ", needs at least " + std::to_string(limit));
  std::vector<std::int64_t> out;
  for (const EigenvalueClass& cls : table.classes()) {
    const std::int64_t nu = nu_of(cls);
    if (nu >= limit) break;
    if (nu >= kMinPleijelCount) out.push_back(nu);
  }
  return out;
}

enum class Verdict { CourantSharpConfirmed, ExcludedByThreshold, ExcludedByRatio, RequiresNodalCheck, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CourantSharpConfirmed: return "courant_sharp_confirmed";
    case Verdict::ExcludedByThreshold: return "excluded_by_threshold";
    case Verdict::ExcludedByRatio: return "excluded_by_ratio";
    case Verdict::RequiresNodalCheck: return "requires_nodal_check";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Eigenfunction offered as evidence that mu == nu.
struct Witness {
  std::string description;
  std::int64_t mu = 0;
  int grid_size = 0;
};

struct CertificationVerdict {
  std::int64_t k = 0;
  std::int64_t lam_over_4pi2 = 0;
  std::int64_t nu = 0;
  Verdict verdict = Verdict::RequiresNodalCheck;
  std::optional<Rational> ratio;
  /// Threshold route: upper_bound_lambda_k(nu). Ratio route: j01^2 / (4 pi).
  std::optional<double> bound_used;
  /// Threshold route: pleijel_lower_bound(nu).
  std::optional<double> pleijel_bound;
  std::optional<Witness> witness;
};

/// Index-level view: each k inherits the verdict of the eigenvalue it carries.
struct IndexVerdict {
  std::int64_t k = 0;
  std::int64_t nu = 0;
  std::int64_t lam_over_4pi2 = 0;
  Verdict verdict = Verdict::RequiresNodalCheck;
};

struct RatioRow {
  std::int64_t k = 0;
  Rational ratio{0, 1};
};

struct CertificationReport {
  /// One entry per distinct eigenvalue with nu <= threshold_index().
  std::vector<CertificationVerdict> verdicts;
  std::vector<IndexVerdict> indices;
  double threshold_k = 0;
  double ratio_bound = 0;
  std::vector<RatioRow> ratio_table;
  std::vector<std::int64_t> courant_sharp_indices;
};

/// Relative gap below which a ratio comparison is reported as inconclusive.
inline constexpr double kRatioTieTolerance = 1e-12;

/// Ratio-route verdict for s / nu against j01^2 / (4 pi).
inline Verdict ratio_verdict(const Rational& r, double bound) {
  const double value = r.to_double();
  if (std::fabs(value - bound) <= kRatioTieTolerance * bound) return Verdict::Inconclusive;
  return value < bound ? Verdict::ExcludedByRatio : Verdict::RequiresNodalCheck;
}

/// Threshold-route verdict; requires nu > threshold_k().
inline CertificationVerdict threshold_verdict(const EigenvalueClass& cls) {
  CertificationVerdict v;
  v.k = v.nu = nu_of(cls);
  v.lam_over_4pi2 = cls.s;
  if (static_cast<double>(v.nu) <= threshold_k())
    throw std::invalid_argument("threshold_verdict: nu=" + std::to_string(v.nu) + " is below the threshold");
  v.bound_used = upper_bound_lambda_k(v.nu);
  v.pleijel_bound = pleijel_lower_bound(v.nu);
  v.verdict = *v.bound_used < *v.pleijel_bound ? Verdict::ExcludedByThreshold : Verdict::Inconclusive;
  return v;
}

/// Eigenfunction used to witness mu == nu for a low eigenvalue: the constant
/// for s = 0, else the sine along the first representative.
inline Eigenfunction witness_eigenfunction(const EigenvalueClass& cls) {
  if (cls.s == 0) return Eigenfunction::constant();
  const LatticeIndex& rep = cls.representatives.front();
  return Eigenfunction::sine_mode(rep.m, rep.n);
}

inline std::string describe_witness(const EigenvalueClass& cls) {
  if (cls.s == 0) return "u(x,y) = 1";
  const LatticeIndex& rep = cls.representatives.front();
  std::string arg;
  if (rep.m != 0) arg += (rep.m == 1 ? "" : std::to_string(rep.m)) + "x";
  if (rep.n != 0) arg += (arg.empty() ? "" : " + ") + (rep.n == 1 ? "" : std::to_string(rep.n)) + "y";
  return "u(x,y) = sin(2 pi (" + arg + "))";
}

/// Verdict for any eigenvalue class of the table.
inline CertificationVerdict certify_class(const EigenvalueClass& cls, int witness_grid = kDefaultGridSize) {
  const std::int64_t nu = nu_of(cls);
  if (static_cast<double>(nu) > threshold_k()) return threshold_verdict(cls);

  CertificationVerdict v;
  v.k = v.nu = nu;
  v.lam_over_4pi2 = cls.s;
  v.ratio = Rational(cls.s, nu);
  if (nu >= kMinPleijelCount) {
    v.bound_used = special::ratio_bound();
    v.verdict = ratio_verdict(*v.ratio, *v.bound_used);
    return v;
  }

  v.verdict = Verdict::RequiresNodalCheck;
  const Eigenfunction u = witness_eigenfunction(cls);
  const NodalDecomposition dec = count_nodal_domains(u, witness_grid, kDefaultZeroTol);
  v.witness = Witness{describe_witness(cls), dec.mu, dec.grid_size};
  if (dec.mu == nu) v.verdict = Verdict::CourantSharpConfirmed;
  return v;
}

/// Verdict for the eigenvalue carrying index k (k >= 1).
inline CertificationVerdict verdict_for_index(std::int64_t k) {
  CertificationVerdict v = certify_class(lambda_k(k));
  v.k = k;
  return v;
}

/// Certification over every distinct eigenvalue up to the first nu beyond
/// the threshold.
inline CertificationReport certify_all(int witness_grid = kDefaultGridSize) {
  const std::int64_t limit = threshold_index();
  std::int64_t cutoff = 16;
  SpectrumTable table = build_spectrum_table(cutoff);
  while (table.total_count() < limit) table = build_spectrum_table(cutoff *= 2);

  CertificationReport report;
  report.threshold_k = threshold_k();
  report.ratio_bound = special::ratio_bound();

  for (const EigenvalueClass& cls : table.classes()) {
    if (nu_of(cls) > limit) break;
    report.verdicts.push_back(certify_class(cls, witness_grid));
    const CertificationVerdict& v = report.verdicts.back();
    for (std::int64_t k = cls.first_index; k <= cls.last_index; ++k) {
      report.indices.push_back({k, v.nu, cls.s, v.verdict});
      if (v.verdict == Verdict::CourantSharpConfirmed) report.courant_sharp_indices.push_back(k);
    }
  }
  for (std::int64_t k : candidate_indices(table)) report.ratio_table.push_back({k, ratio(table, k)});
  return report;
}

} // namespace torus
