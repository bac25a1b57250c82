#pragma once

// Spectrum of the Laplacian on the flat square torus (R/Z)^2.
//
// Every eigenvalue has the form 4*pi^2*s with s = m^2 + n^2, (m, n) in N^2.
// Eigenvalues are identified by the integer s throughout; the floating value
// 4*pi^2*s is derived only for display and for the real-valued bounds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

inline constexpr double kFourPiSquared = 4.0 * std::numbers::pi * std::numbers::pi;

/// Largest cutoff accepted by build_spectrum_table.
inline constexpr std::int64_t kMaxCutoffS = 4'000'000;

/// Distance to the nearest integer below which an s-unit value is snapped.
inline constexpr double kSnapTolerance = 1e-9;

/// floor(sqrt(v)) computed exactly for v >= 0.
inline std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

struct LatticeIndex {
  std::int64_t m = 0;
  std::int64_t n = 0;

  std::int64_t norm() const { return m * m + n * n; }
  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

/// Dimension of the eigenspace spanned by the trigonometric products of
/// frequency (m, n): 1 for (0,0), 2 on the axes, 4 in the open quadrant.
inline std::int64_t multiplicity_of(const LatticeIndex& idx) {
  if (idx.m < 0 || idx.n < 0) throw std::invalid_argument("multiplicity_of: lattice index must lie in N^2");
  if (idx.m == 0 && idx.n == 0) return 1;
  if (idx.m == 0 || idx.n == 0) return 2;
  return 4;
}

/// One distinct eigenvalue 4*pi^2*s.
struct EigenvalueClass {
  std::int64_t s = 0;
  /// Ordered by m descending (so n ascending).
  std::vector<LatticeIndex> representatives;
  std::int64_t multiplicity = 0;
  std::int64_t first_index = 0;
  std::int64_t last_index = 0;

  double value() const { return kFourPiSquared * static_cast<double>(s); }
};

/// Minimal k with lambda_k equal to the class eigenvalue.
inline std::int64_t nu_of(const EigenvalueClass& cls) { return cls.first_index; }

/// A spectral parameter, held in units of 4*pi^2.
///
/// Absolute inputs within kSnapTolerance of an integer number of s-units are
/// snapped onto it, so eigenvalues passed as 4*pi^2*s compare exactly.
class Lambda {
public:
  static Lambda absolute(double value) { return in_s_units(value / kFourPiSquared); }

  static Lambda in_s_units(double s) {
    if (!(s >= -kSnapTolerance) || !std::isfinite(s))
      throw std::invalid_argument("Lambda: value must be finite and non-negative");
    const double nearest = std::round(s);
    if (std::abs(s - nearest) <= kSnapTolerance) s = nearest;
    return Lambda(s);
  }

  static Lambda eigenvalue(std::int64_t s) { return in_s_units(static_cast<double>(s)); }

  double s_units() const { return s_; }
  double absolute() const { return s_ * kFourPiSquared; }
  /// Largest integer norm whose eigenvalue does not exceed this value.
  std::int64_t floor_s() const { return static_cast<std::int64_t>(std::floor(s_)); }

private:
  explicit Lambda(double s) : s_(s) {}
  double s_;
};

/// Ordered table of distinct eigenvalues with cumulative multiplicities.
/// Immutable once built.
class SpectrumTable {
public:
  SpectrumTable(std::vector<EigenvalueClass> classes, std::int64_t cutoff_s)
      : classes_(std::move(classes)), cutoff_s_(cutoff_s) {}

  const std::vector<EigenvalueClass>& classes() const { return classes_; }
  std::int64_t cutoff_s() const { return cutoff_s_; }
  std::size_t size() const { return classes_.size(); }

  /// Number of eigenvalues, with multiplicity, up to the cutoff.
  std::int64_t total_count() const { return classes_.empty() ? 0 : classes_.back().last_index; }

  /// Class with norm s, or nullptr when s is not a sum of two squares.
  const EigenvalueClass* find(std::int64_t s) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), s,
                               [](const EigenvalueClass& c, std::int64_t v) { return c.s < v; });
    return it != classes_.end() && it->s == s ? &*it : nullptr;
  }

  /// Class whose index range contains k, or nullptr if k is beyond the table.
  const EigenvalueClass* class_of_index(std::int64_t k) const {
    if (k < 1) return nullptr;
    auto it = std::lower_bound(classes_.begin(), classes_.end(), k,
                               [](const EigenvalueClass& c, std::int64_t v) { return c.last_index < v; });
    return it != classes_.end() ? &*it : nullptr;
  }

  /// Sum of multiplicities over classes with s <= s_max (requires s_max <= cutoff).
  std::int64_t cumulative_count(std::int64_t s_max) const {
    if (s_max > cutoff_s_) throw std::out_of_range("SpectrumTable::cumulative_count: beyond cutoff");
    auto it = std::upper_bound(classes_.begin(), classes_.end(), s_max,
                               [](std::int64_t v, const EigenvalueClass& c) { return v < c.s; });
    return it == classes_.begin() ? 0 : std::prev(it)->last_index;
  }

private:
  std::vector<EigenvalueClass> classes_;
  std::int64_t cutoff_s_;
};

inline SpectrumTable build_spectrum_table(std::int64_t cutoff_s) {
  if (cutoff_s < 0) throw std::invalid_argument("build_spectrum_table: cutoff_s must be non-negative");
  if (cutoff_s > kMaxCutoffS)
    throw std::length_error("build_spectrum_table: cutoff_s " + std::to_string(cutoff_s) +
                            " exceeds the limit " + std::to_string(kMaxCutoffS));

  std::vector<LatticeIndex> points;
  const std::int64_t m_max = isqrt(cutoff_s);
  for (std::int64_t m = m_max; m >= 0; --m) {
    const std::int64_t n_max = isqrt(cutoff_s - m * m);
    for (std::int64_t n = 0; n <= n_max; ++n) points.push_back({m, n});
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const LatticeIndex& a, const LatticeIndex& b) { return a.norm() < b.norm(); });

  std::vector<EigenvalueClass> classes;
  std::int64_t cumulative = 0;
  for (std::size_t i = 0; i < points.size();) {
    EigenvalueClass cls;
    cls.s = points[i].norm();
    for (; i < points.size() && points[i].norm() == cls.s; ++i) {
      cls.representatives.push_back(points[i]);
      cls.multiplicity += multiplicity_of(points[i]);
    }
    cls.first_index = cumulative + 1;
    cumulative += cls.multiplicity;
    cls.last_index = cumulative;
    classes.push_back(std::move(cls));
  }
  return SpectrumTable(std::move(classes), cutoff_s);
}

inline bool is_sum_of_two_squares(std::int64_t s) {
  if (s < 0) return false;
  for (std::int64_t m = 0; m * m <= s; ++m) {
    const std::int64_t r = s - m * m;
    const std::int64_t n = isqrt(r);
    if (n * n == r) return true;
  }
  return false;
}

/// #{(m, n) in N^2 : 4*pi^2*(m^2 + n^2) <= lambda}.
inline std::int64_t lattice_count(const Lambda& lam) {
  const std::int64_t s_max = lam.floor_s();
  std::int64_t count = 0;
  for (std::int64_t m = 0; m * m <= s_max; ++m) count += isqrt(s_max - m * m) + 1;
  return count;
}
inline std::int64_t lattice_count(double lam) { return lattice_count(Lambda::absolute(lam)); }

/// Counting function N(lambda) from the lattice count:
/// N = 4 n(lambda) - 4 floor(sqrt(lambda) / (2 pi)) - 3.
inline std::int64_t counting_function_exact(const Lambda& lam) {
  return 4 * lattice_count(lam) - 4 * isqrt(lam.floor_s()) - 3;
}
inline std::int64_t counting_function_exact(double lam) { return counting_function_exact(Lambda::absolute(lam)); }

/// Explicit lower bound lambda/(4 pi) - 2 sqrt(lambda)/pi - 3 <= N(lambda).
inline double weyl_lower_bound(const Lambda& lam) {
  const double x = lam.absolute();
  return x / (4.0 * std::numbers::pi) - 2.0 * std::sqrt(x) / std::numbers::pi - 3.0;
}
inline double weyl_lower_bound(double lam) { return weyl_lower_bound(Lambda::absolute(lam)); }

/// Quarter-disk area lambda/(16 pi), a lower bound for lattice_count.
inline double lattice_area_bound(const Lambda& lam) { return lam.absolute() / (16.0 * std::numbers::pi); }

/// Class holding the k-th eigenvalue counted with multiplicity. The search
/// table starts from a Weyl-law estimate and doubles its cutoff until it
/// reaches index k.
inline EigenvalueClass lambda_k(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("lambda_k: index must be >= 1");
  std::int64_t cutoff = std::max<std::int64_t>(16, static_cast<std::int64_t>(k / std::numbers::pi) + 16);
  for (;;) {
    SpectrumTable table = build_spectrum_table(std::min(cutoff, kMaxCutoffS));
    if (const EigenvalueClass* cls = table.class_of_index(k)) return *cls;
    if (cutoff >= kMaxCutoffS) throw std::length_error("lambda_k: index beyond the supported spectrum");
    cutoff *= 2;
  }
}

/// Uses `table` when it reaches index k, otherwise extends.
inline EigenvalueClass lambda_k(const SpectrumTable& table, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("lambda_k: index must be >= 1");
  if (const EigenvalueClass* cls = table.class_of_index(k)) return *cls;
  return lambda_k(k);
}

} // namespace torus
