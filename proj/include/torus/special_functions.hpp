#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace torus::special {

/// Arguments accepted by the power series evaluators.
inline constexpr double kMaxSeriesArgument = 30.0;

/// Relative threshold on the next term at which the series is truncated.
inline constexpr long double kSeriesCutoff = 1e-16L;

struct SeriesValue {
  long double value = 0;
  /// Number of terms summed, i.e. index of the first omitted term.
  int terms = 0;
  /// Magnitude of the first omitted term.
  long double first_omitted = 0;
};

/// Smallest index from which the J0 series terms decrease monotonically in
/// magnitude: |t_{k+1}| / |t_k| = (x/2)^2 / (k+1)^2 < 1 for all k >= this.
inline int decreasing_from_index(double x) {
  const double half = std::fabs(x) / 2;
  return static_cast<int>(std::ceil(half));
}

namespace detail {

// Neumaier compensated accumulator.
struct CompensatedSum {
  long double sum = 0;
  long double carry = 0;

  void add(long double v) {
    const long double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      carry += (sum - t) + v;
    else
      carry += (v - t) + sum;
    sum = t;
  }
  long double value() const { return sum + carry; }
};

inline void check_argument(double x, const char* who) {
  if (!std::isfinite(x) || std::fabs(x) > kMaxSeriesArgument)
    throw std::domain_error(std::string(who) + ": |x| must not exceed 30");
}

// Sum_{k>=0} (-1)^k (x/2)^(2k+order) / (k! (k+order)!) for order 0 or 1.
inline SeriesValue bessel_series(double x, int order) {
  const long double half = static_cast<long double>(x) / 2;
  const long double q = half * half;
  long double term = order == 0 ? 1.0L : half;
  CompensatedSum acc;
  int k = 0;
  for (;;) {
    acc.add(term);
    ++k;
    term *= -q / (static_cast<long double>(k) * static_cast<long double>(k + order));
    // Past k >= x/2 the terms decrease in magnitude, so the first omitted
    // term bounds the remainder of the alternating tail.
    if (k >= decreasing_from_index(x) && std::fabs(term) < kSeriesCutoff * (1 + std::fabs(acc.value()))) break;
  }
  return {acc.value(), k, std::fabs(term)};
}

} // namespace detail

/// J0 by its alternating power series, with truncation diagnostics.
inline SeriesValue bessel_j0_series(double x) {
  detail::check_argument(x, "bessel_j0");
  return detail::bessel_series(x, 0);
}

inline double bessel_j0(double x) { return static_cast<double>(bessel_j0_series(x).value); }

/// J1 by its power series; J0' = -J1.
inline double bessel_j1(double x) {
  detail::check_argument(x, "bessel_j1");
  return static_cast<double>(detail::bessel_series(x, 1).value);
}

struct BesselZero {
  double value = 0;
  double residual = 0;
  double tolerance = 0;
};

/// Bisection for a sign change of J0 on [lo, hi] down to the given width.
inline double bisect_j0_zero(double lo, double hi, double width) {
  long double f_lo = bessel_j0_series(lo).value;
  const long double f_hi = bessel_j0_series(hi).value;
  if (f_lo == 0) return lo;
  if (f_hi == 0) return hi;
  if ((f_lo > 0) == (f_hi > 0))
    throw std::runtime_error("bisect_j0_zero: J0 has no sign change on the bracket; series evaluation is broken");
  while (hi - lo > width) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const long double f_mid = bessel_j0_series(mid).value;
    if (f_mid == 0) return mid;
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

/// One Newton step x + J0(x)/J1(x) in extended precision.
inline double newton_step_j0(double x) {
  const long double j0 = bessel_j0_series(x).value;
  const long double j1 = detail::bessel_series(x, 1).value;
  return static_cast<double>(static_cast<long double>(x) + j0 / j1);
}

/// Newton polish from x0; stops when an iterate repeats or after 8 steps.
inline double newton_polish_j0(double x0) {
  double x = x0;
  for (int i = 0; i < 8; ++i) {
    const double next = newton_step_j0(x);
    if (next == x) break;
    x = next;
  }
  return x;
}

/// First positive zero of J0, found on [2, 3].
inline BesselZero compute_j01() {
  constexpr double tolerance = 1e-12;
  const double bracketed = bisect_j0_zero(2.0, 3.0, 1e-14);
  const double value = newton_polish_j0(bracketed);
  const double residual = std::fabs(bessel_j0(value));
  if (!(residual <= tolerance) || !(value > 2.40 && value < 2.41))
    throw std::runtime_error("compute_j01: root of J0 failed validation");
  return {value, residual, tolerance};
}

/// Cached j_{0,1}.
inline const BesselZero& j01() {
  static const BesselZero zero = compute_j01();
  return zero;
}

/// pi * j_{0,1}^2, the disk value of lambda_1 * area.
inline double faber_krahn_constant() {
  static const double value = std::numbers::pi * j01().value * j01().value;
  return value;
}

/// j_{0,1}^2 / (4 pi), the ratio below which an eigenvalue cannot be Courant-sharp.
inline double ratio_bound() { return faber_krahn_constant() / (4.0 * std::numbers::pi * std::numbers::pi); }

} // namespace torus::special
