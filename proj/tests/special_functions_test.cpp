#include <cfloat>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "torus/special_functions.hpp"

namespace {

using namespace torus::special;

constexpr double kPi = std::numbers::pi;

double oracle_j01() {
  static const double v = static_cast<double>(oracle::j01());
  return v;
}

TEST(BesselJ0, ConstantTerm) { EXPECT_EQ(bessel_j0(0.0), 1.0); }

TEST(BesselJ0, AgreesWithHighPrecisionSeries) {
  for (double x = -30.0; x <= 30.0; x += 0.37) {
    const SeriesValue v = bessel_j0_series(x);
    const oracle::BigFloat exact = oracle::bessel_series(oracle::BigFloat(x), 0);
    const double abs_sum = static_cast<double>(oracle::bessel_j0_abs_series(oracle::BigFloat(x)));
    // truncation is bounded by the first omitted term; rounding by the
    // magnitude of the largest partial sums
    const double bound = static_cast<double>(v.first_omitted) + 64 * LDBL_EPSILON * abs_sum + 1e-300;
    EXPECT_LE(std::fabs(static_cast<double>(v.value - static_cast<long double>(exact))), bound) << "x=" << x;
  }
}

TEST(BesselJ0, NearZeroIsAccurate) {
  const double x = 2.404825557695773;
  EXPECT_LT(std::fabs(bessel_j0(x)), 1e-10);
  const double exact = static_cast<double>(oracle::bessel_series(oracle::BigFloat(x), 0));
  EXPECT_NEAR(bessel_j0(x), exact, 1e-17);
}

TEST(BesselJ0, MatchesStandardLibrary) {
  for (double x : {0.1, 0.5, 1.0, 2.0, 2.5, 5.0, 8.0, 12.0}) EXPECT_NEAR(bessel_j0(x), std::cyl_bessel_j(0.0, x), 1e-13) << x;
  for (double x : {0.1, 1.0, 2.4, 5.0}) EXPECT_NEAR(bessel_j1(x), std::cyl_bessel_j(1.0, x), 1e-13) << x;
}

TEST(BesselJ0, RejectsOutOfRange) {
  EXPECT_THROW(bessel_j0(30.5), std::domain_error);
  EXPECT_THROW(bessel_j0(-31.0), std::domain_error);
  EXPECT_THROW(bessel_j0(std::nan("")), std::domain_error);
  EXPECT_NO_THROW(bessel_j0(30.0));
}

TEST(BesselJ0, TruncationIndexIsInDecreasingTail) {
  for (double x = 0.0; x <= 30.0; x += 0.25) {
    const SeriesValue v = bessel_j0_series(x);
    const int k0 = decreasing_from_index(x);
    EXPECT_GE(v.terms, k0) << x;
    // ratio |t_{k+1}/t_k| = (x/2)^2/(k+1)^2 < 1 from k0 on
    const double half = x / 2;
    EXPECT_LT(half * half, static_cast<double>(k0 + 1) * (k0 + 1)) << x;
    EXPECT_LE(static_cast<double>(k0), half + 1) << x;
  }
}

TEST(J01, MatchesBisectionOracle) {
  // oracle: 170 bisection steps on the 50-digit series
  EXPECT_NEAR(oracle_j01(), 2.404825557695773, 1e-15);
  const BesselZero z = j01();
  EXPECT_NEAR(z.value, oracle_j01(), 1e-12);
  EXPECT_NEAR(z.value, 2.404825557695773, 1e-12);
  EXPECT_LE(z.residual, z.tolerance);
  EXPECT_LE(z.tolerance, 1e-12);
  EXPECT_GT(z.value, 2.40);
  EXPECT_LT(z.value, 2.41);
}

TEST(J01, ZeroOfComputedSeries) { EXPECT_LE(std::fabs(bessel_j0(j01().value)), 1e-12); }

TEST(J01, NewtonFixedPointAndBisectionAgree) {
  const double x = j01().value;
  EXPECT_LE(std::fabs(newton_step_j0(x) - x), 1e-12);
  const double bisected = bisect_j0_zero(2.0, 3.0, 1e-14);
  EXPECT_LE(std::fabs(bisected - x), 1e-10);
}

TEST(J01, Deterministic) {
  const BesselZero a = compute_j01();
  const BesselZero b = compute_j01();
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.residual, b.residual);
  EXPECT_EQ(a.value, j01().value);
}

TEST(J01, BisectionNeedsSignChange) { EXPECT_THROW(bisect_j0_zero(3.0, 4.0, 1e-14), std::runtime_error); }

TEST(Constants, PrintedDigits) {
  const double j = oracle_j01();
  EXPECT_NEAR(faber_krahn_constant(), kPi * j * j, 1e-12);
  EXPECT_NEAR(faber_krahn_constant(), 18.168, 5e-4);
  EXPECT_NEAR(ratio_bound(), 0.4602, 5e-5);
  EXPECT_NEAR(faber_krahn_constant() / (4 * kPi), j * j / 4, 1e-12);
  EXPECT_NEAR(faber_krahn_constant(), 4 * kPi * kPi * ratio_bound(), 1e-12);
}

} // namespace
