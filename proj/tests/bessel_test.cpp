#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tweedie/bessel.hpp"

using namespace tweedie;

namespace {

// Half-integer closed forms, the independent reference for these tests:
//   I_{1/2}(x) = sqrt(2/(pi x)) sinh x,
//   I_{3/2}(x) = sqrt(2/(pi x)) (cosh x - sinh(x)/x).
double log_i_half(double x) {
  if (x < 300.0) return 0.5 * std::log(2.0 / (M_PI * x)) + std::log(std::sinh(x));
  return 0.5 * std::log(2.0 / (M_PI * x)) + x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
}

// Evaluated in extended precision: the two terms cancel to O(x) for small x.
double ratio_half_closed(double x) {
  const long double xl = x;
  return static_cast<double>(1.0L / tanhl(xl) - 1.0L / xl);
}

}  // namespace

TEST_CASE("log_bessel_i matches the half-integer closed form") {
  for (double x : {1e-8, 1e-3, 0.1, 0.5, 1.0, 3.0, 10.0, 50.0, 200.0, 420.0, 700.0}) {
    const double expected = log_i_half(x);
    CHECK(log_bessel_i(0.5, x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("log_bessel_i boundary values") {
  CHECK(log_bessel_i(0.0, 0.0) == 0.0);                       // I_0(0) = 1
  CHECK(log_bessel_i(2.0, 0.0) == -INFINITY);                 // I_nu(0) = 0 for nu > 0
  CHECK(log_bessel_i(0.5, 1.0) ==
        doctest::Approx(std::log(std::sqrt(2.0 / M_PI) * std::sinh(1.0))).epsilon(1e-13));
  CHECK_THROWS_AS(log_bessel_i(1.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(log_bessel_i(1.0, NAN), std::domain_error);
  CHECK_THROWS_AS(log_bessel_i(-0.5, 1.0), std::domain_error);
}

TEST_CASE("log_bessel_i agrees with the C++17 standard function at moderate arguments") {
  for (double nu : {0.0, 0.3, 1.0, 2.0, 3.7}) {
    for (double x : {1e-2, 0.5, 2.0, 20.0, 120.0, 600.0}) {
      const double ref = std::log(std::cyl_bessel_i(nu, x));
      if (!std::isfinite(ref)) continue;
      CHECK(log_bessel_i(nu, x) == doctest::Approx(ref).epsilon(1e-11));
    }
  }
}

TEST_CASE("log_bessel_i stays finite far beyond the overflow point of I itself") {
  const double v = log_bessel_i(1.0, 5000.0);
  CHECK(std::isfinite(v));
  // Leading asymptotic order e^x / sqrt(2 pi x).
  CHECK(v == doctest::Approx(5000.0 - 0.5 * std::log(2.0 * M_PI * 5000.0)).epsilon(1e-3));
}

TEST_CASE("bessel_ratio half-integer identity on [1e-4, 50]") {
  for (int i = 0; i <= 2000; ++i) {
    const double x = 1e-4 * std::pow(50.0 / 1e-4, i / 2000.0);
    const double expected = ratio_half_closed(x);
    CHECK(std::fabs(bessel_ratio(0.5, x) - expected) <= 1e-12 * std::max(1.0, expected));
  }
}

TEST_CASE("bessel_ratio limits and domain") {
  CHECK(bessel_ratio(0.5, 0.0) == 0.0);
  // Leading series term x / (2 (nu + 1)).
  CHECK(bessel_ratio(3.0, 1e-12) == doctest::Approx(1.25e-13).epsilon(1e-10));
  const double big = bessel_ratio(0.0, 700.0);
  CHECK(big > 0.999);
  CHECK(big < 1.0);
  CHECK_THROWS_AS(bessel_ratio(1.0, -0.1), std::domain_error);
}

TEST_CASE("bessel_ratio is in [0,1) and strictly increasing") {
  for (double nu : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    double prev = 0.0;
    for (int i = 1; i <= 400; ++i) {
      const double x = 1e-3 * std::pow(800.0 / 1e-3, i / 400.0);
      const double r = bessel_ratio(nu, x);
      CHECK(r > prev);
      CHECK(r < 1.0);
      prev = r;
    }
  }
}

TEST_CASE("bessel_ratio agrees with exp(log I difference)") {
  for (double nu : {0.0, 0.5, 1.0, 2.0, 4.5}) {
    for (int i = 0; i <= 60; ++i) {
      const double x = 1e-6 * std::pow(600.0 / 1e-6, i / 60.0);
      const double via_logs = std::exp(log_bessel_i(nu + 1.0, x) - log_bessel_i(nu, x));
      CHECK(bessel_ratio(nu, x) == doctest::Approx(via_logs).epsilon(1e-10));
    }
  }
}

TEST_CASE("erf reference points") {
  CHECK(erf_checked(0.0) == 0.0);
  CHECK(erf_checked(10.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(erf_checked(1.0) == doctest::Approx(0.84270079294971487).epsilon(1e-14));
  CHECK(erf_checked(-1.0) == -erf_checked(1.0));
  CHECK_THROWS_AS(erf_checked(NAN), std::domain_error);
}

TEST_CASE("coth_stable matches 1/tanh away from the series region") {
  for (double u : {1e-5, 1e-4, 1e-3, 0.1, 1.0, 5.0, 18.0, 25.0, 100.0, 500.0}) {
    CHECK(coth_stable(u) == doctest::Approx(1.0 / std::tanh(u)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(coth_stable(0.0), std::domain_error);
}

TEST_CASE("log1mexp is accurate in both branches") {
  for (double s : {1e-12, 1e-6, 0.1, 0.7, 2.0, 40.0}) {
    const long double exact = logl(-expm1l(-(long double)s));
    CHECK(log1mexp(s) == doctest::Approx((double)exact).epsilon(1e-13));
  }
}
