#include "tweedie/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tweedie {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

// Power series sum S(nu, x) = sum_k c_k,   c_0 = 1,
// c_{k+1} = c_k * (x^2/4) / ((k+1)(nu+k+1)),
// so that I_nu(x) = (x/2)^nu / Gamma(nu+1) * S. All terms are positive, so
// there is no cancellation; the running sum is rescaled when it grows large
// and the scale is returned as a log offset.
double log_series_sum(double nu, double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0, log_scale = 0.0;
  for (int k = 0; k < 100000; ++k) {
    term *= q / ((k + 1.0) * (nu + k + 1.0));
    sum += term;
    if (term < sum * 1e-17) break;
    if (sum > 1e280) {
      sum *= 1e-280;
      term *= 1e-280;
      log_scale += 280.0 * std::log(10.0);
    }
  }
  return std::log(sum) + log_scale;
}

// Asymptotic expansion: I_nu(x) ~ e^x / sqrt(2 pi x) * A(nu, x),
// A = sum_k (-1)^k a_k, a_k = prod_{j=1..k} (4nu^2 - (2j-1)^2) / (k 8x).
// Truncated at the smallest term; adequate for x >= max(400, 4 nu^2).
double asymptotic_factor(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0, prev = std::numeric_limits<double>::max();
  for (int k = 1; k <= 40; ++k) {
    term *= -(mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * x * k);
    if (std::fabs(term) >= prev) break;  // divergence onset
    sum += term;
    prev = std::fabs(term);
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return sum;
}

bool use_series(double nu, double x) { return x < 400.0 || x < 4.0 * nu * nu; }

}  // namespace

double log_bessel_i(double nu, double x) {
  if (!(nu >= 0.0)) throw std::domain_error("log_bessel_i: order must be >= 0");
  if (std::isnan(x) || x < 0.0) throw std::domain_error("log_bessel_i: argument must be >= 0");
  if (x == 0.0) return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (use_series(nu, x))
    return nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) + log_series_sum(nu, x);
  return x - 0.5 * (kLogTwoPi + std::log(x)) + std::log(asymptotic_factor(nu, x));
}

double bessel_ratio(double nu, double x) {
  if (!(nu >= 0.0)) throw std::domain_error("bessel_ratio: order must be >= 0");
  if (std::isnan(x) || x < 0.0) throw std::domain_error("bessel_ratio: argument must be >= 0");
  if (x == 0.0) return 0.0;
  if (x > 50.0 * (nu + 1.0)) {
    // Quotient of the scaled asymptotic series; the e^x / sqrt(2 pi x)
    // prefactors cancel exactly.
    return asymptotic_factor(nu + 1.0, x) / asymptotic_factor(nu, x);
  }
  // Gauss continued fraction
  //   I_{nu+1}(x)/I_nu(x) = x / (2(nu+1) + x^2 / (2(nu+2) + x^2 / ...)),
  // evaluated with the modified Lentz algorithm.
  const double tiny = 1e-300;
  double f = tiny, c = f, d = 0.0;
  for (int k = 1; k <= 100000; ++k) {
    const double a = (k == 1) ? x : x * x;
    const double b = 2.0 * (nu + k);
    d = b + a * d;
    if (d == 0.0) d = tiny;
    c = b + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return f;
}

double erf_checked(double x) {
  if (std::isnan(x)) throw std::domain_error("erf: NaN argument");
  return std::erf(x);
}

double coth_stable(double u) {
  if (!(u > 0.0)) throw std::domain_error("coth_stable: argument must be positive");
  if (u < 1e-4) return 1.0 / u + u / 3.0 - u * u * u / 45.0;
  if (u > 19.0) {
    if (u > 360.0) return 1.0;
    const double e = std::exp(-2.0 * u);
    return 1.0 + 2.0 * e / (1.0 - e);
  }
  return 1.0 / std::tanh(u);
}

double log1mexp(double s) {
  if (!(s > 0.0)) throw std::domain_error("log1mexp: argument must be positive");
  // Standard split at ln 2 to keep both branches well conditioned.
  if (s > 0.6931471805599453) return std::log1p(-std::exp(-s));
  return std::log(-std::expm1(-s));
}

}  // namespace tweedie
