#include "tweedie/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace tweedie {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer: a bijective 64-bit mix.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  key_ = mix64(mix64(seed + kGolden) ^ mix64(stream * 0x94d049bb133111ebULL + 0x2545f4914f6cdd1dULL));
  counter_ = 0;
}

RngStream RngStream::split(std::uint64_t child) const {
  RngStream out;
  out.key_ = mix64(key_ ^ mix64(child * kGolden + 0x632be59bd9b4e019ULL));
  out.counter_ = 0;
  return out;
}

std::uint64_t RngStream::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double RngStream::uniform() {
  // 53-bit mantissa shifted into (0,1); never returns an endpoint.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double sample_gamma(double shape, double rate, RngStream& rng) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::domain_error("sample_gamma: shape and rate must be positive");
  if (shape < 1.0) {
    // Boost: G(a) = G(a+1) * U^{1/a}.
    const double u = rng.uniform();
    return sample_gamma(shape + 1.0, rate, rng) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze method.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

double sample_lognormal(double mu, double sigma2, RngStream& rng) {
  if (!(sigma2 > 0.0)) throw std::domain_error("sample_lognormal: sigma2 must be positive");
  return std::exp(mu + std::sqrt(sigma2) * rng.normal());
}

namespace {

// Sequential inversion, O(mean) draws of work but a single uniform.
std::uint64_t poisson_inversion(double mean, RngStream& rng) {
  const double q = std::exp(-mean);
  double p = q;
  double cdf = q;
  const double u = rng.uniform();
  std::uint64_t k = 0;
  while (u > cdf) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
    if (k > 2000) break;  // cdf underflow guard; unreachable for mean <= 30
  }
  return k;
}

// Hormann's PTRS transformed-rejection sampler, valid for mean >= 10.
std::uint64_t poisson_ptrs(double mean, RngStream& rng) {
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * log_mean - mean - std::lgamma(k + 1.0))
      return static_cast<std::uint64_t>(k);
  }
}

}  // namespace

std::uint64_t sample_poisson(double mean, RngStream& rng) {
  if (!(mean >= 0.0)) throw std::domain_error("sample_poisson: mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) return poisson_inversion(mean, rng);
  return poisson_ptrs(mean, rng);
}

double sample_noncentral_chi2(double dof, double nc, RngStream& rng) {
  if (!(dof > 0.0)) throw std::domain_error("sample_noncentral_chi2: dof must be positive");
  if (!(nc >= 0.0)) throw std::domain_error("sample_noncentral_chi2: noncentrality must be >= 0");
  const std::uint64_t k = nc > 0.0 ? sample_poisson(0.5 * nc, rng) : 0;
  return sample_gamma(0.5 * dof + static_cast<double>(k), 0.5, rng);
}

}  // namespace tweedie
