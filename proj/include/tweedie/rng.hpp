#pragma once

#include <cstdint>

namespace tweedie {

// Counter-based splittable random stream. Every draw is a pure function of
// (key, counter), so streams can be derived deterministically for parallel
// work: split(i) yields an independent stream for child i regardless of how
// many draws the parent has consumed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  // Independent child stream identified by `child`.
  RngStream split(std::uint64_t child) const;

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1).
  double uniform();
  // Standard normal (Box-Muller, two uniforms per draw).
  double normal();

  std::uint64_t key() const { return key_; }

 private:
  RngStream() = default;
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

// Exact samplers. All mutate only the stream argument and validate their
// parameter domains.

// Gamma(shape, rate): density rate^shape x^{shape-1} e^{-rate x} / Gamma(shape),
// mean shape/rate. Marsaglia-Tsang, with the power boost for shape < 1.
double sample_gamma(double shape, double rate, RngStream& rng);

// LogNormal(mu, sigma2): exp(mu + sqrt(sigma2) Z), mean exp(mu + sigma2/2).
double sample_lognormal(double mu, double sigma2, RngStream& rng);

// Poisson(mean >= 0). Inversion for small means, transformed rejection (PTRS)
// for large ones.
std::uint64_t sample_poisson(double mean, RngStream& rng);

// Noncentral chi-squared with `dof` degrees of freedom (real, > 0) and
// noncentrality `nc` >= 0, built as the Poisson(nc/2) mixture of
// Gamma(dof/2 + K, 1/2). Exact for all real dof.
double sample_noncentral_chi2(double dof, double nc, RngStream& rng);

}  // namespace tweedie
