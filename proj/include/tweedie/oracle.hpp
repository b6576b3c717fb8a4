#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tweedie/process.hpp"

// Brute-force references, kept independent of the analytic score formulas:
// quadrature marginals, finite-difference scores, quadrature conditional
// expectations, and a Monte-Carlo check of the reverse-drift identity
//   a(t,x) * score(t,x) + div a(t,x) = b(t,x) + (1/eps) E(X_{t-eps} - X_t | X_t = x).
namespace tweedie::oracle {

// Regularized lower incomplete gamma P(a, x): series for x < a + 1,
// continued fraction otherwise.
double regularized_gamma_p(double a, double x);

// Standard normal CDF.
double normal_cdf(double x);

// Noncentral chi-squared CDF as a Poisson mixture of central gamma tails.
double noncentral_chi2_cdf(double dof, double nc, double x);

// p(t, x) = int prior(z) q(t, z, x) dz over the prior's support window.
double marginal_density(const Prior& prior, const ProcessSpec& spec, double t, double x);

struct FdScore {
  double value;
  double error_estimate;
};

// Richardson-extrapolated central difference of the log quadrature marginal.
// h = 0 picks 1e-3 * max(1, |x|), halved as needed to stay in the state space.
FdScore score_numeric(const Prior& prior, const ProcessSpec& spec, double t, double x,
                      double h = 0.0);

// Central difference of log q(t, z, .) itself: the degenerate-prior reference.
double transition_score_numeric(const ProcessSpec& spec, double z, double t, double x,
                                double h = 0.0);

// E(g(X_0) | X_t = x) by quadrature of the posterior.
double conditional_expectation_numeric(const Prior& prior, const ProcessSpec& spec,
                                       const std::function<double(double)>& g, double t, double x);

struct LookbackOptions {
  // Kernel half-width as a multiple of std(X_t). The local-linear fit removes
  // the first-order window bias, so a wide window mainly buys variance.
  double bandwidth_factor = 0.25;
  std::uint64_t seed = 20260801;
};

struct LookbackEstimate {
  double value;  // (1/eps) * local-linear fit of (X_{t-eps} - X_t) at X_t = x
  double se;
  std::size_t window_count;
};

// Exact two-step forward simulation (0 -> t-eps -> t), Epanechnikov-kernel
// local-linear regression of the lookback increment on X_t around x.
LookbackEstimate lookback_drift_mc(const ProcessSpec& spec, const Prior& prior, double t, double x,
                                   double epsilon, std::size_t n, const LookbackOptions& opt = {});

// Piecewise-linear CDF of the transition law on a fine grid, for KS tests
// against exact samplers.
class CdfGrid {
 public:
  CdfGrid(std::vector<double> xs, std::vector<double> cdf);
  double operator()(double x) const;

 private:
  std::vector<double> xs_;
  std::vector<double> cdf_;
};

CdfGrid transition_cdf(const ProcessSpec& spec, double x0, double t, int cells = 8192);

}  // namespace tweedie::oracle
