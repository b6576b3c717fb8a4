#pragma once

#include <functional>

namespace tweedie::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  // accumulated local error estimate
  long evaluations = 0;
};

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 60;
};

// Adaptive Gauss-Kronrod (G7, K15) on a finite interval.
Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opt = {});

// Integral over (0, hi) through the substitution y = v^2; compresses the
// origin and removes mild endpoint singularities of positive-state densities.
Result integrate_sqrt(const std::function<double(double)>& f, double hi,
                      const Options& opt = {});

// Integral over (lo, hi), 0 < lo < hi, through y = e^s; suited to lognormal
// tails.
Result integrate_log(const std::function<double(double)>& f, double lo, double hi,
                     const Options& opt = {});

}  // namespace tweedie::quad
