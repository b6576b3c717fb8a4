#pragma once

namespace tweedie {

// log I_nu(x) for nu >= 0, x >= 0. Power series for small/moderate x,
// large-argument asymptotic expansion otherwise. Relative accuracy ~1e-13
// on x in [1e-300, 700] for the orders used by the positive process
// families; remains finite (no overflow) for x well beyond 700.
// Returns -inf for x == 0 with nu > 0, and 0 for (nu=0, x=0).
double log_bessel_i(double nu, double x);

// I_{nu+1}(x) / I_nu(x) for nu >= 0, x >= 0. Value lies in [0, 1), is 0 at
// x = 0 and strictly increasing in x. Evaluated by the Gauss continued
// fraction (modified Lentz) for moderate x and by the ratio of scaled
// asymptotic series for x > 50 (nu + 1); no intermediate I value is formed,
// so the result never overflows.
double bessel_ratio(double nu, double x);

// Error function; thin domain-checked wrapper so callers get a uniform
// error policy. NaN input throws.
double erf_checked(double x);

// coth(u) for u > 0 with the small-argument series 1/u + u/3 - u^3/45 below
// 1e-4 and the saturated value 1 for large u.
double coth_stable(double u);

// log(1 - exp(-s)) for s > 0 without cancellation.
double log1mexp(double s);

}  // namespace tweedie
