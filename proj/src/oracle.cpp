#include "tweedie/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tweedie/quadrature.hpp"
#include "tweedie/rng.hpp"

namespace tweedie::oracle {

namespace {

constexpr double kEps = 1e-15;

double gamma_p_series(double a, double x) {
  double term = 1.0 / a, sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
  // Lentz evaluation of the upper-tail continued fraction.
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int k = 1; k < 10000; ++k) {
    const double an = -k * (k - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw std::domain_error("regularized_gamma_p: bad arguments");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_contfrac(a, x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double noncentral_chi2_cdf(double dof, double nc, double x) {
  if (!(dof > 0.0) || !(nc >= 0.0)) throw std::domain_error("noncentral_chi2_cdf: bad parameters");
  if (!(x > 0.0)) return 0.0;
  if (nc == 0.0) return regularized_gamma_p(0.5 * dof, 0.5 * x);
  // Sum Poisson(nc/2) weights outward from the mode.
  const double half_nc = 0.5 * nc;
  const long j0 = std::max<long>(0, static_cast<long>(half_nc));
  const double log_w0 = -half_nc + j0 * std::log(half_nc) - std::lgamma(j0 + 1.0);
  double total = 0.0;
  double w = std::exp(log_w0);
  for (long j = j0; j < j0 + 40000; ++j) {
    if (j > j0) w *= half_nc / static_cast<double>(j);
    total += w * regularized_gamma_p(0.5 * dof + j, 0.5 * x);
    if (w < kEps && j > j0 + 4) break;
  }
  w = std::exp(log_w0);
  for (long j = j0 - 1; j >= 0; --j) {
    w *= static_cast<double>(j + 1) / half_nc;
    total += w * regularized_gamma_p(0.5 * dof + j, 0.5 * x);
    if (w < kEps) break;
  }
  return std::min(1.0, total);
}

namespace {

// Integrate f over [lo, hi], in the v = sqrt(z) coordinate when the state
// space is positive. The range is pre-split so a transition kernel much
// narrower than the prior window cannot slip between the first panels.
double integrate_over_support(const std::function<double(double)>& f, double lo, double hi,
                              bool positive) {
  const quad::Options opt{1e-14, 1e-11, 56};
  double total = 0.0;
  const int panels = 24;
  if (positive) {
    const double vlo = std::sqrt(std::max(lo, 0.0));
    const double vhi = std::sqrt(hi);
    for (int i = 0; i < panels; ++i) {
      const double a = vlo + (vhi - vlo) * i / panels;
      const double b = vlo + (vhi - vlo) * (i + 1) / panels;
      total += quad::integrate([&f](double v) { return 2.0 * v * f(v * v); }, a, b, opt).value;
    }
  } else {
    for (int i = 0; i < panels; ++i) {
      const double a = lo + (hi - lo) * i / panels;
      const double b = lo + (hi - lo) * (i + 1) / panels;
      total += quad::integrate(f, a, b, opt).value;
    }
  }
  return total;
}

void require_density(const Prior& prior) {
  if (!prior.has_density() && prior.kind != Prior::Kind::PointMass)
    throw std::invalid_argument("oracle: prior must carry a density");
}

}  // namespace

double marginal_density(const Prior& prior, const ProcessSpec& spec, double t, double x) {
  require_density(prior);
  if (prior.kind == Prior::Kind::PointMass) return transition_density(spec, prior.p1, t, x);
  const double lo = spec.positive_state() ? std::max(prior.support_lo, 0.0) : prior.support_lo;
  return integrate_over_support(
      [&](double z) { return prior.density(z) * transition_density(spec, z, t, x); }, lo,
      prior.support_hi, spec.positive_state());
}

FdScore score_numeric(const Prior& prior, const ProcessSpec& spec, double t, double x, double h) {
  if (h <= 0.0) h = 1e-3 * std::max(1.0, std::fabs(x));
  if (spec.positive_state()) h = std::min(h, 0.4 * x);
  const auto logp = [&](double y) { return std::log(marginal_density(prior, spec, t, y)); };
  const double d1 = (logp(x + h) - logp(x - h)) / (2.0 * h);
  const double d2 = (logp(x + 0.5 * h) - logp(x - 0.5 * h)) / h;
  const double value = (4.0 * d2 - d1) / 3.0;
  return {value, std::fabs(d2 - d1) / 3.0};
}

double transition_score_numeric(const ProcessSpec& spec, double z, double t, double x, double h) {
  if (h <= 0.0) h = 1e-5 * std::max(1.0, std::fabs(x));
  if (spec.positive_state()) h = std::min(h, 0.4 * x);
  return (log_transition_density(spec, z, t, x + h) - log_transition_density(spec, z, t, x - h)) /
         (2.0 * h);
}

double conditional_expectation_numeric(const Prior& prior, const ProcessSpec& spec,
                                       const std::function<double(double)>& g, double t,
                                       double x) {
  require_density(prior);
  if (prior.kind == Prior::Kind::PointMass) return g(prior.p1);
  const double lo = spec.positive_state() ? std::max(prior.support_lo, 0.0) : prior.support_lo;
  const double num = integrate_over_support(
      [&](double z) { return g(z) * prior.density(z) * transition_density(spec, z, t, x); }, lo,
      prior.support_hi, spec.positive_state());
  const double den = marginal_density(prior, spec, t, x);
  if (!(den > 0.0))
    throw std::runtime_error("conditional_expectation_numeric: zero marginal at the query point");
  return num / den;
}

LookbackEstimate lookback_drift_mc(const ProcessSpec& spec, const Prior& prior, double t, double x,
                                   double epsilon, std::size_t n, const LookbackOptions& opt) {
  if (!(epsilon > 0.0 && epsilon < t))
    throw std::domain_error("lookback_drift_mc: requires 0 < epsilon < t");
  RngStream rng(opt.seed);

  // Pilot pass for the kernel bandwidth.
  double s1 = 0.0, s2 = 0.0;
  const std::size_t pilot = 100000;
  for (std::size_t i = 0; i < pilot; ++i) {
    const double xt = forward_sample(spec, prior.sample(rng), t, rng);
    s1 += xt;
    s2 += xt * xt;
  }
  const double sd = std::sqrt(std::max(s2 / pilot - (s1 / pilot) * (s1 / pilot), 1e-300));
  const double w = opt.bandwidth_factor * sd;

  std::vector<double> us, ds;
  us.reserve(n / 4);
  ds.reserve(n / 4);
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = prior.sample(rng);
    const double xa = forward_sample(spec, x0, t - epsilon, rng);
    const double xb = forward_sample_between(spec, xa, t - epsilon, t, rng);
    const double u = xb - x;
    if (std::fabs(u) <= w) {
      us.push_back(u);
      ds.push_back(xa - xb);
    }
  }
  if (us.size() < 32)
    throw std::runtime_error(
        "lookback_drift_mc: too few samples in the window; increase n or the bandwidth");

  // Epanechnikov-weighted local-linear fit of the increment on u at u = 0.
  double S0 = 0, S1 = 0, S2 = 0, T0 = 0, T1 = 0;
  std::vector<double> ks(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double r = us[i] / w;
    const double k = 1.0 - r * r;
    ks[i] = k;
    S0 += k;
    S1 += k * us[i];
    S2 += k * us[i] * us[i];
    T0 += k * ds[i];
    T1 += k * ds[i] * us[i];
  }
  const double det = S0 * S2 - S1 * S1;
  const double a = (S2 * T0 - S1 * T1) / det;
  const double b = (S0 * T1 - S1 * T0) / det;

  double rss = 0.0, csq = 0.0, kw = 0.0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double resid = ds[i] - a - b * us[i];
    rss += ks[i] * resid * resid;
    kw += ks[i];
    const double c = ks[i] * (S2 - S1 * us[i]) / det;
    csq += c * c;
  }
  const double resid_var = rss / kw;
  return {a / epsilon, std::sqrt(resid_var * csq) / epsilon, us.size()};
}

CdfGrid::CdfGrid(std::vector<double> xs, std::vector<double> cdf)
    : xs_(std::move(xs)), cdf_(std::move(cdf)) {}

double CdfGrid::operator()(double x) const {
  if (x <= xs_.front()) return 0.0;
  if (x >= xs_.back()) return 1.0;
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  const double frac = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return cdf_[i - 1] + frac * (cdf_[i] - cdf_[i - 1]);
}

CdfGrid transition_cdf(const ProcessSpec& spec, double x0, double t, int cells) {
  const SupportWindow win = transition_window(spec, x0, t);
  std::vector<double> xs(cells + 1), cdf(cells + 1, 0.0);
  for (int i = 0; i <= cells; ++i) xs[i] = win.lo + (win.hi - win.lo) * i / cells;
  const quad::Options opt{1e-15, 1e-9, 24};
  for (int i = 1; i <= cells; ++i) {
    const double mass =
        quad::integrate([&](double y) { return transition_density(spec, x0, t, y); }, xs[i - 1],
                        xs[i], opt)
            .value;
    cdf[i] = cdf[i - 1] + mass;
  }
  const double total = cdf[cells];
  if (!(total > 0.0)) throw std::runtime_error("transition_cdf: vanishing mass on the window");
  for (auto& c : cdf) c /= total;
  return CdfGrid(std::move(xs), std::move(cdf));
}

}  // namespace tweedie::oracle
