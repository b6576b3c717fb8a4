#include "tweedie/process.hpp"

#include <cmath>
#include <stdexcept>

#include "tweedie/bessel.hpp"
#include "tweedie/quadrature.hpp"

namespace tweedie {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454835606594728112;
constexpr double kInf = std::numeric_limits<double>::infinity();

double gaussian_log_pdf(double x, double mean, double var) {
  const double d = x - mean;
  return -0.5 * (kLogTwoPi + std::log(var) + d * d / var);
}

void require_time_order(double s, double t) {
  if (!(s >= 0.0) || !(t > s))
    throw std::domain_error("transition: requires 0 <= s < t");
}

}  // namespace

// ---------------------------------------------------------------------------
// Prior

Prior Prior::point_mass(double z) {
  Prior p;
  p.kind = Kind::PointMass;
  p.p1 = z;
  p.sampler = [z](RngStream&) { return z; };
  p.support_lo = z;
  p.support_hi = z;
  return p;
}

Prior Prior::gaussian(double mean, double variance) {
  if (!(variance > 0.0)) throw std::invalid_argument("Prior::gaussian: variance must be > 0");
  Prior p;
  p.kind = Kind::Gaussian;
  p.p1 = mean;
  p.p2 = variance;
  p.sampler = [mean, variance](RngStream& rng) { return mean + std::sqrt(variance) * rng.normal(); };
  p.density_fn = [mean, variance](double x) { return std::exp(gaussian_log_pdf(x, mean, variance)); };
  const double sd = std::sqrt(variance);
  p.support_lo = mean - 9.0 * sd;
  p.support_hi = mean + 9.0 * sd;
  return p;
}

Prior Prior::lognormal(double log_mean, double log_variance) {
  if (!(log_variance > 0.0))
    throw std::invalid_argument("Prior::lognormal: log variance must be > 0");
  Prior p;
  p.kind = Kind::LogNormal;
  p.p1 = log_mean;
  p.p2 = log_variance;
  p.sampler = [log_mean, log_variance](RngStream& rng) {
    return sample_lognormal(log_mean, log_variance, rng);
  };
  p.density_fn = [log_mean, log_variance](double x) {
    if (!(x > 0.0)) return 0.0;
    return std::exp(gaussian_log_pdf(std::log(x), log_mean, log_variance)) / x;
  };
  const double lsd = std::sqrt(log_variance);
  p.support_lo = std::exp(log_mean - 9.5 * lsd);
  p.support_hi = std::exp(log_mean + 9.5 * lsd);
  return p;
}

Prior Prior::gamma(double shape, double rate) {
  if (!(shape > 0.0 && rate > 0.0))
    throw std::invalid_argument("Prior::gamma: shape and rate must be > 0");
  Prior p;
  p.kind = Kind::Gamma;
  p.p1 = shape;
  p.p2 = rate;
  p.sampler = [shape, rate](RngStream& rng) { return sample_gamma(shape, rate, rng); };
  const double log_norm = shape * std::log(rate) - std::lgamma(shape);
  p.density_fn = [shape, rate, log_norm](double x) {
    if (!(x > 0.0)) return 0.0;
    return std::exp(log_norm + (shape - 1.0) * std::log(x) - rate * x);
  };
  // Sub-exponential upper tail; lower edge keeps the x^{shape-1} factor finite.
  const double mean = shape / rate;
  const double sd = std::sqrt(shape) / rate;
  p.support_lo = shape >= 1.0 ? 0.0 : std::pow(1e-14 * std::tgamma(shape + 1.0), 1.0 / shape) / rate;
  p.support_hi = mean + 14.0 * sd + 42.0 / rate;
  return p;
}

Prior Prior::custom(std::function<double(RngStream&)> sample, std::function<double(double)> density,
                    double lo, double hi) {
  Prior p;
  p.kind = Kind::Custom;
  p.sampler = std::move(sample);
  p.density_fn = std::move(density);
  p.support_lo = lo;
  p.support_hi = hi;
  return p;
}

// ---------------------------------------------------------------------------
// ProcessSpec construction

ProcessSpec ProcessSpec::ve(Schedule sigma) { return {Family::Ve, VeProcess{std::move(sigma)}}; }

ProcessSpec ProcessSpec::vp(Schedule alpha) { return {Family::Vp, VpProcess{std::move(alpha)}}; }

ProcessSpec ProcessSpec::gbm(Schedule mu, Schedule sigma) {
  return {Family::Gbm, GbmProcess{std::move(mu), std::move(sigma)}};
}

ProcessSpec ProcessSpec::besq(double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("ProcessSpec::besq: index must be > 0");
  return {Family::Besq, BesqProcess{nu}};
}

ProcessSpec ProcessSpec::besq_general(double mu, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("ProcessSpec::besq_general: sigma must be > 0");
  if (!(mu > 0.5 * sigma * sigma))
    throw std::invalid_argument("ProcessSpec::besq_general: requires mu > sigma^2/2");
  const double nu = 2.0 * mu / (sigma * sigma) - 1.0;
  return {Family::BesqGeneral, BesqGeneralProcess{mu, sigma, nu}};
}

namespace {

// Constant-index requirement: 2 alpha mu / sigma^2 - 1 must not vary in t.
double cir_constant_index(const Schedule& alpha, const Schedule& mu, const Schedule& sigma) {
  double nu = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double t = (i + 1) / 64.0;
    const double a = alpha.value(t), m = mu.value(t), s = sigma.value(t);
    if (!(a > 0.0 && m > 0.0 && s > 0.0))
      throw std::invalid_argument("ProcessSpec::cir: coefficients must be positive");
    const double nu_t = 2.0 * a * m / (s * s) - 1.0;
    if (i == 0) {
      nu = nu_t;
    } else if (std::fabs(nu_t - nu) > 1e-8 * std::max(1.0, std::fabs(nu))) {
      throw std::invalid_argument("ProcessSpec::cir: 2 alpha mu / sigma^2 - 1 must be constant in t");
    }
  }
  if (!(nu >= 0.0)) throw std::invalid_argument("ProcessSpec::cir: index must be >= 0");
  return nu;
}

}  // namespace

ProcessSpec ProcessSpec::cir(Schedule alpha, Schedule mu, Schedule sigma) {
  const double nu = cir_constant_index(alpha, mu, sigma);
  return {Family::Cir, CirProcess{std::move(alpha), std::move(mu), std::move(sigma), nu, false}};
}

ProcessSpec ProcessSpec::cir_sqrt2alpha(Schedule alpha, Schedule mu) {
  Schedule sigma = Schedule::custom([alpha](double t) { return std::sqrt(2.0 * alpha.value(t)); });
  const double nu = cir_constant_index(alpha, mu, sigma);
  return {Family::Cir, CirProcess{std::move(alpha), std::move(mu), std::move(sigma), nu, true}};
}

ProcessSpec ProcessSpec::cev(Schedule mu, Schedule sigma, double beta) {
  if (!(beta > 1.0)) throw std::invalid_argument("ProcessSpec::cev: requires beta > 1");
  const double nu_star = 0.5 / (beta - 1.0);
  return {Family::Cev, CevProcess{std::move(mu), std::move(sigma), beta, nu_star}};
}

ProcessSpec ProcessSpec::bes3(double sigma_const) {
  if (!(sigma_const > 0.0)) throw std::invalid_argument("ProcessSpec::bes3: sigma must be > 0");
  return {Family::Bes3, Bes3Process{sigma_const}};
}

std::string ProcessSpec::family_name() const {
  switch (family_) {
    case Family::Ve: return "ve";
    case Family::Vp: return "vp";
    case Family::Gbm: return "gbm";
    case Family::Besq: return "besq";
    case Family::BesqGeneral: return "besq_general";
    case Family::Cir: return "cir";
    case Family::Cev: return "cev";
    case Family::Bes3: return "bes3";
  }
  return "?";
}

bool ProcessSpec::positive_state() const {
  return family_ != Family::Ve && family_ != Family::Vp;
}

bool ProcessSpec::valid_start(double x0) const {
  if (!std::isfinite(x0)) return false;
  if (!positive_state()) return true;
  if (family_ == Family::Besq || family_ == Family::BesqGeneral) return x0 >= 0.0;
  return x0 > 0.0;
}

double ProcessSpec::drift(double t, double x) const {
  switch (family_) {
    case Family::Ve: return 0.0;
    case Family::Vp: return -as_vp().alpha.value(t) * x;
    case Family::Gbm: return as_gbm().mu.value(t) * x;
    case Family::Besq: return 2.0 * (as_besq().nu + 1.0);
    case Family::BesqGeneral: return as_besq_general().mu;
    case Family::Cir: {
      const auto& c = as_cir();
      return c.alpha.value(t) * (c.mu.value(t) - x);
    }
    case Family::Cev: return as_cev().mu.value(t) * x;
    case Family::Bes3: {
      const double s = as_bes3().sigma_const;
      return s * s / x;
    }
  }
  return 0.0;
}

double ProcessSpec::diffusion(double t, double x) const {
  switch (family_) {
    case Family::Ve: return as_ve().sigma.value(t);
    case Family::Vp: return std::sqrt(2.0 * as_vp().alpha.value(t));
    case Family::Gbm: return as_gbm().sigma.value(t) * x;
    case Family::Besq: return 2.0 * std::sqrt(x);
    case Family::BesqGeneral: return as_besq_general().sigma * std::sqrt(x);
    case Family::Cir: return as_cir().sigma.value(t) * std::sqrt(x);
    case Family::Cev: return as_cev().sigma.value(t) * std::pow(x, as_cev().beta);
    case Family::Bes3: return as_bes3().sigma_const;
  }
  return 0.0;
}

double ProcessSpec::diffusion_sq(double t, double x) const {
  const double s = diffusion(t, x);
  return s * s;
}

double ProcessSpec::diffusion_sq_div(double t, double x) const {
  switch (family_) {
    case Family::Ve:
    case Family::Vp:
    case Family::Bes3:
      return 0.0;
    case Family::Gbm: {
      const double s = as_gbm().sigma.value(t);
      return 2.0 * s * s * x;
    }
    case Family::Besq: return 4.0;
    case Family::BesqGeneral: {
      const double s = as_besq_general().sigma;
      return s * s;
    }
    case Family::Cir: {
      const double s = as_cir().sigma.value(t);
      return s * s;
    }
    case Family::Cev: {
      const auto& c = as_cev();
      const double s = c.sigma.value(t);
      return 2.0 * c.beta * s * s * std::pow(x, 2.0 * c.beta - 1.0);
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// BESQ building blocks

NcChi2Law besq_transition_law(double nu, double duration, double z0) {
  if (!(duration > 0.0)) throw std::domain_error("besq_transition_law: duration must be > 0");
  if (!(z0 >= 0.0)) throw std::domain_error("besq_transition_law: start must be >= 0");
  return NcChi2Law{duration, 2.0 * (nu + 1.0), z0 / duration};
}

namespace {

double sample_besq(double nu, double duration, double z0, RngStream& rng) {
  const NcChi2Law law = besq_transition_law(nu, duration, z0);
  return law.scale * sample_noncentral_chi2(law.dof, law.nc, rng);
}

// log density of BESQ(nu) at z after `duration`, started from z0 >= 0.
double log_q_besq(double nu, double duration, double z0, double z) {
  if (!(z > 0.0)) return -kInf;
  if (z0 == 0.0) {
    // Central case: Gamma(nu+1, rate 1/(2 duration)).
    return nu * std::log(z) - z / (2.0 * duration) - (nu + 1.0) * std::log(2.0 * duration) -
           std::lgamma(nu + 1.0);
  }
  const double u = std::sqrt(z0 * z) / duration;
  return -std::log(2.0 * duration) + 0.5 * nu * (std::log(z) - std::log(z0)) -
         (z0 + z) / (2.0 * duration) + log_bessel_i(nu, u);
}

// Window of the scaled noncentral chi-squared law holding all but ~1e-14 of
// its mass, with a strictly positive lower edge.
SupportWindow besq_window(double nu, double duration, double z0) {
  const NcChi2Law law = besq_transition_law(nu, duration, z0);
  const double mean = law.dof + law.nc;
  const double sd = std::sqrt(2.0 * (law.dof + 2.0 * law.nc));
  const double hi = law.scale * (mean + 14.0 * sd + 42.0);
  // Central lower bound: P(chi2_d < q) ~ (q/2)^{d/2} / Gamma(d/2+1); the
  // noncentral tail near zero is smaller still.
  const double half_d = 0.5 * law.dof;
  const double lo =
      law.scale * 2.0 * std::exp((std::log(1e-15) + std::lgamma(half_d + 1.0)) / half_d);
  return SupportWindow{lo, hi};
}

// CIR space-time change: X_t = e^{-A(t)} Z_{tau(t)} with Z a BESQ(nu) and
// tau(t) = (1/4) int_0^t sigma^2 e^{A}. For sigma = sqrt(2 alpha) the clock
// is (e^{A(t)} - 1)/2 in closed form.
double cir_clock(const CirProcess& c, double t) {
  if (t == 0.0) return 0.0;
  if (c.sigma_is_sqrt_2alpha) return 0.5 * (std::exp(c.alpha.integral(t)) - 1.0);
  return 0.25 * quad::integrate([&c](double s) {
    const double sg = c.sigma.value(s);
    return sg * sg * std::exp(c.alpha.integral(s));
  }, 0.0, t).value;
}

// CEV representation: X_t = e^{U(t)} Z_{tau(t)}^{-1/(2(beta-1))} with Z a
// BESQ(nu_star); z-coordinate of a state x at time t and the clock tau.
double cev_gamma_exp(const CevProcess& c) { return 2.0 * (c.beta - 1.0); }

double cev_z_of_x(const CevProcess& c, double t, double x) {
  const double g = cev_gamma_exp(c);
  return std::exp(g * c.mu.integral(t)) * std::pow(x, -g);
}

double cev_x_of_z(const CevProcess& c, double t, double z) {
  const double g = cev_gamma_exp(c);
  return std::exp(c.mu.integral(t)) * std::pow(z, -1.0 / g);
}

double cev_clock(const CevProcess& c, double t) {
  if (t == 0.0) return 0.0;
  const double g = cev_gamma_exp(c);
  const double bm1 = c.beta - 1.0;
  if (c.mu.kind() == Schedule::Kind::Constant && c.mu.value(0.0) == 0.0)
    return bm1 * bm1 * c.sigma.square_integral(t);
  return bm1 * bm1 * quad::integrate([&c, g](double s) {
    const double sg = c.sigma.value(s);
    return sg * sg * std::exp(g * c.mu.integral(s));
  }, 0.0, t).value;
}

// Scaled three-dimensional Bessel process: Y = X / sigma is BES(3).
double log_q_bes3_unit(double duration, double y0, double y) {
  if (!(y > 0.0)) return -kInf;
  // (y/y0) (2 pi t)^{-1/2} [exp(-(y-y0)^2/2t) - exp(-(y+y0)^2/2t)]
  const double d = y - y0;
  return std::log(y) - std::log(y0) - 0.5 * (kLogTwoPi + std::log(duration)) -
         d * d / (2.0 * duration) + log1mexp(2.0 * y0 * y / duration);
}

void require_valid_transition(const ProcessSpec& spec, double xs, double s, double t) {
  require_time_order(s, t);
  if (!spec.valid_start(xs))
    throw std::domain_error("transition: start state outside the state space of " +
                            spec.family_name());
}

}  // namespace

// ---------------------------------------------------------------------------
// Exact transitions

double forward_sample_between(const ProcessSpec& spec, double xs, double s, double t,
                              RngStream& rng) {
  require_valid_transition(spec, xs, s, t);
  switch (spec.family()) {
    case ProcessSpec::Family::Ve: {
      const auto& p = spec.as_ve();
      const double var = p.sigma.square_integral(t) - p.sigma.square_integral(s);
      return xs + std::sqrt(var) * rng.normal();
    }
    case ProcessSpec::Family::Vp: {
      const auto& p = spec.as_vp();
      const double m = std::exp(-(p.alpha.integral(t) - p.alpha.integral(s)));
      return m * xs + std::sqrt(1.0 - m * m) * rng.normal();
    }
    case ProcessSpec::Family::Gbm: {
      const auto& p = spec.as_gbm();
      const double dvar = p.sigma.square_integral(t) - p.sigma.square_integral(s);
      const double dmean = p.mu.integral(t) - p.mu.integral(s) - 0.5 * dvar;
      return xs * std::exp(dmean + std::sqrt(dvar) * rng.normal());
    }
    case ProcessSpec::Family::Besq:
      return sample_besq(spec.as_besq().nu, t - s, xs, rng);
    case ProcessSpec::Family::BesqGeneral: {
      const auto& p = spec.as_besq_general();
      const double c = 4.0 / (p.sigma * p.sigma);
      return sample_besq(p.nu, t - s, c * xs, rng) / c;
    }
    case ProcessSpec::Family::Cir: {
      const auto& p = spec.as_cir();
      const double zs = std::exp(p.alpha.integral(s)) * xs;
      const double dz = cir_clock(p, t) - cir_clock(p, s);
      const double zt = sample_besq(p.nu, dz, zs, rng);
      return std::exp(-p.alpha.integral(t)) * zt;
    }
    case ProcessSpec::Family::Cev: {
      const auto& p = spec.as_cev();
      const double zs = cev_z_of_x(p, s, xs);
      const double dz = cev_clock(p, t) - cev_clock(p, s);
      const double zt = sample_besq(p.nu_star, dz, zs, rng);
      return cev_x_of_z(p, t, zt);
    }
    case ProcessSpec::Family::Bes3: {
      const double sg = spec.as_bes3().sigma_const;
      const double y0 = xs / sg;
      const double z = sample_besq(0.5, t - s, y0 * y0, rng);
      return sg * std::sqrt(z);
    }
  }
  return 0.0;
}

double forward_sample(const ProcessSpec& spec, double x0, double t, RngStream& rng) {
  return forward_sample_between(spec, x0, 0.0, t, rng);
}

double log_transition_density_between(const ProcessSpec& spec, double xs, double s, double t,
                                      double x) {
  require_valid_transition(spec, xs, s, t);
  switch (spec.family()) {
    case ProcessSpec::Family::Ve: {
      const auto& p = spec.as_ve();
      const double var = p.sigma.square_integral(t) - p.sigma.square_integral(s);
      return gaussian_log_pdf(x, xs, var);
    }
    case ProcessSpec::Family::Vp: {
      const auto& p = spec.as_vp();
      const double m = std::exp(-(p.alpha.integral(t) - p.alpha.integral(s)));
      return gaussian_log_pdf(x, m * xs, 1.0 - m * m);
    }
    case ProcessSpec::Family::Gbm: {
      if (!(x > 0.0)) return -kInf;
      const auto& p = spec.as_gbm();
      const double dvar = p.sigma.square_integral(t) - p.sigma.square_integral(s);
      const double lm = std::log(xs) + p.mu.integral(t) - p.mu.integral(s) - 0.5 * dvar;
      return gaussian_log_pdf(std::log(x), lm, dvar) - std::log(x);
    }
    case ProcessSpec::Family::Besq:
      return log_q_besq(spec.as_besq().nu, t - s, xs, x);
    case ProcessSpec::Family::BesqGeneral: {
      if (!(x > 0.0)) return -kInf;
      const auto& p = spec.as_besq_general();
      const double c = 4.0 / (p.sigma * p.sigma);
      return std::log(c) + log_q_besq(p.nu, t - s, c * xs, c * x);
    }
    case ProcessSpec::Family::Cir: {
      if (!(x > 0.0)) return -kInf;
      const auto& p = spec.as_cir();
      const double a_t = p.alpha.integral(t);
      const double zs = std::exp(p.alpha.integral(s)) * xs;
      const double dz = cir_clock(p, t) - cir_clock(p, s);
      return a_t + log_q_besq(p.nu, dz, zs, std::exp(a_t) * x);
    }
    case ProcessSpec::Family::Cev: {
      if (!(x > 0.0)) return -kInf;
      const auto& p = spec.as_cev();
      const double g = cev_gamma_exp(p);
      const double zs = cev_z_of_x(p, s, xs);
      const double dz = cev_clock(p, t) - cev_clock(p, s);
      const double zx = cev_z_of_x(p, t, x);
      const double log_jac = std::log(g) + g * p.mu.integral(t) - (g + 1.0) * std::log(x);
      return log_q_besq(p.nu_star, dz, zs, zx) + log_jac;
    }
    case ProcessSpec::Family::Bes3: {
      if (!(x > 0.0)) return -kInf;
      const double sg = spec.as_bes3().sigma_const;
      return log_q_bes3_unit(t - s, xs / sg, x / sg) - std::log(sg);
    }
  }
  return -kInf;
}

double log_transition_density(const ProcessSpec& spec, double x0, double t, double x) {
  return log_transition_density_between(spec, x0, 0.0, t, x);
}

double transition_density(const ProcessSpec& spec, double x0, double t, double x) {
  return std::exp(log_transition_density(spec, x0, t, x));
}

SupportWindow transition_window(const ProcessSpec& spec, double x0, double t) {
  require_valid_transition(spec, x0, 0.0, t);
  switch (spec.family()) {
    case ProcessSpec::Family::Ve: {
      const double sd = std::sqrt(spec.as_ve().sigma.square_integral(t));
      return {x0 - 9.0 * sd, x0 + 9.0 * sd};
    }
    case ProcessSpec::Family::Vp: {
      const auto& p = spec.as_vp();
      const double m = std::exp(-p.alpha.integral(t));
      const double sd = std::sqrt(1.0 - m * m);
      return {m * x0 - 9.0 * sd, m * x0 + 9.0 * sd};
    }
    case ProcessSpec::Family::Gbm: {
      const auto& p = spec.as_gbm();
      const double dvar = p.sigma.square_integral(t);
      const double lm = std::log(x0) + p.mu.integral(t) - 0.5 * dvar;
      const double lsd = std::sqrt(dvar);
      return {std::exp(lm - 9.5 * lsd), std::exp(lm + 9.5 * lsd)};
    }
    case ProcessSpec::Family::Besq:
      return besq_window(spec.as_besq().nu, t, x0);
    case ProcessSpec::Family::BesqGeneral: {
      const auto& p = spec.as_besq_general();
      const double c = 4.0 / (p.sigma * p.sigma);
      const SupportWindow w = besq_window(p.nu, t, c * x0);
      return {w.lo / c, w.hi / c};
    }
    case ProcessSpec::Family::Cir: {
      const auto& p = spec.as_cir();
      const double zs = x0;
      const SupportWindow w = besq_window(p.nu, cir_clock(p, t), zs);
      const double e = std::exp(-p.alpha.integral(t));
      return {e * w.lo, e * w.hi};
    }
    case ProcessSpec::Family::Cev: {
      const auto& p = spec.as_cev();
      const SupportWindow w = besq_window(p.nu_star, cev_clock(p, t), cev_z_of_x(p, 0.0, x0));
      // x is decreasing in z.
      return {cev_x_of_z(p, t, w.hi), cev_x_of_z(p, t, w.lo)};
    }
    case ProcessSpec::Family::Bes3: {
      const double sg = spec.as_bes3().sigma_const;
      const double y0 = x0 / sg;
      const SupportWindow w = besq_window(0.5, t, y0 * y0);
      return {sg * std::sqrt(w.lo), sg * std::sqrt(w.hi)};
    }
  }
  return {0.0, 0.0};
}

Prior noise_distribution(const ProcessSpec& spec, double T, double reference_x0) {
  if (!(T > 0.0)) throw std::domain_error("noise_distribution: requires T > 0");
  switch (spec.family()) {
    case ProcessSpec::Family::Ve:
      return Prior::gaussian(0.0, spec.as_ve().sigma.square_integral(T));
    case ProcessSpec::Family::Vp:
      return Prior::gaussian(0.0, 1.0);
    case ProcessSpec::Family::Gbm: {
      const auto& p = spec.as_gbm();
      const double v = p.sigma.square_integral(T);
      return Prior::lognormal(p.mu.integral(T) - 0.5 * v, v);
    }
    case ProcessSpec::Family::Cir:
      // Stationary law of the sqrt(2 alpha) parameterization.
      return Prior::gamma(spec.as_cir().mu.value(T), 1.0);
    default: {
      // No stationary law; use the exact transition law from a reference
      // start state.
      if (!spec.valid_start(reference_x0) || reference_x0 <= 0.0)
        throw std::domain_error("noise_distribution: reference start must be admissible");
      const ProcessSpec copy = spec;
      const SupportWindow w = transition_window(spec, reference_x0, T);
      return Prior::custom(
          [copy, reference_x0, T](RngStream& rng) {
            return forward_sample(copy, reference_x0, T, rng);
          },
          [copy, reference_x0, T](double x) { return transition_density(copy, reference_x0, T, x); },
          w.lo, w.hi);
    }
  }
}

}  // namespace tweedie
