#pragma once

#include <functional>
#include <string>
#include <variant>

#include "tweedie/rng.hpp"
#include "tweedie/schedule.hpp"

namespace tweedie {

// Data distribution of the initial state: a sampler plus (optionally) a
// normalized density with its quadrature support. The kind tag records
// analytic structure that conjugate score builders can exploit.
struct Prior {
  enum class Kind { PointMass, Gaussian, LogNormal, Gamma, Custom };

  Kind kind = Kind::Custom;
  double p1 = 0.0;  // point z | mean | log-mean | shape
  double p2 = 0.0;  // -      | variance | log-variance | rate
  std::function<double(RngStream&)> sampler;
  std::function<double(double)> density_fn;  // empty when unavailable
  double support_lo = 0.0;
  double support_hi = 0.0;

  static Prior point_mass(double z);
  static Prior gaussian(double mean, double variance);
  static Prior lognormal(double log_mean, double log_variance);
  static Prior gamma(double shape, double rate);
  static Prior custom(std::function<double(RngStream&)> sample,
                      std::function<double(double)> density, double lo, double hi);

  double sample(RngStream& rng) const { return sampler(rng); }
  bool has_density() const { return static_cast<bool>(density_fn); }
  double density(double x) const { return density_fn(x); }
};

// dX = sigma(t) dW
struct VeProcess {
  Schedule sigma;
};

// dX = -alpha(t) X dt + sqrt(2 alpha(t)) dW
struct VpProcess {
  Schedule alpha;
};

// dX = mu(t) X dt + sigma(t) X dW
struct GbmProcess {
  Schedule mu;
  Schedule sigma;
};

// dX = 2(nu+1) dt + 2 sqrt(X) dW, nu > 0
struct BesqProcess {
  double nu;
};

// dX = mu dt + sigma sqrt(X) dW, mu > sigma^2/2. Equivalent to the canonical
// squared Bessel family under V = (4/sigma^2) X with index 2 mu/sigma^2 - 1.
struct BesqGeneralProcess {
  double mu;
  double sigma;
  double nu;  // derived index
};

// dX = alpha(t)(mu(t) - X) dt + sigma(t) sqrt(X) dW, with the index
// 2 alpha mu / sigma^2 - 1 constant in t (checked at construction).
struct CirProcess {
  Schedule alpha;
  Schedule mu;
  Schedule sigma;
  double nu;                 // constant index, >= 0
  bool sigma_is_sqrt_2alpha; // enables the closed-form clock (e^A - 1)/2
};

// dX = mu(t) X dt + sigma(t) X^beta dW, beta > 1.
struct CevProcess {
  Schedule mu;
  Schedule sigma;
  double beta;
  double nu_star;  // 1 / (2 (beta - 1))
};

// dX = sigma^2 / X dt + sigma dW; sigma = 1 is the three-dimensional Bessel
// process, and X / sigma is one for general sigma.
struct Bes3Process {
  double sigma_const;
};

class ProcessSpec {
 public:
  enum class Family { Ve, Vp, Gbm, Besq, BesqGeneral, Cir, Cev, Bes3 };

  static ProcessSpec ve(Schedule sigma);
  static ProcessSpec vp(Schedule alpha);
  static ProcessSpec gbm(Schedule mu, Schedule sigma);
  static ProcessSpec besq(double nu);
  static ProcessSpec besq_general(double mu, double sigma);
  static ProcessSpec cir(Schedule alpha, Schedule mu, Schedule sigma);
  // CIR with sigma(t) = sqrt(2 alpha(t)); index becomes mu - 1 for constant mu.
  static ProcessSpec cir_sqrt2alpha(Schedule alpha, Schedule mu);
  static ProcessSpec cev(Schedule mu, Schedule sigma, double beta);
  static ProcessSpec bes3(double sigma_const = 1.0);

  Family family() const { return family_; }
  std::string family_name() const;

  const VeProcess& as_ve() const { return std::get<VeProcess>(data_); }
  const VpProcess& as_vp() const { return std::get<VpProcess>(data_); }
  const GbmProcess& as_gbm() const { return std::get<GbmProcess>(data_); }
  const BesqProcess& as_besq() const { return std::get<BesqProcess>(data_); }
  const BesqGeneralProcess& as_besq_general() const { return std::get<BesqGeneralProcess>(data_); }
  const CirProcess& as_cir() const { return std::get<CirProcess>(data_); }
  const CevProcess& as_cev() const { return std::get<CevProcess>(data_); }
  const Bes3Process& as_bes3() const { return std::get<Bes3Process>(data_); }

  // Positive state space for all but VE/VP. BESQ families additionally admit
  // the boundary point x0 = 0 as a start state.
  bool positive_state() const;
  bool valid_start(double x0) const;

  // SDE coefficients, the squared diffusion a = sigma^2 and its spatial
  // divergence (needed by the reverse-time drift).
  double drift(double t, double x) const;
  double diffusion(double t, double x) const;
  double diffusion_sq(double t, double x) const;
  double diffusion_sq_div(double t, double x) const;

 private:
  Family family_;
  std::variant<VeProcess, VpProcess, GbmProcess, BesqProcess, BesqGeneralProcess, CirProcess,
               CevProcess, Bes3Process>
      data_;

  template <typename T>
  ProcessSpec(Family f, T&& d) : family_(f), data_(std::forward<T>(d)) {}
};

// One exact draw of X_t given X_s = xs (no time discretization).
double forward_sample_between(const ProcessSpec& spec, double xs, double s, double t,
                              RngStream& rng);
// X_t given X_0 = x0.
double forward_sample(const ProcessSpec& spec, double x0, double t, RngStream& rng);

// Transition density q(s -> t; xs -> x) on the log scale, and its plain value.
double log_transition_density_between(const ProcessSpec& spec, double xs, double s, double t,
                                      double x);
double log_transition_density(const ProcessSpec& spec, double x0, double t, double x);
double transition_density(const ProcessSpec& spec, double x0, double t, double x);

// Quadrature support of the transition law started at x0: a window holding
// all but ~1e-14 of the mass, with a strictly positive lower edge for
// positive-state families.
struct SupportWindow {
  double lo;
  double hi;
};
SupportWindow transition_window(const ProcessSpec& spec, double x0, double t);

// Reverse-time initialization law. VE: N(0, Sigma^2(T)); VP: N(0,1);
// GBM: LogNormal(U(T) - Sigma^2(T)/2, Sigma^2(T)); CIR: Gamma(mu(T), 1), its
// stationary law. The remaining families have no stationary law, so the exact
// transition law from `reference_x0` is used instead.
Prior noise_distribution(const ProcessSpec& spec, double T, double reference_x0 = 1.0);

// Scaled noncentral chi-squared parameters of the BESQ-representable
// transition laws (used by exact samplers and by consistency tests).
struct NcChi2Law {
  double scale;  // X = scale * chi2(dof, nc)
  double dof;
  double nc;
};
NcChi2Law besq_transition_law(double nu, double duration, double z0);

}  // namespace tweedie
