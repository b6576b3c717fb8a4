#include "tweedie/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace tweedie::quad {

namespace {

// Kronrod 15-point nodes on [0,1] half-axis (symmetric) with embedded
// Gauss 7 rule. Standard QUADPACK values.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double gauss = 0.0;
  double kronrod = 0.0;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi, long& evals) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  Panel p;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kXgk[i];
    double fv;
    if (i == 7) {
      fv = f(c);
      evals += 1;
      p.kronrod += kWgk[7] * fv;
      p.gauss += kWg[3] * fv;
    } else {
      const double f1 = f(c - dx);
      const double f2 = f(c + dx);
      evals += 2;
      p.kronrod += kWgk[i] * (f1 + f2);
      if (i % 2 == 1) p.gauss += kWg[i / 2] * (f1 + f2);
    }
  }
  p.gauss *= h;
  p.kronrod *= h;
  return p;
}

void adapt(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
           double rel_tol, int depth, Result& out) {
  long evals = 0;
  const Panel p = gk15(f, lo, hi, evals);
  out.evaluations += evals;
  const double err = std::fabs(p.kronrod - p.gauss);
  if (depth <= 0 || err <= abs_tol || err <= rel_tol * std::fabs(p.kronrod)) {
    out.value += p.kronrod;
    out.error += err;
    return;
  }
  const double mid = 0.5 * (lo + hi);
  adapt(f, lo, mid, 0.5 * abs_tol, rel_tol, depth - 1, out);
  adapt(f, mid, hi, 0.5 * abs_tol, rel_tol, depth - 1, out);
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opt) {
  if (!(lo < hi)) throw std::invalid_argument("quad::integrate: requires lo < hi");
  Result out;
  adapt(f, lo, hi, opt.abs_tol, opt.rel_tol, opt.max_depth, out);
  return out;
}

Result integrate_sqrt(const std::function<double(double)>& f, double hi, const Options& opt) {
  if (!(hi > 0.0)) throw std::invalid_argument("quad::integrate_sqrt: requires hi > 0");
  return integrate([&f](double v) { return 2.0 * v * f(v * v); }, 0.0, std::sqrt(hi), opt);
}

Result integrate_log(const std::function<double(double)>& f, double lo, double hi,
                     const Options& opt) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("quad::integrate_log: requires 0 < lo < hi");
  return integrate([&f](double s) {
    const double y = std::exp(s);
    return y * f(y);
  }, std::log(lo), std::log(hi), opt);
}

}  // namespace tweedie::quad
