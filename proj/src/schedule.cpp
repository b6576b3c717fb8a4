#include "tweedie/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tweedie/quadrature.hpp"

namespace tweedie {

Schedule Schedule::constant(double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("Schedule::constant: coefficient must be >= 0");
  Schedule s;
  s.kind_ = Kind::Constant;
  s.a_ = c;
  return s;
}

Schedule Schedule::affine(double a, double b) {
  Schedule s;
  s.kind_ = Kind::Affine;
  s.a_ = a;
  s.b_ = b;
  return s;
}

Schedule Schedule::power(double a, double b, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("Schedule::power: exponent must be > 0");
  Schedule s;
  s.kind_ = Kind::Power;
  s.a_ = a;
  s.b_ = b;
  s.p_ = p;
  return s;
}

Schedule Schedule::exponential(double a, double b) {
  if (!(a > 0.0 && b > 0.0))
    throw std::invalid_argument("Schedule::exponential: requires a > 0, b > 0");
  Schedule s;
  s.kind_ = Kind::Exponential;
  s.a_ = a;
  s.b_ = b;
  return s;
}

Schedule Schedule::scaled_square(Schedule base, double scale, double shift) {
  Schedule s;
  s.kind_ = Kind::ScaledSquare;
  s.a_ = scale;
  s.b_ = shift;
  s.base_ = std::make_shared<Schedule>(std::move(base));
  return s;
}

Schedule Schedule::custom(std::function<double(double)> f) {
  Schedule s;
  s.kind_ = Kind::Custom;
  s.fn_ = std::move(f);
  return s;
}

double Schedule::value(double t) const {
  switch (kind_) {
    case Kind::Constant: return a_;
    case Kind::Affine: return a_ + b_ * t;
    case Kind::Power: return a_ + b_ * std::pow(t, p_);
    case Kind::Exponential: return a_ * std::pow(b_, t);
    case Kind::ScaledSquare: {
      const double v = base_->value(t);
      return a_ * v * v + b_;
    }
    case Kind::Custom: return fn_(t);
  }
  return 0.0;
}

double Schedule::integral(double t) const {
  switch (kind_) {
    case Kind::Constant: return a_ * t;
    case Kind::Affine: return a_ * t + 0.5 * b_ * t * t;
    case Kind::Power: return a_ * t + b_ * std::pow(t, p_ + 1.0) / (p_ + 1.0);
    case Kind::Exponential:
      if (b_ == 1.0) return a_ * t;
      return a_ * (std::pow(b_, t) - 1.0) / std::log(b_);
    case Kind::ScaledSquare: return a_ * base_->square_integral(t) + b_ * t;
    case Kind::Custom:
      if (t == 0.0) return 0.0;
      return quad::integrate(fn_, 0.0, t).value;
  }
  return 0.0;
}

double Schedule::square_integral(double t) const {
  switch (kind_) {
    case Kind::Constant: return a_ * a_ * t;
    case Kind::Affine:
      // (a + b s)^2 integrates to a^2 t + a b t^2 + b^2 t^3 / 3.
      return a_ * a_ * t + a_ * b_ * t * t + b_ * b_ * t * t * t / 3.0;
    case Kind::Power: {
      const double tp1 = std::pow(t, p_ + 1.0);
      const double t2p1 = std::pow(t, 2.0 * p_ + 1.0);
      return a_ * a_ * t + 2.0 * a_ * b_ * tp1 / (p_ + 1.0) + b_ * b_ * t2p1 / (2.0 * p_ + 1.0);
    }
    case Kind::Exponential:
      if (b_ == 1.0) return a_ * a_ * t;
      return a_ * a_ * (std::pow(b_, 2.0 * t) - 1.0) / (2.0 * std::log(b_));
    case Kind::ScaledSquare:
    case Kind::Custom: {
      if (t == 0.0) return 0.0;
      return quad::integrate([this](double s) {
        const double v = value(s);
        return v * v;
      }, 0.0, t).value;
    }
  }
  return 0.0;
}

std::string Schedule::describe() const {
  char buf[160];
  switch (kind_) {
    case Kind::Constant: std::snprintf(buf, sizeof buf, "constant %.17g", a_); break;
    case Kind::Affine: std::snprintf(buf, sizeof buf, "affine %.17g %.17g", a_, b_); break;
    case Kind::Power: std::snprintf(buf, sizeof buf, "power %.17g %.17g %.17g", a_, b_, p_); break;
    case Kind::Exponential: std::snprintf(buf, sizeof buf, "exponential %.17g %.17g", a_, b_); break;
    case Kind::ScaledSquare:
      std::snprintf(buf, sizeof buf, "scaled_square %.17g %.17g of [%s]", a_, b_,
                    base_->describe().c_str());
      break;
    case Kind::Custom: std::snprintf(buf, sizeof buf, "custom"); break;
  }
  return buf;
}

}  // namespace tweedie
