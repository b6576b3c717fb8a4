#pragma once

#include <functional>
#include <memory>
#include <string>

namespace tweedie {

// Time-dependent nonnegative coefficient with exact running integrals.
// The built-in kinds carry hand-derived closed forms for both
// integral(t) = int_0^t f(s) ds and square_integral(t) = int_0^t f(s)^2 ds;
// reverse-time samplers evaluate these thousands of times. Custom schedules
// fall back to adaptive quadrature.
class Schedule {
 public:
  enum class Kind { Constant, Affine, Power, Exponential, ScaledSquare, Custom };

  static Schedule constant(double c);
  // a + b t
  static Schedule affine(double a, double b);
  // a + b t^p, p > 0
  static Schedule power(double a, double b, double p);
  // a * b^t, a > 0, b > 0
  static Schedule exponential(double a, double b);
  // scale * base(t)^2 + shift; integral uses base's square integral.
  static Schedule scaled_square(Schedule base, double scale, double shift);
  // Arbitrary evaluator; integrals via quadrature.
  static Schedule custom(std::function<double(double)> f);

  double value(double t) const;
  double integral(double t) const;         // int_0^t value(s) ds
  double square_integral(double t) const;  // int_0^t value(s)^2 ds

  Kind kind() const { return kind_; }
  double param_a() const { return a_; }
  double param_b() const { return b_; }
  double param_p() const { return p_; }
  const Schedule* base() const { return base_.get(); }

  // "kind a b p" textual form used by the config layer; parameters printed
  // with 17 significant digits so parsing reproduces them bit-exactly.
  std::string describe() const;

 private:
  Schedule() = default;
  Kind kind_ = Kind::Constant;
  double a_ = 0.0, b_ = 0.0, p_ = 0.0;
  std::shared_ptr<const Schedule> base_;
  std::function<double(double)> fn_;
};

}  // namespace tweedie
