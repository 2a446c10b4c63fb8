#ifndef GPSUM_SCALED_HPP
#define GPSUM_SCALED_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gpsum {

// Nonnegative quantity stored as mantissa * e^{log_scale}.  Factors like
// e^{-alpha n^r} underflow double precision by thousands of orders once n is
// large, so every norm and bound in the library carries its magnitude here.
// Normalized form keeps mantissa in [1, e) (or exactly 0).
class ScaledValue {
 public:
  ScaledValue() : mantissa_(0.0), log_scale_(0.0) {}

  static ScaledValue from_parts(double mantissa, double log_scale) {
    if (mantissa < 0.0)
      throw std::domain_error("ScaledValue: negative mantissa");
    ScaledValue v;
    v.mantissa_ = mantissa;
    v.log_scale_ = log_scale;
    v.normalize();
    return v;
  }

  static ScaledValue from_value(double value) {
    return from_parts(value, 0.0);
  }

  static ScaledValue from_log(double log_value) {
    if (std::isinf(log_value) && log_value < 0.0) return ScaledValue();
    return from_parts(1.0, log_value);
  }

  static ScaledValue zero() { return ScaledValue(); }

  bool is_zero() const { return mantissa_ == 0.0; }
  double mantissa() const { return mantissa_; }
  double log_scale() const { return log_scale_; }

  // Natural log of the represented value; -inf for zero.
  double log_value() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(mantissa_) + log_scale_;
  }

  // Collapses to a plain double; underflows to 0 / overflows to inf.
  double value() const {
    if (is_zero()) return 0.0;
    return mantissa_ * std::exp(log_scale_);
  }

  // Mantissa relative to an externally chosen log scale.
  double value_at_scale(double log_scale) const {
    if (is_zero()) return 0.0;
    return mantissa_ * std::exp(log_scale_ - log_scale);
  }

  friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
    if (a.is_zero() || b.is_zero()) return ScaledValue();
    return from_parts(a.mantissa_ * b.mantissa_, a.log_scale_ + b.log_scale_);
  }

  friend ScaledValue operator*(const ScaledValue& a, double c) {
    if (c < 0.0) throw std::domain_error("ScaledValue: negative factor");
    if (a.is_zero() || c == 0.0) return ScaledValue();
    return from_parts(a.mantissa_ * c, a.log_scale_);
  }

  friend ScaledValue operator*(double c, const ScaledValue& a) { return a * c; }

  friend ScaledValue operator/(const ScaledValue& a, const ScaledValue& b) {
    if (b.is_zero()) throw std::domain_error("ScaledValue: division by zero");
    if (a.is_zero()) return ScaledValue();
    return from_parts(a.mantissa_ / b.mantissa_, a.log_scale_ - b.log_scale_);
  }

  friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    double la = a.log_value(), lb = b.log_value();
    double hi = la > lb ? la : lb;
    double lo = la > lb ? lb : la;
    return from_log(hi + std::log1p(std::exp(lo - hi)));
  }

  // a/b as a plain double (ratios of same-regime quantities stay O(1)).
  double ratio_to(const ScaledValue& b) const {
    if (b.is_zero()) throw std::domain_error("ScaledValue: ratio to zero");
    if (is_zero()) return 0.0;
    return std::exp(log_value() - b.log_value());
  }

  friend bool operator<(const ScaledValue& a, const ScaledValue& b) {
    if (a.is_zero()) return !b.is_zero();
    if (b.is_zero()) return false;
    return a.log_value() < b.log_value();
  }
  friend bool operator<=(const ScaledValue& a, const ScaledValue& b) {
    return !(b < a);
  }

 private:
  void normalize() {
    if (mantissa_ == 0.0) {
      log_scale_ = 0.0;
      return;
    }
    double l = std::log(mantissa_);
    double shift = std::floor(l);
    if (shift != 0.0) {
      mantissa_ *= std::exp(-shift);
      log_scale_ += shift;
    }
    // one more nudge if rounding left us outside [1, e)
    if (mantissa_ >= M_E) {
      mantissa_ /= M_E;
      log_scale_ += 1.0;
    } else if (mantissa_ < 1.0) {
      mantissa_ *= M_E;
      log_scale_ -= 1.0;
    }
  }

  double mantissa_;
  double log_scale_;
};

}  // namespace gpsum

#endif
