#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pmetrics {

/// Exponent of a p-metric or p-norm: a finite real p >= 1 or the
/// distinguished value infinity. Infinity carries exact max semantics and is
/// never approximated by a large float.
class Exponent {
 public:
  static Exponent infinity() { return Exponent(Infinite{}); }

  // Implicit on purpose: `product_distance(spec, x, y)` call sites pass 1.0,
  // 2.0, ... directly. +inf normalizes to the distinguished value.
  Exponent(double p) : p_(p) {
    if (std::isinf(p) && p > 0.0) {
      infinite_ = true;
      return;
    }
    if (!(p >= 1.0) || !std::isfinite(p))
      throw std::invalid_argument("p-exponent must be >= 1 or infinity, got " +
                                  std::to_string(p));
  }

  bool is_infinity() const { return infinite_; }

  /// Finite exponent value; +inf when is_infinity().
  double value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : p_;
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.p_ == b.p_);
  }

 private:
  struct Infinite {};
  explicit Exponent(Infinite)
      : p_(std::numeric_limits<double>::infinity()), infinite_(true) {}

  double p_;
  bool infinite_ = false;
};

}  // namespace pmetrics
