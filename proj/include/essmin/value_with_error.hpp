#pragma once

#include <cmath>
#include <stdexcept>

namespace essmin {

/// A real number together with a non-negative absolute error radius.
struct ValueWithError {
  double value = 0.0;
  double abs_error = 0.0;

  ValueWithError() = default;
  ValueWithError(double v, double err = 0.0) : value(v), abs_error(err) {  // NOLINT
    if (!(err >= 0.0) || !std::isfinite(err)) throw std::invalid_argument("error radius must be finite and >= 0");
  }

  double lower() const { return value - abs_error; }
  double upper() const { return value + abs_error; }

  /// True when |value - x| <= abs_error + slack.
  bool contains(double x, double slack = 0.0) const { return std::abs(value - x) <= abs_error + slack; }

  ValueWithError& operator+=(const ValueWithError& o) {
    value += o.value;
    abs_error += o.abs_error;
    return *this;
  }
  friend ValueWithError operator+(ValueWithError x, const ValueWithError& y) { return x += y; }
  friend ValueWithError operator*(double s, const ValueWithError& x) {
    return {s * x.value, std::abs(s) * x.abs_error};
  }
};

}  // namespace essmin
