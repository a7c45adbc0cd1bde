#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "essmin/rational.hpp"

namespace essmin {

/// Exact element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(BigRational re, BigRational im = BigRational(0)) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT

  /// Parses "x", "yi", "x+yi", "x-yi" with x, y rational literals; "i" and "-i" allowed.
  static GaussianRational parse(std::string_view text);

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  BigRational norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string to_string() const;

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y);
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) = default;

 private:
  BigRational re_;
  BigRational im_;
};

}  // namespace essmin
