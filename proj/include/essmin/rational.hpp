#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace essmin {

/// Exact rational in lowest terms with positive denominator; zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(long n, long d);
  BigRational(const mpz_class& n, const mpz_class& d);
  explicit BigRational(const mpq_class& q);

  /// Parses "n" or "n/d" (optional leading sign, ASCII digits only).
  static BigRational parse(std::string_view text);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  BigRational abs() const;
  BigRational inverse() const;
  double to_double() const { return q_.get_d(); }
  /// Natural log of |q|; exact up to double rounding even for huge numerators/denominators.
  double log_abs() const;
  std::string to_string() const;

  friend BigRational operator+(const BigRational& x, const BigRational& y);
  friend BigRational operator-(const BigRational& x, const BigRational& y);
  friend BigRational operator*(const BigRational& x, const BigRational& y);
  friend BigRational operator/(const BigRational& x, const BigRational& y);
  BigRational operator-() const;

  friend bool operator==(const BigRational& x, const BigRational& y) { return x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const BigRational& x, const BigRational& y) {
    const int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

/// Natural log of a positive big integer.
double log_mpz(const mpz_class& n);

}  // namespace essmin
