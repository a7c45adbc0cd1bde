#include "essmin/rational.hpp"

#include <cmath>
#include <numbers>

#include "essmin/errors.hpp"

namespace essmin {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ArgumentError("malformed rational literal '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

BigRational::BigRational(long n, long d) : BigRational(mpz_class(n), mpz_class(d)) {}

BigRational::BigRational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw ArgumentError("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw ArgumentError("rational with zero denominator");
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_integer(text, text), mpz_class(1));
  }
  const mpz_class n = parse_integer(text.substr(0, slash), text);
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) {
    throw ArgumentError("malformed rational literal '" + std::string(text) + "'");
  }
  const mpz_class d(std::string(den), 10);
  if (d == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
  return BigRational(n, d);
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(q_))); }

BigRational BigRational::inverse() const {
  if (is_zero()) throw ArgumentError("inverse of zero");
  return BigRational(q_.get_den(), q_.get_num());
}

double log_mpz(const mpz_class& n) {
  if (n <= 0) throw ArgumentError("log of non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double BigRational::log_abs() const {
  if (is_zero()) throw ArgumentError("log of zero");
  return log_mpz(mpz_class(::abs(q_.get_num()))) - log_mpz(q_.get_den());
}

std::string BigRational::to_string() const { return q_.get_str(10); }

BigRational operator+(const BigRational& x, const BigRational& y) { return BigRational(mpq_class(x.q_ + y.q_)); }
BigRational operator-(const BigRational& x, const BigRational& y) { return BigRational(mpq_class(x.q_ - y.q_)); }
BigRational operator*(const BigRational& x, const BigRational& y) { return BigRational(mpq_class(x.q_ * y.q_)); }
BigRational operator/(const BigRational& x, const BigRational& y) {
  if (y.is_zero()) throw ArgumentError("division by zero");
  return BigRational(mpq_class(x.q_ / y.q_));
}
BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

}  // namespace essmin
