#include "essmin/gaussian.hpp"

#include "essmin/errors.hpp"

namespace essmin {

namespace {

BigRational parse_coefficient(std::string_view coeff, std::string_view whole) {
  if (coeff.empty() || coeff == "+") return BigRational(1);
  if (coeff == "-") return BigRational(-1);
  try {
    return BigRational::parse(coeff);
  } catch (const ArgumentError&) {
    throw ArgumentError("malformed Gaussian literal '" + std::string(whole) + "'");
  }
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ArgumentError("empty literal");
  if (text.back() != 'i') return {BigRational::parse(text), BigRational(0)};

  const std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {BigRational(0), parse_coefficient(body, text)};
  const std::string_view real_part = body.substr(0, split);
  const std::string_view imag_part = body.substr(split);
  BigRational re;
  try {
    re = BigRational::parse(real_part);
  } catch (const ArgumentError&) {
    throw ArgumentError("malformed Gaussian literal '" + std::string(text) + "'");
  }
  return {re, parse_coefficient(imag_part, text)};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string out;
  if (!re_.is_zero()) out = re_.to_string();
  const BigRational mag = im_.abs();
  if (im_.sign() < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (mag != BigRational(1)) out += mag.to_string();
  return out + "i";
}

GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
  if (y.is_zero()) throw ArgumentError("division by zero");
  const BigRational n = y.norm();
  const GaussianRational num = x * y.conj();
  return {num.re_ / n, num.im_ / n};
}

}  // namespace essmin
