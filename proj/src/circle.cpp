#include "essmin/circle.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "essmin/errors.hpp"
#include "essmin/quadrature.hpp"

namespace essmin {

namespace {

using Real = boost::multiprecision::cpp_bin_float_100;
using Complex = boost::multiprecision::cpp_complex_100;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Real real_pi() { return boost::math::constants::pi<Real>(); }

Complex unit(const Real& angle) { return Complex(cos(angle), sin(angle)); }

// Working-precision unit roundoff for Real.
const Real& unit_roundoff() {
  static const Real u = std::numeric_limits<Real>::epsilon();
  return u;
}

double wrap_angle(double x) {
  x = std::fmod(x, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return x;
}

// Evaluates the binomial closed form for a fixed (c, t) and several n, sharing the powers of
// e^{ic} and e^{it}.
class EpsilonEvaluator {
 public:
  EpsilonEvaluator(const Real& c, const Real& t, int max_n) : pi_minus_c_(real_pi() - c) {
    const Complex ec = unit(c);
    const Complex et = unit(t);
    pow_c_.reserve(max_n + 1);
    pow_t_.reserve(max_n + 1);
    pow_c_.emplace_back(1);
    pow_t_.emplace_back(1);
    for (int k = 1; k <= max_n; ++k) {
      pow_c_.push_back(pow_c_.back() * ec);
      pow_t_.push_back(pow_t_.back() * et);
    }
  }

  struct Result {
    Complex value;
    Real rounding_bound;
  };

  Result operator()(int n) const {
    Complex value = pow_t_[n] * pi_minus_c_;
    if (n % 2) value = -value;
    Real magnitude = abs(pi_minus_c_);
    Real binom = 1;  // C(n, k), exact: every intermediate is an integer below 2^330
    for (int k = 0; k < n; ++k) {
      const int m = n - k;
      // (1 / (i m)) * C(n,k) * (-1)^k * ((-1)^m e^{itk} - e^{icm} e^{itk})
      const Complex endpoint_pi = (m % 2 ? Complex(-pow_t_[k]) : pow_t_[k]);
      const Complex endpoint_c = pow_c_[m] * pow_t_[k];
      Complex diff = endpoint_pi - endpoint_c;
      Real scale = binom / m;
      if (k % 2) scale = -scale;
      // divide by i: (x + i y) / i = y - i x
      value += Complex(diff.imag() * scale, -diff.real() * scale);
      magnitude += 2 * abs(scale);
      binom = binom * (n - k) / (k + 1);
    }
    return {value, magnitude * unit_roundoff() * (4 * n + 8)};
  }

 private:
  Real pi_minus_c_;
  std::vector<Complex> pow_c_;
  std::vector<Complex> pow_t_;
};

struct CenterGeometry {
  Real ratio;          // b / a
  Real alpha;          // arccos(b / 4a)
  Real midpoint;       // (pi + alpha) / 2
  Complex center;      // b/(2a) - e^{i midpoint}
  double q = 0.0;      // |1 + e^{i midpoint}| / |center|, rounded up
  double prefactor = 0.0;
};

CenterGeometry center_geometry(const BigRational& a, const BigRational& b) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  const BigRational r = b / a;
  if (r.sign() <= 0 || r >= BigRational(4)) {
    throw DomainError("series expansion needs 0 < b/a < 4, got b/a = " + r.to_string());
  }
  CenterGeometry g;
  g.ratio = Real(r.numerator().get_str()) / Real(r.denominator().get_str());
  g.alpha = acos(g.ratio / 4);
  g.midpoint = (real_pi() + g.alpha) / 2;
  const Complex e = unit(g.midpoint);
  g.center = Complex(g.ratio / 2) - e;
  if (!(g.center.imag() < 0)) throw InternalError("series center crossed the branch cut of log");
  const Real q = abs(Complex(1) + e) / abs(g.center);
  g.q = std::nextafter(static_cast<double>(q), 2.0);
  if (!(g.q < 1.0)) throw InternalError("series ratio q >= 1; expansion disc does not cover the arc");
  g.prefactor = std::nextafter(static_cast<double>(2 * (real_pi() - g.alpha) / real_pi()), 4.0);
  return g;
}

SeriesEvaluation evaluate_series(const CenterGeometry& g, int terms) {
  const EpsilonEvaluator eps(g.alpha, g.midpoint, terms);
  const Complex inv_center = Complex(1) / g.center;
  const Real inv_modulus = abs(inv_center);
  Complex power(1);
  Real power_modulus = 1;
  Complex sum(0);
  Real rounding = 0;
  for (int n = 1; n <= terms; ++n) {
    power *= inv_center;
    power_modulus *= inv_modulus;
    const auto term = eps(n);
    sum += term.value * power / n;
    rounding += term.rounding_bound * power_modulus / n;
  }
  const Real pi = real_pi();
  const Real t_n = 2 / pi * (log(abs(g.center)) * (pi - g.alpha) - sum.real());

  SeriesEvaluation out;
  out.partial_sum = static_cast<double>(t_n);
  out.rounding_bound = static_cast<double>(2 / pi * rounding) +
                       std::numeric_limits<double>::epsilon() * std::abs(out.partial_sum);
  out.ratio = g.q;
  out.terms = terms;
  out.alpha = static_cast<double>(g.alpha);
  out.tail_bound = tail_bound(g.q, terms, g.prefactor);
  return out;
}

}  // namespace

ValueWithError circle_log_plus_mean(double radius, std::complex<double> center, double tol) {
  if (!std::isfinite(radius) || !(radius > 0.0)) throw ArgumentError("circle radius must be positive and finite");
  if (!std::isfinite(center.real()) || !std::isfinite(center.imag())) throw ArgumentError("non-finite circle center");
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");

  const double w = std::abs(center);
  if (w == 0.0) return {std::max(0.0, std::log(radius)), 0.0};

  auto modulus_sq = [&](double theta) { return std::norm(radius * std::polar(1.0, theta) + center); };

  std::vector<double> cuts{0.0, kTwoPi};
  // |r e^{i theta} + w|^2 = r^2 + |w|^2 + 2 r |w| cos(theta - arg w) crosses 1 where
  // cos(theta - arg w) = (1 - r^2 - |w|^2) / (2 r |w|).
  const double c = (1.0 - radius * radius - w * w) / (2.0 * radius * w);
  if (c >= -1.0 && c <= 1.0) {
    const double base = std::arg(center);
    const double u = std::acos(c);
    cuts.push_back(wrap_angle(base + u));
    cuts.push_back(wrap_angle(base - u));
  }
  std::sort(cuts.begin(), cuts.end());

  auto integrand = [&](double theta) {
    const double m = modulus_sq(theta);
    return m > 1.0 ? 0.5 * std::log(m) : 0.0;
  };

  double value = 0.0, error = 0.0, magnitude = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    if (hi - lo <= 0.0) continue;
    if (modulus_sq(0.5 * (lo + hi)) <= 1.0) continue;  // log^+ vanishes on this whole arc
    const auto piece = integrate_adaptive(integrand, lo, hi, tol * (hi - lo));
    value += piece.value;
    error += piece.error;
    magnitude += std::abs(piece.value);
  }
  const double roundoff = 16.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return {value / kTwoPi, (error + roundoff) / kTwoPi};
}

ValueWithError phi(double t, double tol) {
  if (!std::isfinite(t)) throw ArgumentError("phi: non-finite argument");
  return circle_log_plus_mean(1.0, {t, 0.0}, tol);
}

ValueWithError psi(std::complex<double> c, double t, double tol) {
  if (!std::isfinite(t)) throw ArgumentError("psi: non-finite argument");
  return circle_log_plus_mean(1.0, c + t, tol);
}

EpsilonValue epsilon_closed_checked(double c, int n, double t) {
  if (n < 1) throw ArgumentError("epsilon: n must be >= 1");
  if (!(c >= 0.0 && c <= std::numbers::pi)) throw DomainError("epsilon: c must lie in [0, pi]");
  if (!std::isfinite(t)) throw ArgumentError("epsilon: non-finite t");
  if (c == std::numbers::pi) return {{0.0, 0.0}, 0.0};
  const EpsilonEvaluator eval{Real(c), Real(t), n};
  const auto r = eval(n);
  const std::complex<double> v(static_cast<double>(r.value.real()), static_cast<double>(r.value.imag()));
  return {v, static_cast<double>(r.rounding_bound) + std::numeric_limits<double>::epsilon() * std::abs(v)};
}

std::complex<double> epsilon_closed(double c, int n, double t) { return epsilon_closed_checked(c, n, t).value; }

double alpha_angle(const BigRational& a, const BigRational& b) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  const BigRational r = b / a;
  if (r.sign() <= 0 || r >= BigRational(4)) throw DomainError("alpha angle needs 0 < b/a < 4");
  return static_cast<double>(acos(Real(r.numerator().get_str()) / Real(r.denominator().get_str()) / 4));
}

double tail_bound(double q, int terms, double prefactor) {
  if (!(q > 0.0) || !(q < 1.0)) throw DomainError("tail bound needs 0 < q < 1");
  if (terms < 0) throw ArgumentError("tail bound needs N >= 0");
  // Kahan-compensated sum of q^n/n for n > N until the terms are negligible; the remainder
  // beyond the last term is bounded by the geometric series q^(M+1) / ((M+1)(1-q)).
  double power = std::pow(q, terms + 1);
  double sum = 0.0, carry = 0.0;
  long n = terms + 1;
  constexpr long kMaxTerms = 50'000'000;
  for (; n < terms + 1 + kMaxTerms; ++n) {
    const double term = power / static_cast<double>(n);
    if (term == 0.0 || term < 1e-18 * sum) break;
    const double y = term - carry;
    const double s = sum + y;
    carry = (s - sum) - y;
    sum = s;
    power *= q;
  }
  const double remainder = power / (static_cast<double>(n) * (1.0 - q));
  const double total = (sum + remainder) * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());
  return prefactor * total;
}

SeriesEvaluation series_omega_center(const BigRational& a, const BigRational& b, int terms) {
  if (terms < 1) throw ArgumentError("series needs at least one term");
  return evaluate_series(center_geometry(a, b), terms);
}

SeriesEvaluation series_omega_center_adaptive(const BigRational& a, const BigRational& b, int cap) {
  if (cap < 1) throw ArgumentError("series cap must be at least 1");
  const CenterGeometry g = center_geometry(a, b);
  int terms = 1;
  while (terms < cap && tail_bound(g.q, terms, g.prefactor) >= kSeriesTailTarget) ++terms;
  return evaluate_series(g, terms);
}

SeriesEvaluation series_omega_center(const BigRational& a, const BigRational& b) {
  return series_omega_center_adaptive(a, b, kSeriesTermCap);
}

}  // namespace essmin
