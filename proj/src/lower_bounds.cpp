#include "essmin/lower_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "essmin/arithmetic.hpp"
#include "essmin/errors.hpp"

namespace essmin {

namespace {

using cd = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Numeric results within this distance of a certified one do not displace it.
constexpr double kTieTolerance = 1e-9;
// Numeric minima at or below this are round-off around a true zero (e.g. a root of unity on a circle).
constexpr double kNumericFloor = 1e-12;

double log_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, double xtol, double* arg_out) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > xtol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  if (arg_out) *arg_out = f1 <= f2 ? x1 : x2;
  return std::min(f1, f2);
}

struct CircleMin {
  double value = kInf;
  double theta = 0.0;
};

// Grid over [0, 2pi) followed by golden-section refinement around the three lowest local
// minima of the grid (the function is periodic; poles show up as +inf samples).
CircleMin minimize_periodic(const std::function<double(double)>& h, int grid_size) {
  if (grid_size < 8) throw ArgumentError("grid_size must be at least 8");
  std::vector<double> v(grid_size);
  const double step = kTwoPi / grid_size;
  for (int k = 0; k < grid_size; ++k) v[k] = h(k * step);

  std::vector<int> local;
  for (int k = 0; k < grid_size; ++k) {
    const double prev = v[(k + grid_size - 1) % grid_size], next = v[(k + 1) % grid_size];
    if (std::isfinite(v[k]) && v[k] <= prev && v[k] <= next) local.push_back(k);
  }
  std::stable_sort(local.begin(), local.end(), [&](int x, int y) { return v[x] < v[y]; });

  CircleMin best;
  for (int k = 0; k < grid_size; ++k)
    if (v[k] < best.value) best = {v[k], k * step};

  constexpr int kRounds = 3;
  for (int i = 0; i < std::min<int>(kRounds, local.size()); ++i) {
    const double centre = local[i] * step;
    double arg = centre;
    const double val = golden_min(h, centre - step, centre + step, 1e-13, &arg);
    if (val < best.value) best = {val, std::fmod(arg + kTwoPi, kTwoPi)};
  }
  return best;
}

CircleMinimum minimize_two_circles(const std::function<double(cd)>& F, const std::function<cd(double)>& second,
                                   int grid_size) {
  const auto c0 = minimize_periodic([&](double t) { return F(std::polar(1.0, t)); }, grid_size);
  const auto c1 = minimize_periodic([&](double t) { return F(second(t)); }, grid_size);
  CircleMinimum out;
  out.per_circle = {c0.value, c1.value};
  if (c1.value < c0.value) {
    out.value = c1.value;
    out.circle = 1;
    out.theta = c1.theta;
    out.z = second(c1.theta);
  } else {
    out.value = c0.value;
    out.theta = c0.theta;
    out.z = std::polar(1.0, c0.theta);
  }
  return out;
}

std::function<double(cd)> circle_function(CircleFunction which, cd a, cd b) {
  switch (which) {
    case CircleFunction::g:
      return [a, b](cd z) { return log_plus(std::abs(z)) + log_plus(std::abs(a * z + b)); };
    case CircleFunction::f:
      return [a, b](cd z) {
        const double m = std::abs(a * z + b);
        return m == 0.0 ? kInf : log_plus(std::abs(z)) + log_plus(1.0 / m);
      };
    case CircleFunction::G:
      return [a, b](cd z) {
        const double m = std::abs(z);
        return m == 0.0 || !std::isfinite(m) ? kInf : log_plus(m) + log_plus(std::abs((a + b * z) / z));
      };
  }
  throw InternalError("unknown circle function");
}

// Second critical circle: |az + b| = 1 for g and f, |(a + bz)/z| = 1 for G.
std::function<cd(double)> second_circle(CircleFunction which, cd a, cd b) {
  if (which == CircleFunction::G) {
    return [a, b](double t) {
      const cd den = std::polar(1.0, t) - b;
      return std::abs(den) == 0.0 ? cd(kInf, 0.0) : a / den;
    };
  }
  return [a, b](double t) { return (std::polar(1.0, t) - b) / a; };
}

std::string_view circle_function_name(CircleFunction which) {
  switch (which) {
    case CircleFunction::g: return "g";
    case CircleFunction::f: return "f";
    case CircleFunction::G: return "G";
  }
  return "?";
}

LowerBoundResult l_numeric_impl(const std::vector<std::pair<cd, cd>>& embeddings, int grid_size) {
  LowerBoundResult out;
  out.method = LowerMethod::L_numeric;
  double best = -kInf;
  std::string best_name;
  const double degree = static_cast<double>(embeddings.size());
  for (CircleFunction which : {CircleFunction::g, CircleFunction::f, CircleFunction::G}) {
    double sum = 0.0;
    for (const auto& [a, b] : embeddings) sum += circle_function_min(which, a, b, grid_size);
    const double avg = sum / degree;
    if (avg > best) {
      best = avg;
      best_name = circle_function_name(which);
    }
  }
  out.value = best > kNumericFloor ? best : 0.0;
  out.witness = "max attained by " + best_name + " (grid " + std::to_string(grid_size) + ", not certified)";
  return out;
}

struct Magnitudes {
  BigRational norm_a, norm_b;  // |a|^2, |b|^2 exactly
  double abs_a, abs_b;
};

std::optional<LowerBoundResult> closed_form_impl(const Magnitudes& m, bool b_zero, int degree) {
  std::optional<LowerBoundResult> best;
  auto offer = [&](double value, LowerMethod method, std::string witness) {
    value /= degree;
    if (!best || value > best->value) best = LowerBoundResult{value, method, true, std::move(witness), {}};
  };
  const BigRational one(1), four(4);
  // |b| - |a| > 1  <=>  X = N(b) - N(a) - 1 > 0 and X^2 > 4 N(a)
  const BigRational x = m.norm_b - m.norm_a - one;
  if (x.sign() > 0 && x * x > four * m.norm_a) {
    const double v = std::min(std::log(m.abs_b - m.abs_a), std::log((m.abs_b - 1.0) / m.abs_a));
    offer(v, LowerMethod::prop34, "|b| - |a| > 1");
  }
  const BigRational y = m.norm_a - m.norm_b - one;
  if (!b_zero && y.sign() > 0 && y * y > four * m.norm_b) {
    offer(std::log(m.abs_a / (m.abs_b + 1.0)), LowerMethod::prop35, "|a| - |b| > 1");
  }
  // |a| + |b| < 1  <=>  Y = 1 - N(a) - N(b) > 0 and Y^2 > 4 N(a) N(b); it implies ||a| - |b|| <= 1
  const BigRational z = one - m.norm_a - m.norm_b;
  if (!b_zero && z.sign() > 0 && z * z > four * m.norm_a * m.norm_b) {
    offer(std::log(1.0 / (m.abs_a + m.abs_b)), LowerMethod::prop36, "|a| + |b| < 1");
  }
  return best;
}

bool is_unit_or_zero(const BigRational& q) { return q.is_zero() || q.abs() == BigRational(1); }

}  // namespace

std::string_view to_string(LowerMethod m) {
  switch (m) {
    case LowerMethod::prop34: return "prop34";
    case LowerMethod::prop35: return "prop35";
    case LowerMethod::prop36: return "prop36";
    case LowerMethod::L_numeric: return "L_numeric";
    case LowerMethod::tau_b0: return "tau_b0";
    case LowerMethod::tau_single_factor: return "tau_single_factor";
    case LowerMethod::zero: return "zero";
  }
  throw InternalError("unknown lower-bound method");
}

std::optional<LowerBoundResult> closed_form_lower(const BigRational& a, const BigRational& b) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  return closed_form_impl({a * a, b * b, a.abs().to_double(), b.abs().to_double()}, b.is_zero(), 1);
}

std::optional<LowerBoundResult> closed_form_lower(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (a.is_real() && b.is_real()) return closed_form_lower(a.re(), b.re());
  // Both embeddings have the same absolute values; the other embedding contributes >= 0.
  return closed_form_impl({a.norm(), b.norm(), std::abs(a.to_complex()), std::abs(b.to_complex())}, b.is_zero(), 2);
}

double circle_function_min(CircleFunction which, cd a, cd b, int grid_size) {
  if (std::abs(a) == 0.0) throw ArgumentError("degenerate critical circle: a = 0");
  return minimize_two_circles(circle_function(which, a, b), second_circle(which, a, b), grid_size).value;
}

LowerBoundResult L_numeric(const BigRational& a, const BigRational& b, int grid_size) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  return l_numeric_impl({{cd(a.to_double()), cd(b.to_double())}}, grid_size);
}

LowerBoundResult L_numeric(const GaussianRational& a, const GaussianRational& b, int grid_size) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (a.is_real() && b.is_real()) return L_numeric(a.re(), b.re(), grid_size);
  return l_numeric_impl({{a.to_complex(), b.to_complex()}, {a.conj().to_complex(), b.conj().to_complex()}},
                        grid_size);
}

std::vector<long> RootPolynomial::coefficients() const {
  std::vector<long> c{1};
  for (long r : roots) {
    std::vector<long> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

cd RootPolynomial::operator()(cd z) const {
  cd v = 1.0;
  for (long r : roots) v *= z - static_cast<double>(r);
  return v;
}

std::string RootPolynomial::to_string() const {
  const auto c = coefficients();
  std::string out;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (c[k] == 0) continue;
    const long mag = std::labs(c[k]);
    if (out.empty()) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

MinimizerSet find_height_zero_minimizers(const BigRational& a, const BigRational& b) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  MinimizerSet out;
  if (b.is_zero() && a.abs() == BigRational(1)) {
    out.kind = MinimizerSet::Kind::infinite;
    return out;
  }
  for (long x : {-1L, 0L, 1L}) {
    if (is_unit_or_zero(a * BigRational(x) + b)) {
      out.points.emplace_back(x);
      out.polynomial.roots.push_back(x);
    }
  }
  if (out.points.empty()) return out;
  if (out.points.size() > 2) throw InternalError("more than two height-zero points among {0, 1, -1}");
  out.kind = MinimizerSet::Kind::finite;
  return out;
}

LowerBoundResult tau_b0(const BigRational& a) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (a.abs() == BigRational(1)) return {0.0, LowerMethod::zero, true, "a is a root of unity", {}};
  return {weil_height(a).value, LowerMethod::tau_b0, true, "h(" + a.to_string() + ")", {}};
}

WeightRange feasible_weight_range(const BigRational& a, const BigRational& b, const RootPolynomial& f) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  const int d = f.degree();
  if (d < 1 || d > 2) throw ArgumentError("only polynomials of degree 1 or 2 are supported");
  // Some place with |a|_p < 1, or with |b|_p > |a|_p, admits x with |x|_p > 1 and |ax+b|_p <= 1;
  // there the inequality reads log|x| >= A d log|x|. Otherwise |ax+b|_p >= |x|_p whenever
  // |x|_p > 1 and only the growth condition A d < 2 remains.
  bool tight = abs(a.numerator()) > 1;
  if (!tight && !b.is_zero()) {
    for (const auto& pp : factor(b.denominator())) {
      if (valuation(b, pp.prime) < valuation(a, pp.prime)) {
        tight = true;
        break;
      }
    }
  }
  return tight ? WeightRange{1.0 / d, true} : WeightRange{2.0 / d, false};
}

CircleMinimum penalized_circle_minimum(const BigRational& a, const BigRational& b, const RootPolynomial& f,
                                       double weight, int grid_size) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (!(weight >= 0.0)) throw ArgumentError("weight must be >= 0");
  const cd ac(a.to_double()), bc(b.to_double());
  auto F = [&](cd z) {
    double v = log_plus(std::abs(z)) + log_plus(std::abs(ac * z + bc));
    if (weight > 0.0) {
      const double m = std::abs(f(z));
      if (m == 0.0) return kInf;
      v -= weight * std::log(m);
    }
    return v;
  };
  return minimize_two_circles(F, second_circle(CircleFunction::g, ac, bc), grid_size);
}

double penalized_circle_min(const BigRational& a, const BigRational& b, const RootPolynomial& f, double weight,
                            int grid_size) {
  return penalized_circle_minimum(a, b, f, weight, grid_size).value;
}

LowerBoundResult tau_single_factor(const BigRational& a, const BigRational& b, const RootPolynomial& f,
                                   int grid_size) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  for (long r : f.roots) {
    if (r < -1 || r > 1) throw ArgumentError("polynomial roots must lie in {-1, 0, 1}");
    if (!is_unit_or_zero(a * BigRational(r) + b)) {
      throw PreconditionError("root " + std::to_string(r) + " of " + f.to_string() + " is not a height-zero point");
    }
  }
  const WeightRange range = feasible_weight_range(a, b, f);
  const double hi = range.inclusive ? range.max : range.max * (1.0 - 1e-9);
  // inf over z of functions affine in the weight: concave, so golden-section applies
  auto negH = [&](double w) { return -penalized_circle_min(a, b, f, w, grid_size); };
  double arg = 0.0;
  double best = -golden_min(negH, 0.0, hi, kWeightSearchTol, &arg);
  for (double w : {0.0, hi}) {
    const double v = -negH(w);
    if (v > best) {
      best = v;
      arg = w;
    }
  }
  const std::string witness = "f1 = " + f.to_string() + ", A1* = " + fmt(arg) + ", A1 range [0, " + fmt(range.max) +
                              (range.inclusive ? "]" : ")") + " (not certified)";
  if (!(best > kNumericFloor)) return {0.0, LowerMethod::zero, false, witness, arg};
  return {best, LowerMethod::tau_single_factor, false, witness, arg};
}

LowerBoundResult best_lower(const BigRational& a, const BigRational& b, int grid_size) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  std::vector<LowerBoundResult> candidates;
  if (auto c = closed_form_lower(a, b)) candidates.push_back(*c);
  const MinimizerSet mins = find_height_zero_minimizers(a, b);
  if (b.is_zero()) {
    candidates.push_back(tau_b0(a));
  } else if (mins.kind == MinimizerSet::Kind::finite) {
    candidates.push_back(tau_single_factor(a, b, mins.polynomial, grid_size));
  }
  candidates.push_back(L_numeric(a, b, grid_size));

  LowerBoundResult best{0.0, LowerMethod::zero, true, "no method gives a positive bound", {}};
  for (const auto& c : candidates) {
    if (c.method == LowerMethod::zero) continue;
    const double margin = best.certified && !c.certified ? kTieTolerance : 0.0;
    if (c.value > best.value + margin) best = c;
  }
  if (!(best.value > 0.0)) return {0.0, LowerMethod::zero, true, "no method gives a positive bound", {}};
  return best;
}

LowerBoundResult best_lower(const GaussianRational& a, const GaussianRational& b, int grid_size) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (a.is_real() && b.is_real()) return best_lower(a.re(), b.re(), grid_size);
  LowerBoundResult best{0.0, LowerMethod::zero, true, "no method gives a positive bound", {}};
  if (auto c = closed_form_lower(a, b)) best = *c;
  const auto l = L_numeric(a, b, grid_size);
  if (l.value > best.value + (best.certified ? kTieTolerance : 0.0)) best = l;
  if (!(best.value > 0.0)) return {0.0, LowerMethod::zero, true, "no method gives a positive bound", {}};
  return best;
}

}  // namespace essmin
