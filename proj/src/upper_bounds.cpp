#include "essmin/upper_bounds.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "essmin/arithmetic.hpp"
#include "essmin/errors.hpp"

namespace essmin {

namespace {

void require_normalized(const BigRational& a, const BigRational& b) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (a.sign() < 0 || b.sign() < 0) throw ArgumentError("expected a > 0 and b >= 0; call normalize_problem first");
}

struct Sample {
  double t;
  double value;
};

// Golden-section minimum of f on [lo, hi].
Sample golden_section(const std::function<double(double)>& f, double lo, double hi, double xtol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > xtol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? Sample{x1, f1} : Sample{x2, f2};
}

}  // namespace

std::string_view to_string(UpperMethod m) {
  switch (m) {
    case UpperMethod::closed_form_b0: return "closed_form_b0";
    case UpperMethod::closed_form_large_ratio: return "closed_form_large_ratio";
    case UpperMethod::series_center: return "series_center";
    case UpperMethod::quadrature_min: return "quadrature_min";
    case UpperMethod::gaussian_real_shift: return "gaussian_real_shift";
  }
  throw InternalError("unknown upper-bound method");
}

std::pair<BigRational, BigRational> normalize_problem(const BigRational& a, const BigRational& b) {
  if (a.is_zero()) throw ArgumentError("a = 0 gives the degenerate family h(x) + h(b)");
  return {a.abs(), b.abs()};
}

ValueWithError omega(const BigRational& a, const BigRational& b, double t, double tol) {
  require_normalized(a, b);
  if (!std::isfinite(t)) throw ArgumentError("omega: non-finite t");
  const double r = (b / a).to_double();
  return delta(a, b) + phi(t, tol) + phi(t + r, tol);
}

UpperBoundResult omega_min(const BigRational& a, const BigRational& b, double tol, int series_terms, int series_cap) {
  require_normalized(a, b);
  UpperBoundResult out;
  if (b.is_zero()) {
    out.value = {weil_height(a).value, kLogTermError};
    out.t_star = 0.0;
    out.method = UpperMethod::closed_form_b0;
    out.certified = true;
    return out;
  }
  const BigRational ratio = b / a;
  if (ratio >= BigRational(4)) {
    out.value = delta(a, b) + ValueWithError(ratio.log_abs(), kLogTermError);
    out.t_star = 0.0;
    out.method = UpperMethod::closed_form_large_ratio;
    out.certified = true;
    return out;
  }

  const double r = ratio.to_double();
  const ValueWithError d = delta(a, b);
  // Delta is constant in t, so search only over the phi part.
  auto shape = [&](double t) { return phi(t, tol).value + phi(t + r, tol).value; };

  const double lo = -(1.0 + r), hi = 1.0;
  constexpr int kGrid = 64;
  std::vector<Sample> grid;
  grid.reserve(kGrid + 1);
  for (int k = 0; k <= kGrid; ++k) {
    const double t = lo + (hi - lo) * k / kGrid;
    grid.push_back({t, shape(t)});
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (grid[k].value < grid[best].value) best = k;
  const double left = grid[best == 0 ? 0 : best - 1].t;
  const double right = grid[best + 1 < grid.size() ? best + 1 : best].t;
  Sample refined = golden_section(shape, left, right, kOmegaSearchTol);
  if (grid[best].value < refined.value) refined = grid[best];
  if (const double at_zero = shape(0.0); at_zero < refined.value) refined = {0.0, at_zero};

  const double center = -0.5 * r;
  const double center_value = shape(center);
  if (center_value <= refined.value + 2.0 * tol) {
    const SeriesEvaluation s = series_terms > 0 ? series_omega_center(a, b, series_terms)
                                                : series_omega_center_adaptive(a, b, series_cap);
    out.value = d + s.certified();
    out.t_star = center;
    out.method = UpperMethod::series_center;
    out.certified = true;
    out.series_terms = s.terms;
    return out;
  }
  out.value = d + ValueWithError(refined.value, phi(refined.t, tol).abs_error + phi(refined.t + r, tol).abs_error);
  out.t_star = refined.t;
  out.method = UpperMethod::quadrature_min;
  out.certified = false;
  return out;
}

UpperBoundResult upper_bound_gaussian(const GaussianRational& a, const GaussianRational& b, double tol) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (a.is_real() && b.is_real()) {
    throw ArgumentError("a and b are both rational; use the rational upper bound instead");
  }
  const GaussianRational ratio = b / a;
  const double re = ratio.re().to_double();
  // phi is even, so |Im| keeps the result bit-identical under conjugation.
  const double im = std::abs(ratio.im().to_double());
  UpperBoundResult out;
  out.value = delta(a, b) + phi(re, tol) + 2.0 * phi(im, tol);
  out.t_star = -re;
  out.method = UpperMethod::gaussian_real_shift;
  out.certified = false;
  return out;
}

}  // namespace essmin
