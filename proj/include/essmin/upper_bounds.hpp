#pragma once

#include <string_view>
#include <utility>

#include "essmin/circle.hpp"
#include "essmin/gaussian.hpp"
#include "essmin/rational.hpp"
#include "essmin/value_with_error.hpp"

namespace essmin {

enum class UpperMethod {
  closed_form_b0,
  closed_form_large_ratio,
  series_center,
  quadrature_min,
  gaussian_real_shift,  // Gaussian inputs: quadrature on the real-shift formula, not certified
};

std::string_view to_string(UpperMethod m);

struct UpperBoundResult {
  ValueWithError value;
  double t_star = 0.0;
  UpperMethod method = UpperMethod::quadrature_min;
  bool certified = false;
  int series_terms = 0;  // N used when method == series_center
};

/// (|a|, |b|). The essential minimum only depends on absolute values.
std::pair<BigRational, BigRational> normalize_problem(const BigRational& a, const BigRational& b);

/// Delta(a,b) + phi(t) + phi(t + b/a) for a > 0, b >= 0.
ValueWithError omega(const BigRational& a, const BigRational& b, double t, double tol = kDefaultTol);

/// Abscissa tolerance of the golden-section refinement of omega over t.
inline constexpr double kOmegaSearchTol = 1e-10;

/// Smallest available upper bound for a > 0, b >= 0 (see UpperMethod for the cases).
/// `series_terms` = 0 picks N adaptively, up to `series_cap`.
UpperBoundResult omega_min(const BigRational& a, const BigRational& b, double tol = kDefaultTol,
                           int series_terms = 0, int series_cap = kSeriesTermCap);

/// Delta(a,b) + phi(Re(b/a)) + 2 phi(Im(b/a)) for a, b in Q(i), at least one of them non-real.
UpperBoundResult upper_bound_gaussian(const GaussianRational& a, const GaussianRational& b,
                                      double tol = kDefaultTol);

}  // namespace essmin
