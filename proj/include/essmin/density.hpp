#pragma once

#include <string>
#include <utility>
#include <vector>

#include "essmin/circle.hpp"
#include "essmin/rational.hpp"
#include "essmin/value_with_error.hpp"

namespace essmin {

/// Which additive shift the second archimedean term uses.
enum class GammaShift {
  scaled,  // b + a x
  plain,   // b + x; agrees with `scaled` when |a| = 1
};

/// Threshold above which the values of the height are dense, for p-adic radii r_i (one per
/// prime of prime_support(a, b), same order) and an archimedean disc centred at x.
ValueWithError gamma(const BigRational& a, const BigRational& b, double x, const std::vector<BigRational>& radii,
                     double tol = kDefaultTol, GammaShift shift = GammaShift::scaled);

struct DensityResult {
  ValueWithError threshold;
  double x_star = 0.0;
  std::vector<BigRational> radii;
  std::string interval_note;
};

/// Abscissa tolerance of the golden-section refinement over x.
inline constexpr double kDensitySearchTol = 1e-10;

/// gamma minimized over x with all radii 1.
DensityResult density_threshold(const BigRational& a, const BigRational& b, double tol = kDefaultTol);

/// (log((|b| - 1)/|a|), log(|b|/|a|)); needs |a| >= 1, |b| - |a| > 1 and |b/a| >= 4.
std::pair<double, double> large_ratio_interval(const BigRational& a, const BigRational& b);

}  // namespace essmin
