#pragma once

#include <array>
#include <functional>

namespace essmin {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated, not rigorous
  int panels = 0;
};

/// 15-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre15 {
  std::array<double, 15> nodes;
  std::array<double, 15> weights;
};

const GaussLegendre15& gauss_legendre15();

/// Adaptive Gauss-Legendre on [a, b]: a panel is accepted when the 15-point rule and the
/// sum over its two halves agree to the panel's share of `tol`; otherwise it is bisected.
/// The integrand must be smooth on [a, b] for the estimate to be meaningful.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                                    int max_depth = 48);

}  // namespace essmin
