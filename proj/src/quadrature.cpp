#include "essmin/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace essmin {

namespace {

GaussLegendre15 build_rule() {
  constexpr int n = 15;
  GaussLegendre15 rule{};
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-17) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const auto& rule = gauss_legendre15();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < 15; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

void refine(const std::function<double(double)>& f, double a, double b, double whole, double tol, int depth,
            QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const double left = panel(f, a, m);
  const double right = panel(f, m, b);
  const double halves = left + right;
  const double diff = std::abs(halves - whole);
  if (diff <= tol || depth <= 0 || m <= a || m >= b) {
    out.value += halves;
    out.error += diff;
    out.panels += 2;
    return;
  }
  refine(f, a, m, left, 0.5 * tol, depth - 1, out);
  refine(f, m, b, right, 0.5 * tol, depth - 1, out);
}

}  // namespace

const GaussLegendre15& gauss_legendre15() {
  static const GaussLegendre15 rule = build_rule();
  return rule;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                                    int max_depth) {
  QuadratureResult out;
  if (b <= a) return out;
  refine(f, a, b, panel(f, a, b), tol, max_depth, out);
  return out;
}

}  // namespace essmin
