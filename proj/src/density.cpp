#include "essmin/density.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "essmin/arithmetic.hpp"
#include "essmin/errors.hpp"

namespace essmin {

namespace {

struct Sample {
  double x;
  double value;
};

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

ValueWithError gamma(const BigRational& a, const BigRational& b, double x, const std::vector<BigRational>& radii,
                     double tol, GammaShift shift) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (!std::isfinite(x)) throw ArgumentError("gamma: non-finite x");
  const std::vector<Prime> primes = prime_support(a, b);
  if (radii.size() != primes.size()) {
    throw ArgumentError("expected " + std::to_string(primes.size()) + " radii (one per prime in the denominators of a, b), got " +
                        std::to_string(radii.size()));
  }

  double finite = 0.0;
  int log_terms = 0;
  BigRational product(1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const BigRational& r = radii[i];
    if (r.sign() <= 0) throw ArgumentError("radius " + r.to_string() + " is not positive");
    product = product * r;
    const BigRational ar = padic_abs(a, primes[i]) * r;
    const BigRational bp = padic_abs(b, primes[i]);
    const BigRational m = std::max(ar, bp);
    if (r > BigRational(1)) {
      finite += r.log_abs();
      ++log_terms;
    }
    if (m > BigRational(1)) {
      finite += m.log_abs();
      ++log_terms;
    }
  }

  const double inv_r = product.inverse().to_double();
  const double av = a.to_double();
  const double bv = b.to_double();
  const double second_center = shift == GammaShift::scaled ? bv + av * x : bv + x;
  ValueWithError out(finite, kLogTermError * log_terms);
  out += circle_log_plus_mean(inv_r, x, tol);
  out += circle_log_plus_mean(std::abs(av) * inv_r, second_center, tol);
  return out;
}

DensityResult density_threshold(const BigRational& a, const BigRational& b, double tol) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  DensityResult out;
  out.radii.assign(prime_support(a, b).size(), BigRational(1));
  auto f = [&](double x) { return gamma(a, b, x, out.radii, tol).value; };

  const double c = (b / a).to_double();
  // Both archimedean terms grow once |x| > 1 + |c|, so the minimum lies inside.
  const double span = 1.0 + std::abs(c);
  constexpr int kGrid = 128;
  std::vector<Sample> grid;
  grid.reserve(kGrid + 1);
  for (int k = 0; k <= kGrid; ++k) {
    const double x = -span + 2.0 * span * k / kGrid;
    grid.push_back({x, f(x)});
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (grid[k].value < grid[best].value) best = k;
  Sample chosen = grid[best];
  const double left = grid[best == 0 ? 0 : best - 1].x;
  const double right = grid[best + 1 < grid.size() ? best + 1 : best].x;
  if (const Sample s = golden_section(f, left, right, kDensitySearchTol); s.value < chosen.value) chosen = s;

  // Named candidates win ties so that symmetric cases land on the exact centre.
  for (double x : {-0.5 * c, 0.0, -0.5 * (1.0 + c)}) {
    if (const double v = f(x); v <= chosen.value + 2.0 * tol) {
      chosen = {x, v};
      break;
    }
  }

  out.threshold = gamma(a, b, chosen.x, out.radii, tol);
  out.x_star = chosen.x + 0.0;  // no -0 in reports
  out.interval_note = "image dense in [threshold, inf)";
  return out;
}

std::pair<double, double> large_ratio_interval(const BigRational& a, const BigRational& b) {
  const BigRational aa = a.abs(), bb = b.abs();
  if (aa < BigRational(1)) throw PreconditionError("needs |a| >= 1, got |a| = " + aa.to_string());
  if (!(bb - aa > BigRational(1))) {
    throw PreconditionError("needs |b| - |a| > 1, got " + (bb - aa).to_string());
  }
  if (bb / aa < BigRational(4)) throw PreconditionError("needs |b/a| >= 4, got " + (bb / aa).to_string());
  return {((bb - BigRational(1)) / aa).log_abs(), (bb / aa).log_abs()};
}

}  // namespace essmin
