#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "essmin/arithmetic.hpp"
#include "essmin/errors.hpp"
#include "essmin/upper_bounds.hpp"

using namespace essmin;

namespace {

BigRational q(long n, long d = 1) { return BigRational(n, d); }
GaussianRational g(std::string_view s) { return GaussianRational::parse(s); }

// Periodic trapezoid for (1/2pi) int log^+ |e^{i theta} + w| (test-only oracle).
double trapezoid_log_plus(std::complex<double> w, long points = 400000) {
  const double h = 2.0 * std::numbers::pi / points;
  double sum = 0.0;
  for (long k = 0; k < points; ++k) {
    const double m = std::abs(std::polar(1.0, k * h) + w);
    if (m > 1.0) sum += std::log(m);
  }
  return sum / points;
}

}  // namespace

TEST_CASE("normalize_problem") {
  CHECK(normalize_problem(q(-1), q(1)) == std::pair{q(1), q(1)});
  CHECK(normalize_problem(q(1), q(-2)) == std::pair{q(1), q(2)});
  CHECK(normalize_problem(q(-3, 2), q(-5)) == std::pair{q(3, 2), q(5)});
  CHECK_THROWS_AS(normalize_problem(q(0), q(1)), ArgumentError);
}

TEST_CASE("omega literal values") {
  CHECK(std::abs(omega(q(1), q(0), 0.0).value) <= kDefaultTol);
  CHECK(omega(q(1), q(4), 0.0).value == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(std::abs(omega(q(1), q(1), -0.5).value - 0.3194345) <= 1.5e-5);
  CHECK_THROWS_AS(omega(q(-1), q(1), 0.0), ArgumentError);
  CHECK_THROWS_AS(omega(q(1), q(-1), 0.0), ArgumentError);
  CHECK_THROWS_AS(omega(q(1), q(1), NAN), ArgumentError);
}

TEST_CASE("omega against a direct circle-integral oracle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> tdist(-4.0, 2.0);
  const std::pair<BigRational, BigRational> cases[] = {{q(1), q(1)}, {q(2), q(3)}, {q(7, 15), q(125, 18)}, {q(3), q(1, 2)}};
  for (const auto& [a, b] : cases) {
    const double r = (b / a).to_double();
    for (int k = 0; k < 5; ++k) {
      const double t = tdist(rng);
      const double oracle = delta(a, b).value + trapezoid_log_plus(t) + trapezoid_log_plus(r + t);
      CHECK(std::abs(omega(a, b, t).value - oracle) <= 1e-8);
      // shift form with c = b/a
      CHECK(std::abs(omega(a, b, t).value - (delta(a, b).value + phi(t).value + psi(r, t).value)) <= 3 * kDefaultTol);
    }
  }
}

TEST_CASE("omega_min closed forms") {
  const auto b0 = omega_min(q(2), q(0));
  CHECK(b0.method == UpperMethod::closed_form_b0);
  CHECK(b0.certified);
  CHECK(b0.value.value == doctest::Approx(std::log(2.0)));
  CHECK(b0.t_star == 0.0);

  const auto large = omega_min(q(1), q(4));
  CHECK(large.method == UpperMethod::closed_form_large_ratio);
  CHECK(large.certified);
  CHECK(large.value.value == doctest::Approx(std::log(4.0)));
  CHECK(large.t_star == 0.0);

  // Delta(7/15, 125/18) = log 90 and ratio 625/42
  const auto worked = omega_min(q(7, 15), q(125, 18));
  CHECK(worked.method == UpperMethod::closed_form_large_ratio);
  CHECK(worked.value.value == doctest::Approx(std::log(90.0) + std::log(625.0 / 42.0)).epsilon(1e-13));
}

TEST_CASE("omega_min series cases") {
  const auto zz = omega_min(q(1), q(1));
  CHECK(zz.method == UpperMethod::series_center);
  CHECK(zz.certified);
  CHECK(zz.t_star == doctest::Approx(-0.5));
  CHECK(zz.value.upper() <= 0.3194490869562);
  // 2 phi(-1/2) to 30 digits by arbitrary-precision quadrature: 0.319434292468760...
  CHECK(std::abs(zz.value.value - 0.319434292468760) <= 1e-12);

  const auto two = omega_min(q(1), q(2));
  CHECK(two.method == UpperMethod::series_center);
  CHECK(two.t_star == doctest::Approx(-1.0));
  CHECK(two.value.upper() <= 0.6461598436469);

  const auto three = omega_min(q(1), q(3));
  CHECK(three.method == UpperMethod::series_center);
  CHECK(three.t_star == doctest::Approx(-1.5));
  CHECK(three.value.upper() <= 0.9909205628144);

  const auto fixed = omega_min(q(1), q(1), kDefaultTol, 20);
  CHECK(fixed.series_terms == 20);
  CHECK(fixed.value.upper() <= 0.3194490869562);
}

TEST_CASE("omega_min dominates omega and is sign invariant") {
  std::mt19937_64 rng(5);
  const std::pair<long, long> grid[] = {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 2}, {2, 7}, {5, 1}, {1, 5}};
  for (auto [an, bn] : grid) {
    const BigRational a = q(an), b = q(bn);
    const auto best = omega_min(a, b);
    const double r = (b / a).to_double();
    std::uniform_real_distribution<double> tdist(-(1.0 + r) - 1.0, 2.0);
    for (int k = 0; k < 20; ++k) {
      const auto w = omega(a, b, tdist(rng));
      CHECK(w.value >= best.value.value - (best.value.abs_error + w.abs_error));
    }
    for (int sa : {-1, 1})
      for (int sb : {-1, 1}) {
        const auto [na, nb] = normalize_problem(q(sa * an), q(sb * bn));
        const auto other = omega_min(na, nb);
        CHECK(other.value.value == best.value.value);
        CHECK(other.t_star == best.t_star);
      }
  }
}

TEST_CASE("upper_bound_gaussian") {
  const auto a = upper_bound_gaussian(g("i"), g("2i"));
  CHECK(a.value.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(a.method == UpperMethod::gaussian_real_shift);
  CHECK_FALSE(a.certified);
  CHECK(a.t_star == doctest::Approx(-2.0));

  CHECK(upper_bound_gaussian(g("1+i"), g("2+2i")).value.value == doctest::Approx(2 * std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(upper_bound_gaussian(g("i"), g("i")).value.value - trapezoid_log_plus(1.0)) <= 1e-8);

  for (auto [x, y] : {std::pair{"1+2i", "3-i"}, {"7/15+i", "125/18"}, {"2i", "1/2+3i"}, {"3", "1+i"}}) {
    const auto u = upper_bound_gaussian(g(x), g(y));
    const auto v = upper_bound_gaussian(g(x).conj(), g(y).conj());
    CHECK(u.value.value == v.value.value);
  }

  CHECK_THROWS_AS(upper_bound_gaussian(g("2"), g("3")), ArgumentError);
  CHECK_THROWS_AS(upper_bound_gaussian(g("0"), g("i")), ArgumentError);
}

TEST_CASE("to_string of methods") {
  CHECK(to_string(UpperMethod::series_center) == "series_center");
  CHECK(to_string(UpperMethod::closed_form_b0) == "closed_form_b0");
}
