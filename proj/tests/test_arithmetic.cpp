#include <cmath>
#include <random>

#include "doctest.h"
#include "essmin/arithmetic.hpp"
#include "essmin/errors.hpp"

using namespace essmin;

namespace {

BigRational q(long n, long d = 1) { return BigRational(n, d); }
GaussianRational g(std::string_view s) { return GaussianRational::parse(s); }

// Independent factorization by plain trial division (test-only oracle).
std::vector<std::pair<long, int>> trial_factor(long n) {
  std::vector<std::pair<long, int>> out;
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

// h(m/n) as the sum over all places of log^+ |m/n|_v, with valuations from trial division.
double place_sum_height(long m, long n) {
  if (m == 0) return 0.0;
  double total = std::max(0.0, std::log(std::abs(static_cast<double>(m) / static_cast<double>(n))));
  for (auto [p, e] : trial_factor(n)) total += e * std::log(static_cast<double>(p));  // |m/n|_p = p^e > 1
  return total;
}

// Height of x + y i (y != 0) from the Mahler measure of its primitive integer minimal polynomial
// c2 X^2 + c1 X + c0, proportional to X^2 - 2x X + (x^2 + y^2).
double mahler_height(long xn, long xd, long yn, long yd) {
  const double x = static_cast<double>(xn) / xd, y = static_cast<double>(yn) / yd;
  const BigRational two_x = q(2 * xn, xd);
  const BigRational nrm = q(xn, xd) * q(xn, xd) + q(yn, yd) * q(yn, yd);
  mpz_class lead;
  mpz_lcm(lead.get_mpz_t(), two_x.denominator().get_mpz_t(), nrm.denominator().get_mpz_t());
  mpz_class c1 = two_x.numerator() * (lead / two_x.denominator());
  mpz_class c0 = nrm.numerator() * (lead / nrm.denominator());
  mpz_class content;
  mpz_gcd(content.get_mpz_t(), lead.get_mpz_t(), c1.get_mpz_t());
  mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c0.get_mpz_t());
  lead /= content;
  const double modulus = std::hypot(x, y);
  return 0.5 * (std::log(lead.get_d()) + 2.0 * std::max(0.0, std::log(modulus)));
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(BigRational::parse("7/15") == q(7, 15));
  CHECK(BigRational::parse("-250/36") == q(-125, 18));
  CHECK(BigRational::parse("0/5").denominator() == 1);
  CHECK_THROWS_AS(BigRational::parse("1.5"), ArgumentError);
  CHECK_THROWS_AS(BigRational::parse("3/0"), ArgumentError);
  CHECK_THROWS_AS(BigRational::parse("3/-2"), ArgumentError);
  CHECK_THROWS_AS(BigRational::parse(""), ArgumentError);
}

TEST_CASE("gaussian literals") {
  CHECK(g("i") == GaussianRational(q(0), q(1)));
  CHECK(g("-i") == GaussianRational(q(0), q(-1)));
  CHECK(g("2i") == GaussianRational(q(0), q(2)));
  CHECK(g("1/2+3/4i") == GaussianRational(q(1, 2), q(3, 4)));
  CHECK(g("1-i") == GaussianRational(q(1), q(-1)));
  CHECK(g("-1/2-i") == GaussianRational(q(-1, 2), q(-1)));
  CHECK(g("7/15") == GaussianRational(q(7, 15)));
  CHECK(g("1/2+3/4i").to_string() == "1/2+3/4i");
  CHECK_THROWS_AS(g("1+2j"), ArgumentError);
  CHECK_THROWS_AS(g("1++i"), ArgumentError);
}

TEST_CASE("padic_abs") {
  CHECK(padic_abs(q(12, 5), 5) == q(5));
  CHECK(padic_abs(q(1), 7) == q(1));
  CHECK(padic_abs(q(12, 5), 2) == q(1, 4));
  CHECK(padic_abs(q(0), 3) == q(0));
  CHECK_THROWS_AS(padic_abs(q(3), 4), ArgumentError);
}

TEST_CASE("prime_support") {
  CHECK(prime_support(q(1, 2), q(3, 4)) == std::vector<Prime>{2});
  CHECK(prime_support(q(1), q(2)).empty());
  CHECK(prime_support(q(7, 15), q(125, 18)) == std::vector<Prime>{2, 3, 5});
  CHECK(prime_support(q(5, 6), q(0)) == std::vector<Prime>{2, 3});
  CHECK_THROWS_AS(prime_support(q(0), q(1)), ArgumentError);
}

TEST_CASE("factor handles large prime factors and enforces the bound") {
  const mpz_class n = mpz_class("1000000007") * mpz_class("998244353");
  const auto f = factor(n);
  REQUIRE(f.size() == 2);
  CHECK(f[0].prime == 998244353ULL);
  CHECK(f[1].prime == 1000000007ULL);
  CHECK_THROWS_AS(factor(mpz_class(1) << 70), ArgumentError);
  FactoringConfig tight;
  tight.max_value = 1000;
  CHECK_THROWS_AS(factor(mpz_class(1001), tight), ArgumentError);
}

TEST_CASE("weil_height matches the place-sum oracle") {
  CHECK(weil_height(q(1)).value == 0.0);
  CHECK(weil_height(q(0)).value == 0.0);
  CHECK(weil_height(q(2)).value == doctest::Approx(place_sum_height(2, 1)).epsilon(1e-15));
  CHECK(weil_height(q(3, 2)).value == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(place_sum_height(3, 2) == doctest::Approx(std::log(3.0)).epsilon(1e-15));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
  for (int k = 0; k < 200; ++k) {
    const long m = num(rng), n = den(rng);
    const BigRational r(m, n);
    const double oracle = place_sum_height(r.numerator().get_si(), r.denominator().get_si());
    CHECK(weil_height(r).value == doctest::Approx(oracle).epsilon(1e-13));
    if (!r.is_zero()) CHECK(weil_height(r).value == weil_height(r.inverse()).value);
  }
}

TEST_CASE("product formula holds exactly on random rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int k = 0; k < 200; ++k) {
    long m = num(rng);
    if (m == 0) m = 1;
    const BigRational r(m, den(rng));
    BigRational product = r.abs();
    for (auto [p, e] : trial_factor(r.numerator().get_si() * r.denominator().get_si())) {
      product = product * padic_abs(r, static_cast<Prime>(p));
    }
    CHECK(product == q(1));
  }
}

TEST_CASE("sum_of_two_squares") {
  for (Prime p : {5ULL, 13ULL, 17ULL, 29ULL, 1000000009ULL}) {
    const auto [x, y] = sum_of_two_squares(p);
    CHECK(x * x + y * y == mpz_class(static_cast<unsigned long>(p)));
    CHECK(mpz_odd_p(x.get_mpz_t()));
    CHECK(x > 0);
    CHECK(y > 0);
  }
  CHECK_THROWS_AS(sum_of_two_squares(7), ArgumentError);
}

TEST_CASE("gaussian_valuations") {
  CHECK(gaussian_valuations(g("i")).entries.empty());
  const auto two_i = gaussian_valuations(g("2i"));
  REQUIRE(two_i.entries.size() == 1);
  CHECK(two_i.entries.at(2) == std::make_pair(q(1), q(1)));

  const auto half = gaussian_valuations(g("1/2+1/2i"));
  REQUIRE(half.entries.size() == 1);
  CHECK(half.entries.at(2).first == q(-1, 2));
  CHECK(half.abs_at(2, false) == doctest::Approx(std::sqrt(2.0)));
  CHECK(half.abs_at(2, true) == doctest::Approx(std::sqrt(2.0)));

  // 2 + i is one of the primes above 5, 3 is inert.
  const auto split = gaussian_valuations(g("6+3i"));
  REQUIRE(split.entries.count(5) == 1);
  const auto [vid, vconj] = split.entries.at(5);
  CHECK(vid + vconj == q(1));
  CHECK(vid != vconj);
  CHECK(split.entries.at(3) == std::make_pair(q(1), q(1)));

  CHECK_THROWS_AS(gaussian_valuations(g("0")), ArgumentError);
}

TEST_CASE("valuation profile bookkeeping matches the norm") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-300, 300), den(1, 300);
  for (int k = 0; k < 100; ++k) {
    const GaussianRational a(BigRational(num(rng), den(rng)), BigRational(num(rng), den(rng)));
    if (a.is_zero()) continue;
    const auto profile = gaussian_valuations(a);
    double sum = 0.0;
    for (const auto& [p, pair] : profile.entries) {
      CHECK((pair.first != BigRational(0) || pair.second != BigRational(0)));
      if (p % 4 != 1) CHECK(pair.first == pair.second);
      sum += (pair.first + pair.second).to_double() * std::log(static_cast<double>(p));
    }
    CHECK(sum == doctest::Approx(a.norm().log_abs()).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("gaussian_weil_height") {
  CHECK(gaussian_weil_height(g("i")).value == 0.0);
  CHECK(gaussian_weil_height(g("0")).value == 0.0);
  CHECK(gaussian_weil_height(g("2i")).value == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(gaussian_weil_height(g("1/2+1/2i")).value == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(mahler_height(1, 2, 1, 2) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 60);
  for (int k = 0; k < 150; ++k) {
    const long xn = num(rng), xd = den(rng), yd = den(rng);
    long yn = num(rng);
    if (yn == 0) yn = 1;
    const GaussianRational a(BigRational(xn, xd), BigRational(yn, yd));
    CHECK(gaussian_weil_height(a).value == doctest::Approx(mahler_height(xn, xd, yn, yd)).epsilon(1e-12));
    CHECK(gaussian_weil_height(a).value == doctest::Approx(gaussian_weil_height(a.conj()).value).epsilon(1e-15));
  }
  for (int k = 0; k < 50; ++k) {
    const BigRational r(num(rng), den(rng));
    CHECK(gaussian_weil_height(GaussianRational(r)).value == doctest::Approx(weil_height(r).value).epsilon(1e-14));
  }
}

TEST_CASE("delta") {
  CHECK(delta(q(1), q(1)).value == 0.0);
  CHECK(delta(q(1), q(2)).value == 0.0);
  CHECK(delta(q(1), q(2)).abs_error == 0.0);
  const auto d = delta(q(7, 15), q(125, 18));
  CHECK(d.contains(std::log(90.0)));
  CHECK(delta(q(7, 15), BigRational::parse("250/36")).value == d.value);
  CHECK(delta(q(-3), q(0)).value == doctest::Approx(std::log(3.0)));
  CHECK_THROWS_AS(delta(q(0), q(1)), ArgumentError);

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
  for (int k = 0; k < 200; ++k) {
    long an = num(rng);
    if (an == 0) an = 1;
    const BigRational a(an, den(rng)), b(num(rng), den(rng));
    CHECK(delta(a, b).value >= 0.0);
    if (a.is_integer() && b.is_integer() && a.abs() <= q(1)) CHECK(delta(a, b).value == 0.0);
  }
}

TEST_CASE("gaussian delta") {
  CHECK(delta(g("i"), g("2i")).value == 0.0);
  CHECK(delta(g("1+i"), g("2+2i")).contains(std::log(2.0)));
  // (1+i)/2 has |.|_2 = sqrt(2) at both embeddings; |a| < 1.
  CHECK(delta(g("1/2+1/2i"), g("i")).contains(std::log(2.0)));
  // 1/(2+i) = (2-i)/5: one embedding sees |.|_5 = 5, the other 1.
  CHECK(delta(g("2/5-1/5i"), g("0")).contains(std::log(5.0)));
  CHECK(delta(g("2"), g("1/3")).value == delta(q(2), q(1, 3)).value);

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
  for (int k = 0; k < 100; ++k) {
    long an = num(rng);
    if (an == 0) an = 1;
    const GaussianRational a(BigRational(an, den(rng)), BigRational(num(rng), den(rng)));
    const GaussianRational b(BigRational(num(rng), den(rng)), BigRational(num(rng), den(rng)));
    CHECK(delta(a, b).value >= 0.0);
    CHECK(delta(a, b).value == delta(a.conj(), b.conj()).value);
  }
}
