#include "essmin/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "essmin/errors.hpp"

namespace essmin {

namespace {

constexpr unsigned kTrialLimit = 100000;

std::vector<unsigned> small_primes() {
  std::vector<bool> composite(kTrialLimit + 1, false);
  std::vector<unsigned> primes;
  for (unsigned i = 2; i <= kTrialLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long long j = static_cast<unsigned long long>(i) * i; j <= kTrialLimit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<unsigned>& prime_table() {
  static const std::vector<unsigned> table = small_primes();
  return table;
}

// Brent's variant of Pollard rho; n is odd, composite and has no factor below kTrialLimit.
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, q = 1, g = 1, ys;
    std::size_t r = 1;
    const std::size_t m = 128;
    auto step = [&](const mpz_class& v) {
      mpz_class out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          mpz_class diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        mpz_class diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const mpz_class& n, std::map<Prime, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[mpz_get_ui(n.get_mpz_t())] += 1;
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_large(d, out);
  factor_large(mpz_class(n / d), out);
}

long valuation_int(mpz_class n, Prime p) {
  long v = 0;
  const mpz_class pz(static_cast<unsigned long>(p));
  while (mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t())) {
    n /= pz;
    ++v;
  }
  return v;
}

double log_plus_of_power(Prime p, const BigRational& exponent) {
  if (exponent.sign() <= 0) return 0.0;
  return exponent.to_double() * std::log(static_cast<double>(p));
}

mpz_class lcm_den(const GaussianRational& alpha) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), alpha.re().denominator().get_mpz_t(), alpha.im().denominator().get_mpz_t());
  return l;
}

// alpha = (u + v i) / d with u, v, d integers, d > 0.
struct Cleared {
  mpz_class u, v, d;
};

Cleared clear(const GaussianRational& alpha) {
  Cleared c;
  c.d = lcm_den(alpha);
  c.u = alpha.re().numerator() * (c.d / alpha.re().denominator());
  c.v = alpha.im().numerator() * (c.d / alpha.im().denominator());
  return c;
}

long split_valuation(mpz_class u, mpz_class v, const mpz_class& x, const mpz_class& y, Prime p) {
  const mpz_class pz(static_cast<unsigned long>(p));
  long k = 0;
  while (true) {
    // (u + v i)(x - y i) = (ux + vy) + (vx - uy) i
    mpz_class re = u * x + v * y;
    mpz_class im = v * x - u * y;
    if (!mpz_divisible_p(re.get_mpz_t(), pz.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), pz.get_mpz_t())) break;
    u = re / pz;
    v = im / pz;
    ++k;
  }
  return k;
}

long ramified_valuation(mpz_class u, mpz_class v) {
  long k = 0;
  while (mpz_even_p(mpz_class(u + v).get_mpz_t())) {
    // (u + v i)(1 - i) / 2 = ((u + v) + (v - u) i) / 2
    mpz_class nu = (u + v) / 2;
    mpz_class nv = (v - u) / 2;
    u = nu;
    v = nv;
    ++k;
  }
  return k;
}

std::pair<BigRational, BigRational> gaussian_pair(const Cleared& c, Prime p) {
  const long vd = valuation_int(c.d, p);
  if (p == 2) {
    const long vr = ramified_valuation(c.u, c.v) - 2 * vd;
    BigRational e(vr, 2);
    return {e, e};
  }
  if (p % 4 == 3) {
    long vu = c.u == 0 ? std::numeric_limits<long>::max() : valuation_int(c.u, p);
    long vv = c.v == 0 ? std::numeric_limits<long>::max() : valuation_int(c.v, p);
    BigRational e(std::min(vu, vv) - vd);
    return {e, e};
  }
  const auto [x, y] = sum_of_two_squares(p);
  const long id = split_valuation(c.u, c.v, x, y, p) - vd;
  const long cj = split_valuation(c.u, mpz_class(-c.v), x, y, p) - vd;
  return {BigRational(id), BigRational(cj)};
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<PrimePower> factor(const mpz_class& n_in, const FactoringConfig& config) {
  if (n_in == 0) throw ArgumentError("cannot factor zero");
  mpz_class n = abs(n_in);
  if (n > config.max_value) {
    throw ArgumentError("integer " + n.get_str() + " exceeds the factoring bound " + config.max_value.get_str());
  }
  std::map<Prime, unsigned> found;
  for (unsigned p : prime_table()) {
    if (n == 1) break;
    if (mpz_class(static_cast<unsigned long>(p) * p) > n) {
      break;
    }
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      found[p] += 1;
    }
  }
  if (n > 1) factor_large(n, found);
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (const auto& [p, e] : found) out.push_back({p, e});
  return out;
}

long valuation(const BigRational& q, Prime p) {
  if (q.is_zero()) throw ArgumentError("valuation of zero");
  return valuation_int(q.numerator(), p) - valuation_int(q.denominator(), p);
}

BigRational padic_abs(const BigRational& q, Prime p) {
  if (!is_prime(mpz_class(static_cast<unsigned long>(p)))) {
    throw ArgumentError(std::to_string(p) + " is not prime");
  }
  if (q.is_zero()) return BigRational(0);
  const long v = valuation(q, p);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(std::labs(v)));
  return v >= 0 ? BigRational(mpz_class(1), power) : BigRational(power, mpz_class(1));
}

std::vector<Prime> prime_support(const BigRational& a, const BigRational& b) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  std::vector<Prime> out;
  for (const auto& pp : factor(l)) out.push_back(pp.prime);
  return out;
}

HeightValue weil_height(const BigRational& q) {
  if (q.is_zero()) return {0.0};
  const mpz_class m = abs(q.numerator());
  const mpz_class& n = q.denominator();
  return {log_mpz(m > n ? m : n)};
}

double ValuationProfile::log_abs_at(Prime p, bool conjugate) const {
  const auto it = entries.find(p);
  if (it == entries.end()) return 0.0;
  const BigRational& v = conjugate ? it->second.second : it->second.first;
  return -v.to_double() * std::log(static_cast<double>(p));
}

double ValuationProfile::abs_at(Prime p, bool conjugate) const { return std::exp(log_abs_at(p, conjugate)); }

std::pair<mpz_class, mpz_class> sum_of_two_squares(Prime p) {
  const mpz_class pz(static_cast<unsigned long>(p));
  if (p % 4 != 1 || !is_prime(pz)) throw ArgumentError(std::to_string(p) + " is not a prime = 1 mod 4");
  // r^2 = -1 mod p from any quadratic non-residue c: r = c^((p-1)/4).
  mpz_class r;
  for (unsigned long c = 2;; ++c) {
    const mpz_class cz(c);
    if (mpz_legendre(cz.get_mpz_t(), pz.get_mpz_t()) != -1) continue;
    const mpz_class e = (pz - 1) / 4;
    mpz_powm(r.get_mpz_t(), cz.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
    break;
  }
  // Cornacchia: Euclid on (p, r) until the remainder drops below sqrt(p).
  mpz_class a = pz, b = r;
  if (2 * b > pz) b = pz - b;
  while (b * b > pz) {
    mpz_class t = a % b;
    a = b;
    b = t;
  }
  mpz_class other = pz - b * b;
  mpz_class y;
  mpz_sqrt(y.get_mpz_t(), other.get_mpz_t());
  if (y * y != other) throw InternalError("Cornacchia failed for p = " + std::to_string(p));
  mpz_class x = b;
  if (mpz_even_p(x.get_mpz_t())) std::swap(x, y);
  return {x, y};
}

ValuationProfile gaussian_valuations(const GaussianRational& alpha) {
  if (alpha.is_zero()) throw ArgumentError("valuations of zero");
  const Cleared c = clear(alpha);
  const mpz_class norm = c.u * c.u + c.v * c.v;
  std::vector<Prime> primes;
  for (const auto& pp : factor(norm)) primes.push_back(pp.prime);
  for (const auto& pp : factor(c.d)) primes.push_back(pp.prime);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  ValuationProfile profile;
  for (Prime p : primes) {
    auto pair = gaussian_pair(c, p);
    if (pair.first.is_zero() && pair.second.is_zero()) continue;
    profile.entries.emplace(p, std::move(pair));
  }
  return profile;
}

HeightValue gaussian_weil_height(const GaussianRational& alpha) {
  if (alpha.is_zero()) return {0.0};
  const ValuationProfile profile = gaussian_valuations(alpha);
  double finite = 0.0;
  for (const auto& [p, pair] : profile.entries) {
    finite += log_plus_of_power(p, -pair.first) + log_plus_of_power(p, -pair.second);
  }
  // |alpha| = |conj alpha|, so the archimedean part is 2 log^+ |alpha|.
  const double log_abs = 0.5 * (alpha.norm().log_abs());
  const double arch = 2.0 * std::max(0.0, log_abs);
  return {0.5 * (finite + arch)};
}

ValueWithError delta(const BigRational& a, const BigRational& b) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  double total = 0.0;
  int terms = 0;
  for (Prime p : prime_support(a, b)) {
    long e = -valuation(a, p);
    if (!b.is_zero()) e = std::max(e, -valuation(b, p));
    if (e > 0) {
      total += static_cast<double>(e) * std::log(static_cast<double>(p));
      ++terms;
    }
  }
  if (a.abs() > BigRational(1)) {
    total += a.log_abs();
    ++terms;
  }
  return {total, kLogTermError * terms};
}

ValueWithError delta(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero()) throw ArgumentError("a must be nonzero");
  if (a.is_real() && b.is_real()) return delta(a.re(), b.re());

  const Cleared ca = clear(a);
  std::vector<Prime> primes;
  for (const auto& pp : factor(ca.d)) primes.push_back(pp.prime);
  std::optional<Cleared> cb;
  if (!b.is_zero()) {
    cb = clear(b);
    for (const auto& pp : factor(cb->d)) primes.push_back(pp.prime);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  double total = 0.0;
  int terms = 0;
  for (Prime p : primes) {
    const auto va = gaussian_pair(ca, p);
    BigRational id = -va.first;
    BigRational cj = -va.second;
    if (cb) {
      const auto vb = gaussian_pair(*cb, p);
      id = std::max(id, -vb.first);
      cj = std::max(cj, -vb.second);
    }
    // Summed as one commutative pair so conjugating both inputs is bit-exact.
    const double pair_sum = log_plus_of_power(p, id) + log_plus_of_power(p, cj);
    if (pair_sum > 0.0) {
      total += pair_sum;
      terms += 2;
    }
  }
  const BigRational na = a.norm();
  if (na > BigRational(1)) {
    total += na.log_abs();  // 2 * log |a|, one log^+ |sigma(a)| per embedding
    terms += 2;
  }
  return {total, kLogTermError * terms};
}

}  // namespace essmin
