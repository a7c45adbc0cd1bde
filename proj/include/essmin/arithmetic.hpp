#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "essmin/gaussian.hpp"
#include "essmin/rational.hpp"
#include "essmin/value_with_error.hpp"

namespace essmin {

using Prime = std::uint64_t;

/// Limits for the integer factoring used by valuations. Inputs are desk-scale;
/// anything above `max_value` is rejected instead of silently taking forever.
struct FactoringConfig {
  mpz_class max_value = mpz_class(1) << 63;
};

struct PrimePower {
  Prime prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(const mpz_class& n);

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<PrimePower> factor(const mpz_class& n, const FactoringConfig& config = {});

/// v_p(q); q must be nonzero.
long valuation(const BigRational& q, Prime p);

/// |q|_p = p^(-v_p(q)) as an exact rational, with |0|_p = 0.
BigRational padic_abs(const BigRational& q, Prime p);

/// Primes dividing the reduced denominator of a or of b.
std::vector<Prime> prime_support(const BigRational& a, const BigRational& b);

struct HeightValue {
  double value = 0.0;
};

/// h(m/n) = log max(|m|, n) in lowest terms, h(0) = 0.
HeightValue weil_height(const BigRational& q);

/// Additive valuations of a nonzero element of Q(i) at the places above each rational prime.
/// For a split prime p the pair is (v_pi(alpha), v_pi(conj alpha)) where pi = x + y*i is the
/// canonical Gaussian prime of norm p with x odd, y even, both positive. Exponents are scaled so
/// that |sigma(alpha)|_p = p^(-v); at the ramified prime 2 they may be half-integers.
struct ValuationProfile {
  std::map<Prime, std::pair<BigRational, BigRational>> entries;

  /// |sigma(alpha)|_p for sigma = id (conjugate = false) or complex conjugation.
  double abs_at(Prime p, bool conjugate) const;
  /// log |sigma(alpha)|_p, exact in rational-exponent form times log p.
  double log_abs_at(Prime p, bool conjugate) const;
};

/// (x, y) with x^2 + y^2 = p, x odd, y even, both positive; p must be a prime = 1 mod 4.
std::pair<mpz_class, mpz_class> sum_of_two_squares(Prime p);

ValuationProfile gaussian_valuations(const GaussianRational& alpha);

/// Height of an element of Q(i) as the normalized sum over both embeddings and all places.
HeightValue gaussian_weil_height(const GaussianRational& alpha);

/// Denominators-and-size correction Delta(a, b) for rational a != 0.
ValueWithError delta(const BigRational& a, const BigRational& b);
/// Delta(a, b) over G(a,b) = {id, conj} for a, b in Q(i), a != 0.
ValueWithError delta(const GaussianRational& a, const GaussianRational& b);

/// Per-term log evaluation budget folded into Delta's error radius.
inline constexpr double kLogTermError = 1e-14;

}  // namespace essmin
