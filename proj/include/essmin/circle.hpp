#pragma once

#include <complex>

#include "essmin/rational.hpp"
#include "essmin/value_with_error.hpp"

namespace essmin {

inline constexpr double kDefaultTol = 1e-12;

/// Mean of log^+ |radius * e^{i theta} + center| over the circle, theta uniform on [0, 2pi].
///
/// The integrand is smooth except where |radius e^{i theta} + center| = 1; those angles are
/// solved in closed form and used as panel boundaries, panels where the modulus stays <= 1
/// are skipped, and each remaining panel goes through adaptive Gauss-Legendre. The error
/// radius is the adaptive estimate (not a rigorous enclosure).
ValueWithError circle_log_plus_mean(double radius, std::complex<double> center, double tol = kDefaultTol);

/// phi(t) = (1/2pi) int_0^{2pi} log^+ |e^{i theta} + t| d theta.
ValueWithError phi(double t, double tol = kDefaultTol);

/// Psi with shift c + t: (1/2pi) int_0^{2pi} log^+ |e^{i theta} + c + t| d theta.
ValueWithError psi(std::complex<double> c, double t, double tol = kDefaultTol);

/// int_c^pi (e^{i theta} - e^{i t})^n d theta from the expanded binomial closed form,
/// evaluated at 100 significant digits. `rounding_bound` bounds the working-precision error.
struct EpsilonValue {
  std::complex<double> value;
  double rounding_bound = 0.0;
};
EpsilonValue epsilon_closed_checked(double c, int n, double t);
std::complex<double> epsilon_closed(double c, int n, double t);

/// Argument of the first-quadrant intersection of the unit circle with the unit circle centred
/// at b/(2a): arccos(b/(4a)). Requires 0 < b/a < 4.
double alpha_angle(const BigRational& a, const BigRational& b);

/// prefactor * sum_{n > N} q^n / n = prefactor * (-log(1 - q) - sum_{n=1}^N q^n / n).
double tail_bound(double q, int terms, double prefactor);

/// Truncated expansion of 2*phi(-b/(2a)) around the midpoint of the arc [alpha, pi].
struct SeriesEvaluation {
  double partial_sum = 0.0;     // T_N
  double tail_bound = 0.0;      // bound on |R_N|
  double rounding_bound = 0.0;  // bound on floating error in partial_sum
  double ratio = 0.0;           // q
  int terms = 0;                // N
  double alpha = 0.0;           // radians

  /// Certified enclosure of 2*phi(-b/(2a)).
  ValueWithError certified() const { return {partial_sum, tail_bound + rounding_bound}; }
};

/// Requires 0 < b/a < 4 and terms >= 1.
SeriesEvaluation series_omega_center(const BigRational& a, const BigRational& b, int terms);

inline constexpr int kSeriesTermCap = 200;
inline constexpr double kSeriesTailTarget = 1e-12;

/// Smallest N with tail_bound < kSeriesTailTarget, capped at kSeriesTermCap.
SeriesEvaluation series_omega_center(const BigRational& a, const BigRational& b);
/// Same with a caller-chosen cap on N.
SeriesEvaluation series_omega_center_adaptive(const BigRational& a, const BigRational& b, int cap);

}  // namespace essmin
