#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "essmin/gaussian.hpp"
#include "essmin/rational.hpp"

namespace essmin {

enum class LowerMethod { prop34, prop35, prop36, L_numeric, tau_b0, tau_single_factor, zero };

std::string_view to_string(LowerMethod m);

struct LowerBoundResult {
  double value = 0.0;
  LowerMethod method = LowerMethod::zero;
  bool certified = false;  // closed forms only; circle minimizations are grid + local refinement
  std::string witness;
  std::optional<double> weight;  // maximizing A1 for tau_single_factor
};

inline constexpr int kDefaultGridSize = 4096;

/// Best of the three closed-form circle bounds whose hypotheses hold for some embedding, each
/// divided by the degree of Q(a,b). Hypotheses are decided exactly from norms.
std::optional<LowerBoundResult> closed_form_lower(const BigRational& a, const BigRational& b);
std::optional<LowerBoundResult> closed_form_lower(const GaussianRational& a, const GaussianRational& b);

/// Numeric minimum of one circle function over its two critical circles.
enum class CircleFunction { g, f, G };
double circle_function_min(CircleFunction which, std::complex<double> a, std::complex<double> b,
                           int grid_size = kDefaultGridSize);

/// max over {g, f, G} of the embedding-averaged circle minima.
LowerBoundResult L_numeric(const BigRational& a, const BigRational& b, int grid_size = kDefaultGridSize);
LowerBoundResult L_numeric(const GaussianRational& a, const GaussianRational& b, int grid_size = kDefaultGridSize);

/// Monic polynomial prod (x - r) with distinct roots r in {-1, 0, 1}, degree 1 or 2.
struct RootPolynomial {
  std::vector<long> roots;

  int degree() const { return static_cast<int>(roots.size()); }
  /// Integer coefficients, constant term first.
  std::vector<long> coefficients() const;
  std::complex<double> operator()(std::complex<double> z) const;
  std::string to_string() const;
};

struct MinimizerSet {
  enum class Kind { finite, infinite, empty };
  Kind kind = Kind::empty;
  std::vector<BigRational> points;  // ascending
  RootPolynomial polynomial;        // only meaningful for Kind::finite
};

/// Points of {0, 1, -1} where h(x) = h(ax + b) = 0.
MinimizerSet find_height_zero_minimizers(const BigRational& a, const BigRational& b);

/// h(a) for a not a root of unity, 0 (method zero) for a = +-1.
LowerBoundResult tau_b0(const BigRational& a);

/// Largest admissible weight A for the penalty A log|f(x)| in the non-archimedean inequality.
struct WeightRange {
  double max = 0.0;
  bool inclusive = false;
};
WeightRange feasible_weight_range(const BigRational& a, const BigRational& b, const RootPolynomial& f);

/// Where a two-circle minimization landed. circle 0 is |z| = 1, circle 1 is |az + b| = 1.
struct CircleMinimum {
  double value = 0.0;
  int circle = 0;
  double theta = 0.0;
  std::complex<double> z;
  std::array<double, 2> per_circle{};
};

/// inf over the two critical circles of log^+|z| + log^+|az+b| - A log|f(z)|.
CircleMinimum penalized_circle_minimum(const BigRational& a, const BigRational& b, const RootPolynomial& f,
                                       double weight, int grid_size = kDefaultGridSize);
double penalized_circle_min(const BigRational& a, const BigRational& b, const RootPolynomial& f, double weight,
                            int grid_size = kDefaultGridSize);

/// Abscissa tolerance of the golden-section search over the weight.
inline constexpr double kWeightSearchTol = 1e-10;

LowerBoundResult tau_single_factor(const BigRational& a, const BigRational& b, const RootPolynomial& f,
                                   int grid_size = kDefaultGridSize);

LowerBoundResult best_lower(const BigRational& a, const BigRational& b, int grid_size = kDefaultGridSize);
LowerBoundResult best_lower(const GaussianRational& a, const GaussianRational& b, int grid_size = kDefaultGridSize);

}  // namespace essmin
