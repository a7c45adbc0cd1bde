#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "essmin/circle.hpp"
#include "essmin/density.hpp"
#include "essmin/lower_bounds.hpp"
#include "essmin/upper_bounds.hpp"

namespace essmin {

inline constexpr std::string_view kVersion = "0.1.0";

/// Allowed excess of a numeric lower bound over the upper bound before a report is flagged.
inline constexpr double kSandwichSlack = 1e-9;

/// lower <= upper + its error + kSandwichSlack.
bool sandwich_holds(const LowerBoundResult& lower, const UpperBoundResult& upper);

struct ReportConfig {
  double tol = kDefaultTol;
  int grid_size = kDefaultGridSize;
  int series_terms = 0;  // 0: adaptive
  int series_cap = kSeriesTermCap;

  friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct ProblemEcho {
  std::string a;
  std::string b;
  std::string field;  // "Q" or "Q(i)"
  std::string normalized_a;
  std::string normalized_b;

  friend bool operator==(const ProblemEcho&, const ProblemEcho&) = default;
};

struct OmegaSample {
  double t = 0.0;
  ValueWithError value;
};

struct BoundReport {
  ProblemEcho problem;
  LowerBoundResult lower;
  UpperBoundResult upper;
  std::optional<DensityResult> density;  // rational inputs only
  std::optional<OmegaSample> omega_at_t;
  ReportConfig config;
  std::vector<std::string> notes;
  std::string version{kVersion};
  bool consistent = true;
};

bool operator==(const BoundReport& x, const BoundReport& y);

/// Parses a and b (rational or Gaussian literals) and runs upper, lower and density bounds.
BoundReport analyze(std::string_view a, std::string_view b, const ReportConfig& config = {},
                    std::optional<double> t = std::nullopt);

struct DensityReport {
  ProblemEcho problem;
  DensityResult density;
  bool minimized = true;  // false when x was fixed by the caller
  ReportConfig config;
  std::vector<std::string> notes;
  std::string version{kVersion};
};

/// Threshold at a given x and radii, or minimized over x with unit radii when x is absent.
DensityReport analyze_density(std::string_view a, std::string_view b, std::optional<double> x,
                              std::optional<std::vector<BigRational>> radii, const ReportConfig& config = {});

struct ReproductionRow {
  std::string label;
  double reference_constant = 0.0;
  ValueWithError computed;
  double band = 0.0;  // how far below the constant a value may land
  bool pass = false;
};

/// Table ids: "thm2.9", "thmA", "cor3.9", "thm4.3-examples". Unknown ids throw ArgumentError.
std::vector<ReproductionRow> reproduce(std::string_view table_id, const ReportConfig& config = {});
const std::vector<std::string>& reproduction_tables();

std::string to_json(const BoundReport& report);
BoundReport bound_report_from_json(std::string_view text);
std::string to_json(const DensityReport& report);
std::string to_json(std::string_view table_id, const std::vector<ReproductionRow>& rows);

std::string to_text(const BoundReport& report);
std::string to_text(const DensityReport& report);
std::string to_text(std::string_view table_id, const std::vector<ReproductionRow>& rows);

/// Comma separated positive rationals, e.g. "1,1/2,3".
std::vector<BigRational> parse_radii(std::string_view text);

}  // namespace essmin
