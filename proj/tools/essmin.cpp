#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "essmin/errors.hpp"
#include "essmin/report.hpp"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kInconsistent = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double tolerance_from_env() {
  const char* env = std::getenv("ESSMIN_TOL");
  if (env == nullptr || *env == '\0') return essmin::kDefaultTol;
  try {
    std::size_t used = 0;
    const double v = std::stod(env, &used);
    if (used != std::string(env).size() || !(v > 0.0)) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("ESSMIN_TOL='") + env + "' is not a positive number");
  }
}

void add_config_options(CLI::App* cmd, essmin::ReportConfig& config, std::optional<double>& tol) {
  cmd->add_option("--tol", tol, "Quadrature tolerance (default 1e-12, or ESSMIN_TOL)");
  cmd->add_option("--grid", config.grid_size, "Grid size of the circle minimizations")->capture_default_str();
  cmd->add_option("--terms", config.series_terms, "Fixed series truncation N (0 = adaptive)")->capture_default_str();
  cmd->add_option("--series-cap", config.series_cap, "Largest N tried by the adaptive series")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds for the essential minimum of h(x) + h(ax + b)", "essmin"};
  app.set_version_flag("--version", std::string(essmin::kVersion));
  app.require_subcommand(1);

  essmin::ReportConfig config;
  std::optional<double> tol;
  std::string format = "text";
  std::string a, b;
  std::optional<double> t, x;
  std::optional<std::string> radii;
  std::string table;

  auto format_option = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  CLI::App* bounds = app.add_subcommand("bounds", "Lower bound, upper bound and density threshold for (a, b)");
  bounds->add_option("--a", a, "a, rational (n/d) or Gaussian (x+yi)")->required()->allow_extra_args(false);
  bounds->add_option("--b", b, "b, rational (n/d) or Gaussian (x+yi)")->required();
  bounds->add_option("--t", t, "Also evaluate the upper functional at this shift");
  add_config_options(bounds, config, tol);
  format_option(bounds);

  CLI::App* density = app.add_subcommand("density", "Density threshold for rational (a, b)");
  density->add_option("--a", a, "a, rational")->required();
  density->add_option("--b", b, "b, rational")->required();
  density->add_option("--x", x, "Centre of the archimedean disc (default: minimize)");
  density->add_option("--radii", radii, "Comma separated p-adic radii, one per denominator prime");
  add_config_options(density, config, tol);
  format_option(density);

  CLI::App* repro = app.add_subcommand("reproduce", "Recompute a table of published constants");
  repro->add_option("--table", table, "Table id")
      ->required()
      ->check(CLI::IsMember(essmin::reproduction_tables()));
  add_config_options(repro, config, tol);
  format_option(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const bool json = format == "json";
  try {
    config.tol = tol ? *tol : tolerance_from_env();
    if (*bounds) {
      const auto report = essmin::analyze(a, b, config, t);
      std::cout << (json ? essmin::to_json(report) : essmin::to_text(report));
      return report.consistent ? kOk : kInconsistent;
    }
    if (*density) {
      std::optional<std::vector<essmin::BigRational>> r;
      if (radii) r = essmin::parse_radii(*radii);
      const auto report = essmin::analyze_density(a, b, x, r, config);
      std::cout << (json ? essmin::to_json(report) : essmin::to_text(report));
      return kOk;
    }
    const auto rows = essmin::reproduce(table, config);
    std::cout << (json ? essmin::to_json(table, rows) : essmin::to_text(table, rows));
    for (const auto& row : rows)
      if (!row.pass) return kInconsistent;
    return kOk;
  } catch (const essmin::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
  } catch (const essmin::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
  } catch (const essmin::DomainError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const essmin::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInconsistent;
  }
  return kUsage;
}
