#include "essmin/report.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "essmin/arithmetic.hpp"
#include "essmin/errors.hpp"
#include "json.hpp"

namespace essmin {

namespace {

using nlohmann::ordered_json;

// Shortest decimal that reads back to the same double.
std::string num(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

double parse_num(const ordered_json& j) {
  const std::string s = j.get<std::string>();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ArgumentError("bad number in report: '" + s + "'");
  return v;
}

template <class E, std::size_t N>
E parse_enum(const std::string& s, const E (&all)[N]) {
  for (E e : all)
    if (to_string(e) == s) return e;
  throw ArgumentError("unknown method name '" + s + "'");
}

constexpr UpperMethod kUpperMethods[] = {UpperMethod::closed_form_b0, UpperMethod::closed_form_large_ratio,
                                         UpperMethod::series_center, UpperMethod::quadrature_min,
                                         UpperMethod::gaussian_real_shift};
constexpr LowerMethod kLowerMethods[] = {LowerMethod::prop34, LowerMethod::prop35, LowerMethod::prop36,
                                         LowerMethod::L_numeric, LowerMethod::tau_b0,
                                         LowerMethod::tau_single_factor, LowerMethod::zero};

ordered_json vwe_json(const ValueWithError& v) { return {{"value", num(v.value)}, {"abs_error", num(v.abs_error)}}; }
ValueWithError vwe_from(const ordered_json& j) { return {parse_num(j.at("value")), parse_num(j.at("abs_error"))}; }

ordered_json config_json(const ReportConfig& c) {
  return {{"tol", num(c.tol)}, {"grid_size", c.grid_size}, {"series_terms", c.series_terms}, {"series_cap", c.series_cap}};
}
ReportConfig config_from(const ordered_json& j) {
  ReportConfig c;
  c.tol = parse_num(j.at("tol"));
  c.grid_size = j.at("grid_size").get<int>();
  c.series_terms = j.at("series_terms").get<int>();
  c.series_cap = j.at("series_cap").get<int>();
  return c;
}

ordered_json problem_json(const ProblemEcho& p) {
  return {{"a", p.a}, {"b", p.b}, {"field", p.field}, {"normalized_a", p.normalized_a}, {"normalized_b", p.normalized_b}};
}
ProblemEcho problem_from(const ordered_json& j) {
  return {j.at("a").get<std::string>(), j.at("b").get<std::string>(), j.at("field").get<std::string>(),
          j.at("normalized_a").get<std::string>(), j.at("normalized_b").get<std::string>()};
}

ordered_json density_json(const DensityResult& d) {
  ordered_json radii = ordered_json::array();
  for (const auto& r : d.radii) radii.push_back(r.to_string());
  return {{"threshold", vwe_json(d.threshold)}, {"x_star", num(d.x_star)}, {"radii", radii},
          {"interval_note", d.interval_note}};
}
DensityResult density_from(const ordered_json& j) {
  DensityResult d;
  d.threshold = vwe_from(j.at("threshold"));
  d.x_star = parse_num(j.at("x_star"));
  for (const auto& r : j.at("radii")) d.radii.push_back(BigRational::parse(r.get<std::string>()));
  d.interval_note = j.at("interval_note").get<std::string>();
  return d;
}

void validate(const ReportConfig& c) {
  if (!(c.tol > 0.0) || !std::isfinite(c.tol)) throw ArgumentError("tolerance must be a positive number");
  if (c.grid_size < 16) throw ArgumentError("grid size must be at least 16");
  if (c.series_terms < 0) throw ArgumentError("series terms must be >= 0 (0 = adaptive)");
  if (c.series_cap < 1) throw ArgumentError("series cap must be at least 1");
}

GaussianRational parse_input(std::string_view text, const char* which) {
  try {
    return GaussianRational::parse(text);
  } catch (const ArgumentError& e) {
    throw ArgumentError(std::string("cannot parse ") + which + " = '" + std::string(text) + "': " + e.what());
  }
}

BigRational parse_rational_input(std::string_view text, const char* which) {
  const GaussianRational g = parse_input(text, which);
  if (!g.is_real()) throw ArgumentError(std::string(which) + " = '" + std::string(text) + "' must be rational here");
  return g.re();
}

std::string format_row(const std::string& key, const std::string& value) {
  std::string out = "  " + key;
  if (out.size() < 22) out.resize(22, ' ');
  return out + value + "\n";
}

std::string pm(const ValueWithError& v) { return num(v.value) + " +- " + num(v.abs_error); }

std::vector<std::string> common_notes(const BigRational& a, const BigRational& b) {
  std::vector<std::string> notes;
  if (a == BigRational(7, 15) && b == BigRational(125, 18)) {
    notes.push_back(
        "discrepancy: the published worked example for this pair totals log 1250; with reduced fractions "
        "Delta = log 90 and the upper bound is log 90 + log(625/42)");
  }
  return notes;
}

}  // namespace

bool sandwich_holds(const LowerBoundResult& lower, const UpperBoundResult& upper) {
  return lower.value <= upper.value.upper() + kSandwichSlack;
}

bool operator==(const BoundReport& x, const BoundReport& y) {
  auto same_vwe = [](const ValueWithError& p, const ValueWithError& q) {
    return p.value == q.value && p.abs_error == q.abs_error;
  };
  auto same_density = [&](const std::optional<DensityResult>& p, const std::optional<DensityResult>& q) {
    if (p.has_value() != q.has_value()) return false;
    if (!p) return true;
    return same_vwe(p->threshold, q->threshold) && p->x_star == q->x_star && p->radii == q->radii &&
           p->interval_note == q->interval_note;
  };
  auto same_sample = [&](const std::optional<OmegaSample>& p, const std::optional<OmegaSample>& q) {
    if (p.has_value() != q.has_value()) return false;
    return !p || (p->t == q->t && same_vwe(p->value, q->value));
  };
  return x.problem == y.problem && x.lower.value == y.lower.value && x.lower.method == y.lower.method &&
         x.lower.certified == y.lower.certified && x.lower.witness == y.lower.witness &&
         x.lower.weight == y.lower.weight && same_vwe(x.upper.value, y.upper.value) &&
         x.upper.t_star == y.upper.t_star && x.upper.method == y.upper.method &&
         x.upper.certified == y.upper.certified && x.upper.series_terms == y.upper.series_terms &&
         same_density(x.density, y.density) && same_sample(x.omega_at_t, y.omega_at_t) && x.config == y.config &&
         x.notes == y.notes && x.version == y.version && x.consistent == y.consistent;
}

BoundReport analyze(std::string_view a_text, std::string_view b_text, const ReportConfig& config,
                    std::optional<double> t) {
  validate(config);
  const GaussianRational ga = parse_input(a_text, "a");
  const GaussianRational gb = parse_input(b_text, "b");
  if (ga.is_zero()) throw ArgumentError("a = '" + std::string(a_text) + "' must be nonzero");

  BoundReport r;
  r.config = config;
  r.problem.a = ga.to_string();
  r.problem.b = gb.to_string();

  if (ga.is_real() && gb.is_real()) {
    const auto [na, nb] = normalize_problem(ga.re(), gb.re());
    r.problem.field = "Q";
    r.problem.normalized_a = na.to_string();
    r.problem.normalized_b = nb.to_string();
    r.upper = omega_min(na, nb, config.tol, config.series_terms, config.series_cap);
    r.lower = best_lower(na, nb, config.grid_size);
    r.density = density_threshold(ga.re(), gb.re(), config.tol);
    if (t) r.omega_at_t = OmegaSample{*t, omega(na, nb, *t, config.tol)};
    r.notes = common_notes(na, nb);
    if (na == BigRational(1) && nb == BigRational(1)) {
      r.notes.push_back(
          "external context: Doche's interval 0.2482474 <= mu_ess <= 0.25443678 for this height comes from a "
          "different method and is not reproduced here");
    }
    if (na != BigRational(1)) {
      r.notes.push_back("density uses the shift b + a*x; the b + x variant gives a different threshold when |a| != 1");
    }
  } else {
    if (t) throw ArgumentError("--t only applies to rational inputs");
    r.problem.field = "Q(i)";
    r.problem.normalized_a = ga.to_string();
    r.problem.normalized_b = gb.to_string();
    r.upper = upper_bound_gaussian(ga, gb, config.tol);
    r.lower = best_lower(ga, gb, config.grid_size);
    r.notes.push_back("density threshold is only implemented for rational a, b");
  }

  if (!r.upper.certified) r.notes.push_back("upper bound comes from adaptive quadrature and is not certified");
  if (!r.lower.certified && r.lower.method != LowerMethod::zero) {
    r.notes.push_back("lower bound comes from a grid + local minimization and is not certified");
  }
  r.consistent = sandwich_holds(r.lower, r.upper);
  if (!r.consistent) r.notes.push_back("inconsistent: lower bound exceeds upper bound");
  return r;
}

DensityReport analyze_density(std::string_view a_text, std::string_view b_text, std::optional<double> x,
                              std::optional<std::vector<BigRational>> radii, const ReportConfig& config) {
  validate(config);
  const BigRational a = parse_rational_input(a_text, "a");
  const BigRational b = parse_rational_input(b_text, "b");
  if (a.is_zero()) throw ArgumentError("a = '" + std::string(a_text) + "' must be nonzero");

  DensityReport r;
  r.config = config;
  r.problem = {a.to_string(), b.to_string(), "Q", a.abs().to_string(), b.abs().to_string()};
  if (x) {
    r.minimized = false;
    r.density.radii = radii ? *radii : std::vector<BigRational>(prime_support(a, b).size(), BigRational(1));
    r.density.threshold = gamma(a, b, *x, r.density.radii, config.tol);
    r.density.x_star = *x;
    r.density.interval_note = "image dense in [threshold, inf)";
  } else {
    if (radii) throw ArgumentError("--radii needs --x; the minimization over x uses unit radii");
    r.density = density_threshold(a, b, config.tol);
  }
  r.notes = common_notes(a.abs(), b.abs());
  if (a.abs() != BigRational(1)) {
    r.notes.push_back("density uses the shift b + a*x; the b + x variant gives a different threshold when |a| != 1");
  }
  return r;
}

const std::vector<std::string>& reproduction_tables() {
  static const std::vector<std::string> ids{"thm2.9", "thmA", "cor3.9", "thm4.3-examples"};
  return ids;
}

std::vector<ReproductionRow> reproduce(std::string_view table_id, const ReportConfig& config) {
  validate(config);
  std::vector<ReproductionRow> rows;
  auto add = [&](std::string label, double constant, ValueWithError computed, double band) {
    const bool pass = computed.value <= constant + 1e-12 && computed.value >= constant - band;
    rows.push_back({std::move(label), constant, computed, band, pass});
  };
  auto upper = [&](long a, long b) {
    return omega_min(BigRational(a), BigRational(b), config.tol, config.series_terms, config.series_cap).value;
  };

  if (table_id == "thm2.9") {
    add("|b/a|=1", 0.3194490869562, upper(1, 1), 1e-4);
    add("|b/a|=2", 0.6461598436469, upper(1, 2), 1e-4);
    add("|b/a|=3", 0.9909205628144, upper(1, 3), 1e-4);
    add("|b/a|>=4 (a=1, b=4)", std::log(4.0), upper(1, 4), 1e-12);
  } else if (table_id == "thmA") {
    add("density threshold (a,b)=(-1,1)", 0.31944909,
        density_threshold(BigRational(-1), BigRational(1), config.tol).threshold, 1e-4);
  } else if (table_id == "cor3.9") {
    const auto tau = tau_single_factor(BigRational(1), BigRational(2), RootPolynomial{{-1}}, config.grid_size);
    add("tau (1,2) with x + 1", std::log(std::sqrt(3.0)), ValueWithError(tau.value, 1e-9), 1e-9);
  } else if (table_id == "thm4.3-examples") {
    for (auto [a, b] : {std::pair{1L, 5L}, {1L, 4L}, {2L, 9L}}) {
      const auto [lo, hi] = large_ratio_interval(BigRational(a), BigRational(b));
      const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      add("lower " + pair, lo, ValueWithError(best_lower(BigRational(a), BigRational(b), config.grid_size).value),
          1e-8);
      add("upper " + pair, hi, upper(a, b), 1e-8);
    }
  } else {
    throw ArgumentError("unknown table '" + std::string(table_id) +
                        "'; expected one of thm2.9, thmA, cor3.9, thm4.3-examples");
  }
  return rows;
}

std::string to_json(const BoundReport& r) {
  ordered_json j;
  j["version"] = r.version;
  j["problem"] = problem_json(r.problem);
  j["upper"] = {{"value", vwe_json(r.upper.value)},  {"t_star", num(r.upper.t_star)},
                {"method", to_string(r.upper.method)}, {"certified", r.upper.certified},
                {"series_terms", r.upper.series_terms}};
  j["lower"] = {{"value", num(r.lower.value)},
                {"method", to_string(r.lower.method)},
                {"certified", r.lower.certified},
                {"witness", r.lower.witness},
                {"weight", r.lower.weight ? ordered_json(num(*r.lower.weight)) : ordered_json(nullptr)}};
  j["density"] = r.density ? density_json(*r.density) : ordered_json(nullptr);
  j["omega_at_t"] = r.omega_at_t ? ordered_json{{"t", num(r.omega_at_t->t)}, {"value", vwe_json(r.omega_at_t->value)}}
                                 : ordered_json(nullptr);
  j["config"] = config_json(r.config);
  j["notes"] = r.notes;
  j["consistent"] = r.consistent;
  return j.dump(2) + "\n";
}

BoundReport bound_report_from_json(std::string_view text) {
  const ordered_json j = ordered_json::parse(text);
  BoundReport r;
  r.version = j.at("version").get<std::string>();
  r.problem = problem_from(j.at("problem"));
  const auto& u = j.at("upper");
  r.upper.value = vwe_from(u.at("value"));
  r.upper.t_star = parse_num(u.at("t_star"));
  r.upper.method = parse_enum(u.at("method").get<std::string>(), kUpperMethods);
  r.upper.certified = u.at("certified").get<bool>();
  r.upper.series_terms = u.at("series_terms").get<int>();
  const auto& l = j.at("lower");
  r.lower.value = parse_num(l.at("value"));
  r.lower.method = parse_enum(l.at("method").get<std::string>(), kLowerMethods);
  r.lower.certified = l.at("certified").get<bool>();
  r.lower.witness = l.at("witness").get<std::string>();
  if (!l.at("weight").is_null()) r.lower.weight = parse_num(l.at("weight"));
  if (!j.at("density").is_null()) r.density = density_from(j.at("density"));
  if (const auto& s = j.at("omega_at_t"); !s.is_null()) r.omega_at_t = OmegaSample{parse_num(s.at("t")), vwe_from(s.at("value"))};
  r.config = config_from(j.at("config"));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.consistent = j.at("consistent").get<bool>();
  return r;
}

std::string to_json(const DensityReport& r) {
  ordered_json j;
  j["version"] = r.version;
  j["problem"] = problem_json(r.problem);
  j["density"] = density_json(r.density);
  j["minimized"] = r.minimized;
  j["config"] = config_json(r.config);
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string to_json(std::string_view table_id, const std::vector<ReproductionRow>& rows) {
  ordered_json j;
  j["version"] = std::string(kVersion);
  j["table"] = std::string(table_id);
  ordered_json arr = ordered_json::array();
  bool all = true;
  for (const auto& row : rows) {
    arr.push_back({{"label", row.label},
                   {"reference_constant", num(row.reference_constant)},
                   {"computed", vwe_json(row.computed)},
                   {"band", num(row.band)},
                   {"pass", row.pass}});
    all = all && row.pass;
  }
  j["rows"] = arr;
  j["pass"] = all;
  return j.dump(2) + "\n";
}

std::string to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "essmin " << r.version << "\n";
  out << format_row("a, b", r.problem.a + ", " + r.problem.b + "  over " + r.problem.field);
  out << format_row("normalized", r.problem.normalized_a + ", " + r.problem.normalized_b);
  out << format_row("lower", num(r.lower.value) + "  [" + std::string(to_string(r.lower.method)) +
                                 (r.lower.certified ? ", certified" : "") + "]");
  if (!r.lower.witness.empty()) out << format_row("  witness", r.lower.witness);
  if (r.lower.weight) out << format_row("  weight", num(*r.lower.weight));
  out << format_row("upper", pm(r.upper.value) + "  [" + std::string(to_string(r.upper.method)) +
                                 (r.upper.certified ? ", certified" : "") + "]");
  out << format_row("  t*", num(r.upper.t_star));
  if (r.upper.series_terms > 0) out << format_row("  series terms", std::to_string(r.upper.series_terms));
  if (r.omega_at_t) out << format_row("omega(t=" + num(r.omega_at_t->t) + ")", pm(r.omega_at_t->value));
  if (r.density) {
    out << format_row("density", pm(r.density->threshold) + "  at x* = " + num(r.density->x_star));
    out << format_row("", r.density->interval_note);
  }
  out << format_row("config", "tol " + num(r.config.tol) + ", grid " + std::to_string(r.config.grid_size) +
                                  ", series terms " + std::to_string(r.config.series_terms) + ", cap " +
                                  std::to_string(r.config.series_cap));
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  out << "  status: " << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
  return out.str();
}

std::string to_text(const DensityReport& r) {
  std::ostringstream out;
  out << "essmin " << r.version << "\n";
  out << format_row("a, b", r.problem.a + ", " + r.problem.b);
  out << format_row(r.minimized ? "threshold (min)" : "threshold", pm(r.density.threshold));
  out << format_row("x", num(r.density.x_star));
  std::string radii;
  for (const auto& q : r.density.radii) radii += (radii.empty() ? "" : ",") + q.to_string();
  out << format_row("radii", radii.empty() ? "(none)" : radii);
  out << format_row("", r.density.interval_note);
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

std::string to_text(std::string_view table_id, const std::vector<ReproductionRow>& rows) {
  std::ostringstream out;
  out << "table " << table_id << "\n";
  bool all = true;
  for (const auto& row : rows) {
    std::string label = "  " + row.label;
    if (label.size() < 34) label.resize(34, ' ');
    out << label << " constant " << num(row.reference_constant) << "  computed " << pm(row.computed) << "  "
        << (row.pass ? "PASS" : "FAIL") << "\n";
    all = all && row.pass;
  }
  out << (all ? "all rows pass" : "some rows FAIL") << "\n";
  return out.str();
}

std::vector<BigRational> parse_radii(std::string_view text) {
  std::vector<BigRational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    BigRational r;
    try {
      r = BigRational::parse(tok);
    } catch (const ArgumentError& e) {
      throw ArgumentError("cannot parse radius '" + std::string(tok) + "': " + e.what());
    }
    if (r.sign() <= 0) throw ArgumentError("radius '" + std::string(tok) + "' is not positive");
    out.push_back(r);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace essmin
