#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "ghgeo/correspondence.hpp"
#include "ghgeo/errors.hpp"
#include "ghgeo/geodesy.hpp"
#include "ghgeo/gh_search.hpp"
#include "ghgeo/intervals.hpp"
#include "ghgeo/metric_space.hpp"

namespace ghgeo::cli {
namespace {

using nlohmann::json;

struct Options {
  bool decimal = false;
  std::string out_path;
  // validate
  std::string metric_path;
  // gh
  std::string x_path;
  std::string y_path;
  std::string method = "bnb";
  std::uint64_t budget = kDefaultBudget;
  // hausdorff / slice
  std::string set_a;
  std::string set_b;
  std::string slice_s;
  std::string slice_grid;
  // geodesic / empirical
  std::string config_path;
  std::string delta;
  std::string grid;
  int window = 0;
  std::string step;
  std::uint64_t exp_budget = 0;
  bool exp_budget_set = false;
};

std::string show(const Rational& r, bool decimal) { return decimal ? r.decimal() : r.str(); }

// Interval-union arguments are either literals ("a,b;c,d") or paths to a
// file holding one.
IntervalUnion interval_arg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_interval_union(ss.str());
  }
  return parse_interval_union(arg);
}

// Writes `body` to --out when given, else to `out`.
void emit(const Options& o, const std::string& body, std::ostream& out) {
  if (o.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw ParseError("cannot write '" + o.out_path + "'");
  f << body;
}

int cmd_validate(const Options& o, std::ostream& out) {
  std::ifstream in(o.metric_path);
  if (!in) throw ParseError("cannot open '" + o.metric_path + "'");
  const auto [labels, matrix] = read_metric_matrix(in);
  const ValidationReport report = validate_metric(matrix);
  if (report.valid()) {
    out << "valid: " << labels.size() << " points\n";
    return kExitOk;
  }
  out << "invalid: " << report.violations.size() << " violation(s)\n";
  for (const auto& v : report.violations) out << "  " << v.describe(matrix) << '\n';
  return kExitFail;
}

json pairs_json(const Correspondence& c) {
  json arr = json::array();
  for (const auto& [i, j] : c.pairs()) arr.push_back({i, j});
  return arr;
}

int cmd_gh(const Options& o, std::ostream& out) {
  const FiniteMetricSpace x = load_metric_space(o.x_path);
  const FiniteMetricSpace y = load_metric_space(o.y_path);
  json j;
  j["method"] = o.method;
  Rational lower;
  Rational upper;
  if (o.method == "brute") {
    const BruteForceResult r = gh_bruteforce_witness(x, y);
    lower = upper = r.value;
    j["exact"] = true;
    j["lower_witness"] = lower_witness_name(LowerWitness::kExhaustedSearch);
    j["nodes_expanded"] = r.enumerated;
    j["witness_pairs"] = pairs_json(r.witness);
  } else {
    const GHInterval r = gh_branch_and_bound(x, y, o.budget);
    lower = r.lower;
    upper = r.upper;
    j["exact"] = r.exact();
    j["lower_witness"] = lower_witness_name(r.lower_witness);
    j["nodes_expanded"] = r.nodes_expanded;
    j["budget_exhausted"] = r.budget_exhausted;
    j["witness_pairs"] = pairs_json(r.upper_witness);
  }
  j["lower"] = lower.str();
  j["upper"] = upper.str();
  if (o.decimal) {
    j["lower_decimal"] = lower.decimal();
    j["upper_decimal"] = upper.decimal();
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_hausdorff(const Options& o, std::ostream& out) {
  out << show(hausdorff(interval_arg(o.set_a), interval_arg(o.set_b)), o.decimal) << '\n';
  return kExitOk;
}

int cmd_slice(const Options& o, std::ostream& out) {
  const IntervalUnion a = interval_arg(o.set_a);
  const IntervalUnion b = interval_arg(o.set_b);
  if (o.slice_grid.empty()) {
    if (o.slice_s.empty()) throw ParseError("slice needs a parameter s or --grid");
    out << format_interval_union(canonical_slice(a, b, Rational::parse(o.slice_s))) << '\n';
    return kExitOk;
  }
  const auto rows = slice_geodesic_table(a, b, Rational::parse(o.slice_grid));
  std::ostringstream csv;
  csv << "s,s_prime,d_H,abs_diff,equal\n";
  std::size_t ok = 0;
  for (const auto& r : rows) {
    csv << show(r.s, o.decimal) << ',' << show(r.s_prime, o.decimal) << ','
        << show(r.hausdorff, o.decimal) << ',' << show(r.abs_diff, o.decimal) << ','
        << (r.equal ? "true" : "false") << '\n';
    ok += r.equal ? 1 : 0;
  }
  emit(o, csv.str(), out);
  const bool pass = ok == rows.size();
  out << (pass ? "PASS: " : "FAIL: ") << ok << '/' << rows.size() << " exact\n";
  return pass ? kExitOk : kExitFail;
}

ExperimentConfig experiment_config(const Options& o, std::string& base_dir) {
  ExperimentConfig c;
  if (!o.config_path.empty()) {
    c = load_config(o.config_path);
    base_dir = std::filesystem::path(o.config_path).parent_path().string();
  }
  if (!o.delta.empty()) c.delta = Rational::parse(o.delta);
  if (!o.grid.empty()) c.grid_step = Rational::parse(o.grid);
  if (o.window > 0) c.window = o.window;
  if (!o.step.empty()) c.sample_step = Rational::parse(o.step);
  if (o.exp_budget_set) c.budget = o.exp_budget;
  check_delta(c.delta);
  return c;
}

int cmd_geodesic(const Options& o, std::ostream& out) {
  std::string base_dir;
  const ExperimentConfig c = experiment_config(o, base_dir);

  std::vector<GeodesicRow> rows;
  if (!c.points.empty()) {
    std::vector<GeodesicPoint> points;
    for (const auto& spec : c.points) points.push_back(resolve_point(spec, c.delta));
    for (const auto& p : points) {
      for (const auto& q : points) {
        Rational formula = formula_distance(p, q);
        Rational diff = abs(curve_parameter(p) - curve_parameter(q));
        const bool eq = formula == diff;
        rows.push_back({curve_parameter(p), curve_parameter(q), p, q, std::move(formula),
                        std::move(diff), eq});
      }
    }
  } else {
    rows = geodesic_table(c.delta, c.grid_step.value_or(Rational(1, 100)));
  }

  std::ostringstream csv;
  csv << "s,s_prime,p,q,formula,abs_diff,equal\n";
  std::size_t ok = 0;
  for (const auto& r : rows) {
    csv << show(r.s, o.decimal) << ',' << show(r.s_prime, o.decimal) << ',' << r.p.describe()
        << ',' << r.q.describe() << ',' << show(r.formula, o.decimal) << ','
        << show(r.abs_diff, o.decimal) << ',' << (r.equal ? "true" : "false") << '\n';
    ok += r.equal ? 1 : 0;
  }
  emit(o, csv.str(), out);
  const bool pass = ok == rows.size();
  out << (pass ? "PASS: " : "FAIL: ") << ok << '/' << rows.size() << " exact\n";
  return pass ? kExitOk : kExitFail;
}

int cmd_empirical(const Options& o, std::ostream& out) {
  std::string base_dir;
  const ExperimentConfig c = experiment_config(o, base_dir);
  const GeneratorSpace generator = load_generator(c, base_dir);

  std::vector<std::pair<GeodesicPoint, GeodesicPoint>> pairs;
  if (!c.points.empty()) {
    std::vector<GeodesicPoint> points;
    for (const auto& spec : c.points) points.push_back(resolve_point(spec, c.delta));
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) pairs.emplace_back(points[i], points[j]);
    }
  } else {
    const Rational step = c.grid_step.value_or(Rational(1, 10));
    const Rational half = c.delta / Rational(2);
    if (step.sign() <= 0 || !(half / step).is_integer()) {
      throw DomainError("grid step " + step.str() + " must divide delta/2 = " + half.str());
    }
    const Rational end = Rational(3) * half;
    std::vector<GeodesicPoint> lattice_leg;
    std::vector<GeodesicPoint> product_leg;
    for (Rational s = half; s <= end; s += step) lattice_leg.push_back(curve_point(s, c.delta));
    for (Rational s(0); s <= half; s += step) product_leg.push_back(curve_point(s, c.delta));
    for (const auto& p : lattice_leg) {
      for (const auto& q : product_leg) pairs.emplace_back(p, q);
    }
  }

  EmpiricalOptions opts;
  opts.window = c.window;
  opts.step = c.sample_step;
  opts.evidence_window = c.evidence_window;
  opts.evidence_step = c.evidence_step;
  opts.budget = c.budget;

  std::ostringstream csv;
  csv << "p,q,formula,upper,upper_slack,lower,verdict,lower_kind\n";
  std::size_t ok = 0;
  for (const auto& [p, q] : pairs) {
    const EmpiricalResult r = empirical_gh(p, q, generator.space(), opts);
    csv << p.describe() << ',' << q.describe() << ',' << show(r.formula, o.decimal) << ','
        << show(r.upper, o.decimal) << ',' << show(r.upper_slack, o.decimal) << ','
        << show(r.lower, o.decimal) << ',' << (r.pass() ? "PASS" : "FAIL") << ",evidence:"
        << lower_witness_name(r.lower_witness) << '\n';
    ok += r.pass() ? 1 : 0;
  }
  emit(o, csv.str(), out);
  const bool pass = ok == pairs.size();
  out << (pass ? "PASS: " : "FAIL: ") << ok << '/' << pairs.size()
      << " within slack " << show(c.sample_step, o.decimal) << '\n';
  return pass ? kExitOk : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Gromov-Hausdorff toolkit for thick lattices and l1 products", "ghg"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check the metric axioms of a space file");
  validate->add_option("file", o.metric_path, "Metric space file")->required();

  auto* gh = app.add_subcommand("gh", "Gromov-Hausdorff distance between two space files");
  gh->add_option("x", o.x_path, "First metric space file")->required();
  gh->add_option("y", o.y_path, "Second metric space file")->required();
  gh->add_option("--method", o.method, "brute or bnb")->check(CLI::IsMember({"brute", "bnb"}));
  gh->add_option("--budget", o.budget, "Node limit for branch-and-bound");

  auto* haus = app.add_subcommand("hausdorff", "Hausdorff distance of two interval unions");
  haus->add_option("a", o.set_a, "Interval union \"a,b;c,d\" or file")->required();
  haus->add_option("b", o.set_b, "Interval union \"a,b;c,d\" or file")->required();

  auto* slice = app.add_subcommand("slice", "Canonical Hausdorff geodesic slice");
  slice->add_option("a", o.set_a, "Start set")->required();
  slice->add_option("b", o.set_b, "End set")->required();
  slice->add_option("s", o.slice_s, "Parameter in [0, d_H(a, b)]");
  slice->add_option("--grid", o.slice_grid, "Tabulate all slice pairs on this grid step");

  auto* geo = app.add_subcommand("geodesic", "Check additivity of the closed forms along the curve");
  auto* emp = app.add_subcommand("empirical", "Certified bounds on realized windows");
  for (auto* sub : {geo, emp}) {
    sub->add_option("config", o.config_path, "JSON experiment config");
    sub->add_option("--delta", o.delta, "Family parameter, 0 < delta < 1/2");
    sub->add_option("--grid", o.grid, "Grid step on the curve parameter");
  }
  emp->add_option("--window", o.window, "Window radius N");
  emp->add_option("--step", o.step, "Sampling step");
  emp->add_option("--budget", o.exp_budget, "Node limit for the evidence search")
      ->each([&](const std::string&) { o.exp_budget_set = true; });

  for (auto* sub : {validate, gh, haus, slice, geo, emp}) {
    sub->add_flag("--decimal", o.decimal, "Print decimals (display only)");
  }
  for (auto* sub : {slice, geo, emp}) sub->add_option("--out", o.out_path, "Write CSV to file");

  std::vector<char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*gh) return cmd_gh(o, out);
    if (*haus) return cmd_hausdorff(o, out);
    if (*slice) return cmd_slice(o, out);
    if (*geo) return cmd_geodesic(o, out);
    if (*emp) return cmd_empirical(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ghgeo::cli
