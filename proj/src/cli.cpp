#include "lgvsym/cli.hpp"

#include "lgvsym/combinat.hpp"
#include "lgvsym/errors.hpp"
#include "lgvsym/identities.hpp"
#include "lgvsym/lgv.hpp"
#include "lgvsym/symfun.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace lgvsym::cli {

namespace {

using combinat::Partition;
using lgv::LatticePoint;
using lgv::LatticeScheme;
using ring::Polynomial;

// A usage problem discovered after CLI11 parsing; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string shape;
  std::optional<int> n;
  std::optional<int> m;
  std::string method = "tableaux";
  std::string identity;
  std::optional<int> degree_cap;
  std::string output = "text";
  std::string config_path;
  std::vector<std::string> only;
  std::string preset;
  std::string scheme;
  std::string sources;
  std::string sinks;
  std::optional<int> col_bound;
  std::optional<int> truncate_at;
  std::string svg_path;
  int count = 20;
  std::uint64_t seed = 20240611;
};

Partition shape_of(const Options& o) {
  if (o.shape.empty()) throw UsageError("--shape is required");
  try {
    return combinat::parse_partition(o.shape);
  } catch (const Error& e) {
    throw UsageError(std::string("bad --shape: ") + e.what());
  }
}

int positive(const std::optional<int>& v, const char* flag, std::optional<int> fallback = {}) {
  if (!v && !fallback) throw UsageError(std::string(flag) + " is required");
  const int value = v ? *v : *fallback;
  if (value < 1) throw UsageError(std::string(flag) + " must be >= 1");
  return value;
}

int non_negative(const std::optional<int>& v, const char* flag, int fallback) {
  const int value = v.value_or(fallback);
  if (value < 0) throw UsageError(std::string(flag) + " must be >= 0");
  return value;
}

// ---------------------------------------------------------------------------

int cmd_schur(const Options& o, std::ostream& out) {
  const Partition lambda = shape_of(o);
  const int n = positive(o.n, "--n");
  Polynomial s;
  if (o.method == "tableaux") {
    s = combinat::schur_tableaux(lambda, n);
  } else if (o.method == "jacobitrudi") {
    s = symfun::jacobi_trudi(lambda, n);
  } else if (o.method == "bialternant") {
    s = symfun::bialternant(lambda, n);
  } else {
    s = lgv::schur_via_lgv(lambda, n);
  }
  const std::string text = ring::canonical_text(s);
  if (o.output == "json") {
    nlohmann::ordered_json j;
    j["schur"] = text;
    out << j.dump() << '\n';
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

int print_reports(const std::vector<identities::CheckReport>& reports, const std::string& output,
                  std::ostream& out) {
  if (output == "json") {
    out << identities::reports_json(reports) << '\n';
  } else {
    for (const auto& r : reports) out << identities::report_text(r);
  }
  return identities::all_verified(reports) ? kExitOk : kExitFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  using namespace identities;
  const auto& names = identity_names();
  if (std::find(names.begin(), names.end(), o.identity) == names.end()) {
    throw UsageError("unknown identity '" + o.identity + "'");
  }
  const std::string& id = o.identity;
  CheckReport report;
  if (id == "main-lemma") {
    report = verify_main_lemma(positive(o.m, "--m", 6), positive(o.n, "--n", 6));
  } else if (id == "corollary") {
    report = verify_corollary(positive(o.n, "--n", 4), positive(o.m, "--m", 5));
  } else if (id == "vandermonde") {
    const int n = positive(o.n, "--n", 3);
    report = verify_vandermonde(n, n <= 3);
  } else if (id == "jacobi-trudi" || id == "bialternant") {
    const Partition lambda = shape_of(o);
    const int n = positive(o.n, "--n");
    if (lambda.rows() > n) throw UsageError("--shape has more rows than --n");
    const bool paths = lambda.size() <= 4 && n <= 3;
    report = id == "jacobi-trudi" ? verify_jacobi_trudi(lambda, n, paths)
                                  : verify_bialternant(lambda, n, paths);
  } else if (id == "cauchy") {
    report = verify_cauchy(positive(o.n, "--n", 2), non_negative(o.degree_cap, "--degree-cap", 4));
  } else if (id == "dual-cauchy") {
    report = verify_dual_cauchy(positive(o.n, "--n", 2), positive(o.m, "--m", 2));
  } else if (id == "dual-determinant") {
    report = verify_dual_determinant(positive(o.n, "--n", 2), positive(o.m, "--m", 2));
  } else if (id == "factorial-schur") {
    const Partition lambda = shape_of(o);
    const int n = positive(o.n, "--n");
    if (lambda.rows() > n) throw UsageError("--shape has more rows than --n");
    report = verify_factorial_schur(lambda, n);
  } else if (id == "newton") {
    report = verify_newton(non_negative(o.n, "--n", 4));
  } else {
    static const std::map<std::string, lgv::SchemeKind> kinds = {
        {"jacobi-trudi", lgv::SchemeKind::JacobiTrudi},
        {"schur-weighted", lgv::SchemeKind::SchurWeighted},
        {"cauchy-doubled", lgv::SchemeKind::CauchyDoubled}};
    std::vector<CheckReport> reports;
    for (const auto& [name, kind] : kinds) {
      if (!o.scheme.empty() && o.scheme != name) continue;
      reports.push_back(verify_lgv_random(kind, o.count, o.seed));
    }
    if (reports.empty()) throw UsageError("unknown --scheme '" + o.scheme + "'");
    return print_reports(reports, o.output, out);
  }
  if (o.output == "json") {
    out << report_json(report, 2) << '\n';
  } else {
    out << report_text(report);
  }
  return report.status == Status::Verified ? kExitOk : kExitFailure;
}

int cmd_suite(const Options& o, std::ostream& out) {
  identities::SuiteConfig config;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw UsageError("cannot read config file '" + o.config_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      config = identities::parse_suite_config(buffer.str());
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }
  if (!o.only.empty()) {
    const auto& names = identities::identity_names();
    for (const auto& name : o.only) {
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw UsageError("unknown identity '" + name + "'");
      }
    }
    config.only = o.only;
  }
  return print_reports(identities::run_suite(config), o.output, out);
}

// "(1,1),(2,1)" or "1,1;2,1".
std::vector<LatticePoint> parse_points(const std::string& text, const char* flag) {
  static const std::regex point(R"(\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?)");
  static const std::regex separator(R"(\s*[;,]?\s*)");
  std::vector<LatticePoint> points;
  auto it = text.cbegin();
  std::smatch match;
  while (it != text.cend()) {
    if (!std::regex_search(it, text.cend(), match, point,
                           std::regex_constants::match_continuous)) {
      throw UsageError(std::string("bad ") + flag + ": expected points like (1,2),(3,4)");
    }
    points.push_back({std::stoi(match[1]), std::stoi(match[2])});
    it = match[0].second;
    if (std::regex_search(it, text.cend(), match, separator,
                          std::regex_constants::match_continuous)) {
      it = match[0].second;
    }
  }
  if (points.empty()) throw UsageError(std::string(flag) + " is empty");
  return points;
}

struct Configuration {
  LatticeScheme scheme;
  lgv::Endpoints ends;
};

Configuration configuration_of(const Options& o) {
  if (!o.preset.empty() && !o.scheme.empty()) {
    throw UsageError("--preset and --scheme are mutually exclusive");
  }
  if (o.preset == "vandermonde") {
    const int n = positive(o.n, "--n");
    return {lgv::vandermonde_scheme(n), lgv::vandermonde_endpoints(n)};
  }
  if (o.preset == "schur") {
    const Partition lambda = shape_of(o);
    const int n = positive(o.n, "--n");
    if (lambda.rows() > n) throw UsageError("--shape has more rows than --n");
    return {lgv::schur_scheme(lambda, n), lgv::schur_endpoints(lambda, n)};
  }
  if (o.preset == "cauchy") {
    const int n = positive(o.n, "--n");
    const int cap = non_negative(o.degree_cap, "--degree-cap", 2);
    // Each entry's degree-k term has total degree 2k and k steps right.
    return {LatticeScheme::cauchy_doubled(n, 2u * static_cast<unsigned>(cap), cap + 1),
            lgv::cauchy_endpoints(n)};
  }
  if (!o.preset.empty()) throw UsageError("unknown --preset '" + o.preset + "'");
  if (o.scheme.empty()) throw UsageError("one of --preset or --scheme is required");

  const int n = positive(o.n, "--n");
  Configuration c;
  if (o.scheme == "jacobi-trudi") {
    c.scheme = LatticeScheme::jacobi_trudi(n, positive(o.col_bound, "--col-bound"));
  } else if (o.scheme == "schur-weighted") {
    if (o.truncate_at) positive(o.truncate_at, "--truncate");
    c.scheme = LatticeScheme::schur_weighted(n, positive(o.col_bound, "--col-bound"),
                                             o.truncate_at);
  } else if (o.scheme == "cauchy-doubled") {
    const int cap = non_negative(o.degree_cap, "--degree-cap", 4);
    std::optional<int> cols;
    if (o.col_bound) cols = positive(o.col_bound, "--col-bound");
    c.scheme = LatticeScheme::cauchy_doubled(n, static_cast<unsigned>(cap), cols);
  } else {
    throw UsageError("unknown --scheme '" + o.scheme + "'");
  }
  c.ends.sources = parse_points(o.sources, "--sources");
  c.ends.sinks = parse_points(o.sinks, "--sinks");
  if (c.ends.sources.size() != c.ends.sinks.size()) {
    throw UsageError("--sources and --sinks differ in length");
  }
  return c;
}

void check_bounds(const Configuration& c) {
  for (const auto* list : {&c.ends.sources, &c.ends.sinks}) {
    for (LatticePoint p : *list) {
      if (!c.scheme.contains(p)) {
        throw UsageError("endpoint " + lgv::to_string(p) + " lies outside the " +
                         std::to_string(c.scheme.col_bound) + "x" +
                         std::to_string(c.scheme.row_bound()) + " window");
      }
    }
  }
}

void write_svg(const std::string& path, const Configuration& c,
               const std::vector<lgv::PathSystem>& systems) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << lgv::render_svg(c.scheme, c.ends, systems);
}

int cmd_paths(const Options& o, std::ostream& out) {
  const Configuration c = configuration_of(o);
  check_bounds(c);
  const auto systems = lgv::nonintersecting_systems(c.scheme, c.ends);
  Polynomial sum;
  for (const auto& system : systems) {
    Polynomial weight = 1;
    for (const auto& path : system.paths) {
      weight = ring::mul(weight, path.weight, c.scheme.degree_cap);
    }
    sum += system.sign > 0 ? weight : -weight;
  }
  if (!o.svg_path.empty()) write_svg(o.svg_path, c, systems);
  if (o.output == "json") {
    nlohmann::ordered_json j;
    j["count"] = systems.size();
    j["sum"] = ring::canonical_text(sum);
    out << j.dump() << '\n';
  } else {
    out << "count: " << systems.size() << '\n' << "sum: " << ring::canonical_text(sum) << '\n';
  }
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Configuration c = configuration_of(o);
  check_bounds(c);
  const auto systems = lgv::nonintersecting_systems(c.scheme, c.ends);
  write_svg(o.svg_path, c, systems);
  out << "wrote " << systems.size() << " system" << (systems.size() == 1 ? "" : "s") << " to "
      << o.svg_path << '\n';
  return kExitOk;
}

void add_output(CLI::App* app, Options& o, const char* fallback) {
  app->add_option("--output", o.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str(fallback);
}

void add_configuration(CLI::App* app, Options& o) {
  app->add_option("--preset", o.preset, "vandermonde, schur or cauchy")
      ->check(CLI::IsMember({"vandermonde", "schur", "cauchy"}));
  app->add_option("--scheme", o.scheme, "jacobi-trudi, schur-weighted or cauchy-doubled")
      ->check(CLI::IsMember({"jacobi-trudi", "schur-weighted", "cauchy-doubled"}));
  app->add_option("--shape", o.shape, "partition, e.g. [2,1] (schur preset)");
  app->add_option("--n", o.n, "number of x variables / rows");
  app->add_option("--degree-cap", o.degree_cap, "x-degree cap (cauchy)");
  app->add_option("--col-bound", o.col_bound, "window width");
  app->add_option("--truncate", o.truncate_at, "x_k = 0 for k >= this (schur-weighted)");
  app->add_option("--sources", o.sources, "points, e.g. (1,1),(2,1)");
  app->add_option("--sinks", o.sinks, "points, e.g. (1,2),(3,2)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Schur polynomials and lattice-path identity checks", "lgvsym"};
  app.require_subcommand(1);

  auto* schur = app.add_subcommand("schur", "Compute a Schur polynomial");
  schur->add_option("--shape", o.shape, "partition, e.g. [2,1]")->required();
  schur->add_option("--n", o.n, "number of variables")->required();
  schur->add_option("--method", o.method, "tableaux, jacobitrudi, bialternant or lgv")
      ->check(CLI::IsMember({"tableaux", "jacobitrudi", "bialternant", "lgv"}));
  add_output(schur, o, "text");

  auto* verify = app.add_subcommand("verify", "Check one identity");
  verify->add_option("identity", o.identity, "identity name")->required();
  verify->add_option("--shape", o.shape, "partition, e.g. [2,1]");
  verify->add_option("--n", o.n, "n (for newton: the power)");
  verify->add_option("--m", o.m, "m");
  verify->add_option("--degree-cap", o.degree_cap, "x-degree cap (cauchy)");
  verify->add_option("--scheme", o.scheme, "lgv-random: restrict to one scheme");
  verify->add_option("--count", o.count, "lgv-random: configurations per scheme")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "lgv-random: seed");
  add_output(verify, o, "text");

  auto* suite = app.add_subcommand("suite", "Run the identity suite");
  suite->add_option("--config", o.config_path, "JSON config file");
  suite->add_option("--only", o.only, "restrict to these identities (repeatable)");
  add_output(suite, o, "json");

  auto* paths = app.add_subcommand("paths", "Count non-intersecting path systems");
  add_configuration(paths, o);
  paths->add_option("--svg", o.svg_path, "also write an SVG");
  add_output(paths, o, "text");

  auto* render = app.add_subcommand("render", "Draw non-intersecting path systems as SVG");
  add_configuration(render, o);
  render->add_option("--svg", o.svg_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (suite->parsed() && suite->count("--output") == 0) o.output = "json";

  try {
    if (schur->parsed()) return cmd_schur(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (suite->parsed()) return cmd_suite(o, out);
    if (paths->parsed()) return cmd_paths(o, out);
    return cmd_render(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfBounds& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("lgvsym");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lgvsym::cli
