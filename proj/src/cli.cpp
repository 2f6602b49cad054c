#include "secantq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <optional>

#include "CLI11.hpp"
#include "secantq/experiments.hpp"
#include "secantq/identity_suite.hpp"
#include "secantq/report.hpp"

namespace secantq {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Vector2 parse_point(const std::string& flag, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(flag + " expects X,Y but got '" + text + "'");
  const auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
      throw UsageError(flag + " expects X,Y but got '" + text + "'");
    return v;
  };
  const std::string_view all(text);
  return {number(all.substr(0, comma)), number(all.substr(comma + 1))};
}

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string out_path;

  std::string fn;
  std::string a, b, c;

  double k = 1.0;
  double delta_start = 1e-1;
  double delta_end = 1e-5;
  std::size_t steps = 5;
  std::string x0 = "0,0";
  std::string family = "symmetric";

  std::size_t trials = 10000;

  std::string fn1d;
  double x0_1d = 0.0;
  std::size_t h_levels = 5;
  std::size_t sd_trials = 1000;
};

int cmd_secant(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  const Expr f = parse(o.fn);
  const SecantReport r = compute_secant(f, parse_point("--a", o.a), parse_point("--b", o.b), parse_point("--c", o.c));
  write_secant(out, r, fmt);
  if (!(r.q.max_discrepancy() <= kAgreementTolerance)) {
    err << "error: quotient formulas disagree by " << format_double(r.q.max_discrepancy()) << '\n';
    return kExitInvariantFailure;
  }
  return kExitOk;
}

int cmd_sweep(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.f = parse(o.fn);
  cfg.x0 = parse_point("--x0", o.x0);
  cfg.k = o.k;
  cfg.delta_start = o.delta_start;
  cfg.delta_end = o.delta_end;
  cfg.steps = o.steps;
  cfg.family = o.family == "rotated" ? TriangleFamily::rotated : TriangleFamily::symmetric;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto rows = run_sweep(cfg);
  const LimitSummary limit = classify_limit(rows);
  write_sweep(out, rows, limit, fmt);
  if (fmt != Format::text) err << describe_limit(limit) << '\n';

  int status = kExitOk;
  for (const auto& r : rows) {
    if (!r.degenerate && !(r.discrepancy <= kAgreementTolerance)) {
      err << "error: quotient formulas disagree by " << format_double(r.discrepancy) << " at delta "
          << format_double(r.delta) << '\n';
      status = kExitInvariantFailure;
    }
  }
  return status;
}

int cmd_ga_check(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  if (o.trials == 0) throw UsageError("--trials must be at least 1");
  const IdentityReport r = run_ga_check(o.seed, o.trials);
  write_ga_check(out, r, fmt);
  if (r.all_passed()) return kExitOk;
  for (const auto& i : r.results)
    if (!i.passed) err << "invariant '" << i.name << "' failed at " << i.first_failure << '\n';
  return kExitInvariantFailure;
}

int cmd_strong_derivative(const Options& o, Format fmt, std::ostream& out, std::ostream&) {
  if (o.sd_trials == 0) throw UsageError("--trials must be at least 1");
  if (o.h_levels == 0) throw UsageError("--h-levels must be at least 1");
  const Expr g = parse(o.fn1d);
  if (g.uses(ast::Var::y)) throw SyntaxError(0, "--fn1d must be an expression in x only");
  const auto schedule = decade_schedule(o.h_levels);
  write_strong_derivative(out, run_strong_derivative(g, o.x0_1d, schedule, o.sd_trials, o.seed), fmt);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secant planes, difference vector quotients and the surface tangent paradox", "secantq"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--seed", o.seed, "Seed for the SplitMix64 generator");
  app.add_option("--out", o.out_path, "Write the report to FILE instead of standard output");

  auto* secant = app.add_subcommand("secant", "Secant plane through three graph points, q by all three formulas");
  secant->add_option("--fn", o.fn, "f(x, y)")->required();
  secant->add_option("--a", o.a, "X,Y")->required();
  secant->add_option("--b", o.b, "X,Y")->required();
  secant->add_option("--c", o.c, "X,Y")->required();

  auto* sweep = app.add_subcommand("sweep", "Shrink the triangle along eta = delta^k and track q");
  sweep->add_option("--fn", o.fn, "f(x, y)")->required();
  sweep->add_option("--k", o.k, "Path exponent")->required();
  sweep->add_option("--delta-start", o.delta_start, "Largest delta")->required();
  sweep->add_option("--delta-end", o.delta_end, "Smallest delta")->required();
  sweep->add_option("--steps", o.steps, "Number of geometrically spaced deltas")->required();
  sweep->add_option("--x0", o.x0, "Convergence point X,Y")->capture_default_str();
  sweep->add_option("--family", o.family, "Triangle family")
      ->check(CLI::IsMember({"symmetric", "rotated"}))
      ->capture_default_str();

  auto* ga = app.add_subcommand("ga-check", "Randomized check of the G2 identities");
  ga->add_option("--trials", o.trials, "Random trials")->capture_default_str();

  auto* sd = app.add_subcommand("strong-derivative", "Convergence of one-variable difference quotients");
  sd->add_option("--fn1d", o.fn1d, "g(x)")->required();
  sd->add_option("--x0", o.x0_1d, "Point of differentiation")->required();
  sd->add_option("--h-levels", o.h_levels, "Neighbourhood radii 1e-1 ... 1e-N")->capture_default_str();
  sd->add_option("--trials", o.sd_trials, "Random pairs per radius")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot open '" << o.out_path << "' for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;

  try {
    const Format fmt = parse_format(o.format);
    if (secant->parsed()) return cmd_secant(o, fmt, sink, err);
    if (sweep->parsed()) return cmd_sweep(o, fmt, sink, err);
    if (ga->parsed()) return cmd_ga_check(o, fmt, sink, err);
    return cmd_strong_derivative(o, fmt, sink, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << e.what() << '\n';
    return kExitParseError;
  } catch (const EvalError& e) {
    err << e.what() << '\n';
    return kExitParseError;
  } catch (const CollinearPoints& e) {
    err << "degenerate geometry: " << e.what() << '\n';
    return kExitDegenerate;
  }
}

}  // namespace secantq
