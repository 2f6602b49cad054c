#include "secantq/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace secantq {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

std::string fixed(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

json vec_json(Vector2 v) { return json::array({v.x(), v.y()}); }
json normal_json(const PlaneNormal3& n) { return json::array({n.nx, n.ny, n.nz}); }

std::string vec_text(Vector2 v) { return "(" + format_double(v.x()) + ", " + format_double(v.y()) + ")"; }

}  // namespace

// ---------------------------------------------------------------------------

void write_secant(std::ostream& out, const SecantReport& r, Format fmt) {
  const char* names[] = {"a", "b", "c"};
  switch (fmt) {
    case Format::json: {
      json j;
      for (std::size_t i = 0; i < 3; ++i)
        j["samples"][names[i]] = {{"point", vec_json(r.samples[i].p)}, {"f", r.samples[i].fval}};
      j["tau"] = r.tau;
      j["edges"] = {{"a", vec_json(r.edge_a)}, {"b", vec_json(r.edge_b)}, {"c", vec_json(r.edge_c)}};
      j["q"] = {{"quotient", vec_json(r.q.by_quotient)},
                {"normals", vec_json(r.q.by_normals)},
                {"determinant", vec_json(r.q.by_determinant)}};
      j["max_discrepancy"] = r.q.max_discrepancy();
      j["plane_at"] = {{"a", r.plane_at[0]}, {"b", r.plane_at[1]}, {"c", r.plane_at[2]}};
      j["normal"] = normal_json(r.normal);
      out << j.dump(2) << '\n';
      return;
    }
    case Format::csv: {
      out << "tau,qx_quotient,qy_quotient,qx_normals,qy_normals,qx_determinant,qy_determinant,max_discrepancy,"
             "plane_a,plane_b,plane_c,nx,ny,nz\n";
      const double vals[] = {r.tau,
                             r.q.by_quotient.x(),
                             r.q.by_quotient.y(),
                             r.q.by_normals.x(),
                             r.q.by_normals.y(),
                             r.q.by_determinant.x(),
                             r.q.by_determinant.y(),
                             r.q.max_discrepancy(),
                             r.plane_at[0],
                             r.plane_at[1],
                             r.plane_at[2],
                             r.normal.nx,
                             r.normal.ny,
                             r.normal.nz};
      for (std::size_t i = 0; i < std::size(vals); ++i) out << (i ? "," : "") << format_double(vals[i]);
      out << '\n';
      return;
    }
    case Format::text:
      break;
  }
  for (std::size_t i = 0; i < 3; ++i)
    out << names[i] << " = " << vec_text(r.samples[i].p) << "   f = " << format_double(r.samples[i].fval) << '\n';
  out << "tau = " << format_double(r.tau) << '\n';
  out << "edges: da = " << vec_text(r.edge_a) << ", db = " << vec_text(r.edge_b) << ", dc = " << vec_text(r.edge_c)
      << '\n';
  out << "q (geometric quotient)   = " << vec_text(r.q.by_quotient) << '\n';
  out << "q (normal combination)   = " << vec_text(r.q.by_normals) << '\n';
  out << "q (plane determinant)    = " << vec_text(r.q.by_determinant) << '\n';
  out << "max discrepancy          = " << format_double(r.q.max_discrepancy()) << '\n';
  out << "plane at a, b, c         = " << format_double(r.plane_at[0]) << ", " << format_double(r.plane_at[1]) << ", "
      << format_double(r.plane_at[2]) << '\n';
  out << "unit normal              = (" << format_double(r.normal.nx) << ", " << format_double(r.normal.ny) << ", "
      << format_double(r.normal.nz) << ")\n";
}

// ---------------------------------------------------------------------------

std::string describe_limit(const LimitSummary& limit) {
  std::ostringstream s;
  s << "limit: " << to_string(limit.kind) << " (|q| ratio " << format_double(limit.ratio) << ")";
  switch (limit.kind) {
    case LimitKind::vanishing: s << ", q -> 0"; break;
    case LimitKind::finite: s << ", q -> " << vec_text(limit.q); break;
    case LimitKind::divergent:
      s << ", |q| -> inf, normal -> (" << format_double(limit.normal.nx) << ", " << format_double(limit.normal.ny)
        << ", " << format_double(limit.normal.nz) << ")";
      break;
    case LimitKind::indeterminate: break;
  }
  return s.str();
}

void write_sweep(std::ostream& out, const std::vector<SweepRecord>& rows, const LimitSummary& limit, Format fmt) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  switch (fmt) {
    case Format::csv:
      out << kSweepCsvHeader << '\n';
      for (const auto& r : rows) {
        const bool d = r.degenerate;
        const double vals[] = {r.delta,
                               r.eta,
                               d ? nan : r.q.x(),
                               d ? nan : r.q.y(),
                               d ? nan : r.q_norm,
                               d ? nan : r.normal.nx,
                               d ? nan : r.normal.ny,
                               d ? nan : r.normal.nz,
                               d ? nan : r.tangent_gap};
        for (double v : vals) out << format_double(v) << ',';
        out << (d ? 1 : 0) << '\n';
      }
      return;
    case Format::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json j;
        j["delta"] = r.delta;
        j["eta"] = r.eta;
        if (r.degenerate) {
          for (const char* k : {"qx", "qy", "qnorm", "nx", "ny", "nz", "tangent_gap"}) j[k] = nullptr;
        } else {
          j["qx"] = r.q.x();
          j["qy"] = r.q.y();
          j["qnorm"] = r.q_norm;
          j["nx"] = r.normal.nx;
          j["ny"] = r.normal.ny;
          j["nz"] = r.normal.nz;
          j["tangent_gap"] = r.tangent_gap;
        }
        j["degenerate"] = r.degenerate;
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << '\n';
      return;
    }
    case Format::text:
      break;
  }
  out << "       delta          eta            qx            qy          |q|      nx        ny        nz    gap(rad)\n";
  for (const auto& r : rows) {
    out << fixed("%12.4e ", r.delta) << fixed("%12.4e ", r.eta);
    if (r.degenerate) {
      out << "  degenerate\n";
      continue;
    }
    out << fixed("%13.6g ", r.q.x()) << fixed("%13.6g ", r.q.y()) << fixed("%12.6g ", r.q_norm)
        << fixed("%9.6f ", r.normal.nx) << fixed("%9.6f ", r.normal.ny) << fixed("%9.6f ", r.normal.nz)
        << fixed("%10.6f", r.tangent_gap) << '\n';
  }
  out << describe_limit(limit) << '\n';
}

// ---------------------------------------------------------------------------

void write_ga_check(std::ostream& out, const IdentityReport& r, Format fmt) {
  switch (fmt) {
    case Format::csv:
      out << "invariant,max_error,tolerance,passed\n";
      for (const auto& i : r.results)
        out << i.name << ',' << format_double(i.max_error) << ',' << format_double(i.tolerance) << ','
            << (i.passed ? 1 : 0) << '\n';
      return;
    case Format::json: {
      json j;
      j["seed"] = r.seed;
      j["trials"] = r.trials;
      j["passed"] = r.all_passed();
      j["invariants"] = json::array();
      for (const auto& i : r.results) {
        json e{{"name", i.name}, {"max_error", i.max_error}, {"tolerance", i.tolerance}, {"passed", i.passed}};
        if (!i.passed) e["failing_input"] = i.first_failure;
        j["invariants"].push_back(std::move(e));
      }
      out << j.dump(2) << '\n';
      return;
    }
    case Format::text:
      break;
  }
  out << "seed " << r.seed << ", " << r.trials << " trials\n";
  for (const auto& i : r.results) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-24s max error %-12.4g tol %-8.2g %s", i.name.c_str(), i.max_error,
                  i.tolerance, i.passed ? "ok" : "FAILED");
    out << line;
    if (!i.passed) out << "  at " << i.first_failure;
    out << '\n';
  }
  out << (r.all_passed() ? "all invariants hold\n" : "invariant failure\n");
}

void write_strong_derivative(std::ostream& out, const StrongDerivativeReport& r, Format fmt) {
  switch (fmt) {
    case Format::csv:
      out << "h,max_error,derivative,trials\n";
      for (const auto& l : r.levels)
        out << format_double(l.h) << ',' << format_double(l.max_error) << ',' << format_double(r.derivative) << ','
            << l.trials << '\n';
      return;
    case Format::json: {
      json j;
      j["x0"] = r.x0;
      j["derivative"] = r.derivative;
      j["levels"] = json::array();
      for (const auto& l : r.levels) j["levels"].push_back({{"h", l.h}, {"max_error", l.max_error}, {"trials", l.trials}});
      out << j.dump(2) << '\n';
      return;
    }
    case Format::text:
      break;
  }
  out << "x0 = " << format_double(r.x0) << ", reference derivative = " << format_double(r.derivative) << '\n';
  out << "           h    max |quotient - g'(x0)|\n";
  for (const auto& l : r.levels) out << fixed("%12.4e", l.h) << "    " << fixed("%.6e", l.max_error) << '\n';
}

// ---------------------------------------------------------------------------

namespace {

double parse_field(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("sweep csv line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) throw std::runtime_error("sweep csv: unexpected header");
  std::vector<SweepRecord> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 10) throw std::runtime_error("sweep csv line " + std::to_string(lineno) + ": expected 10 fields");
    SweepRecord r;
    r.delta = parse_field(fields[0], lineno);
    r.eta = parse_field(fields[1], lineno);
    r.degenerate = fields[9] == "1";
    if (!r.degenerate) {
      r.q = Vector2(parse_field(fields[2], lineno), parse_field(fields[3], lineno));
      r.q_norm = parse_field(fields[4], lineno);
      r.normal = {parse_field(fields[5], lineno), parse_field(fields[6], lineno), parse_field(fields[7], lineno)};
      r.tangent_gap = parse_field(fields[8], lineno);
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace secantq
