#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "secantq/cli.hpp"
#include "secantq/report.hpp"

using namespace secantq;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("secant subcommand") {
  const Run r = run({"--format", "json", "secant", "--fn", "x^2+y^2", "--a", "0,0", "--b", "-0.1,0.1", "--c", "0.1,0.1"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["q"]["quotient"][0].get<double>() == 0.0);
  CHECK(j["q"]["quotient"][1].get<double>() == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(j["max_discrepancy"].get<double>() <= 1e-12);

  const Run affine = run({"secant", "--fn", "2*x+3*y+1", "--a", "0,0", "--b", "1,0", "--c", "0,1"});
  CHECK(affine.code == kExitOk);
  CHECK(affine.out.find("q (plane determinant)    = (2, 3)") != std::string::npos);

  const Run collinear = run({"secant", "--fn", "x", "--a", "0,0", "--b", "1,1", "--c", "2,2"});
  CHECK(collinear.code == kExitDegenerate);
  CHECK_FALSE(collinear.err.empty());

  const Run syntax = run({"secant", "--fn", "x^-1", "--a", "0,0", "--b", "1,0", "--c", "0,1"});
  CHECK(syntax.code == kExitParseError);
  CHECK(syntax.err.find("exponent") != std::string::npos);

  const Run pole = run({"secant", "--fn", "1/x", "--a", "0,0", "--b", "1,0", "--c", "0,1"});
  CHECK(pole.code == kExitParseError);

  CHECK(run({"secant", "--fn", "x", "--a", "0", "--b", "1,0", "--c", "0,1"}).code == kExitUsage);
  CHECK(run({"secant", "--fn", "x", "--a", "0,0", "--b", "1,0"}).code == kExitUsage);
}

TEST_CASE("global flags may follow the subcommand") {
  const Run r = run({"secant", "--fn", "x", "--a", "0,0", "--b", "1,0", "--c", "0,1", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("tau,", 0) == 0);
}

TEST_CASE("sweep subcommand") {
  const std::vector<std::string> base = {"sweep", "--fn", "x^2+y^2", "--delta-start", "0.1", "--delta-end", "1e-5",
                                         "--steps", "5"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };

  const Run text = with({"--k", "2"});
  REQUIRE(text.code == kExitOk);
  CHECK(text.out.find("limit: finite") != std::string::npos);

  const Run csv = with({"--k", "3", "--format", "csv"});
  REQUIRE(csv.code == kExitOk);
  std::istringstream in(csv.out);
  const auto rows = read_sweep_csv(in);
  REQUIRE(rows.size() == 5);
  CHECK(rows.back().q_norm >= 1e4);
  CHECK(csv.err.find("divergent") != std::string::npos);

  const Run js = with({"--k", "1", "--format", "json", "--family", "rotated", "--x0", "0.5,-0.5"});
  REQUIRE(js.code == kExitOk);
  CHECK(nlohmann::json::parse(js.out).size() == 5);

  CHECK(with({"--k", "0"}).code == kExitUsage);
  CHECK(with({"--k", "1", "--family", "sheared"}).code == kExitUsage);
  CHECK(with({"--k", "1", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"sweep", "--fn", "x", "--k", "1", "--delta-start", "1e-3", "--delta-end", "1e-1", "--steps", "3"}).code ==
        kExitUsage);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "secantq_cli_out.csv";
  std::filesystem::remove(path);
  const Run r = run({"--out", path.string(), "--format", "csv", "sweep", "--fn", "x^2+y^2", "--k", "1",
                     "--delta-start", "0.1", "--delta-end", "0.001", "--steps", "3"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(read_sweep_csv(in).size() == 3);
  std::filesystem::remove(path);

  CHECK(run({"--out", "/nonexistent-dir/x.csv", "ga-check", "--trials", "1"}).code == kExitUsage);
}

TEST_CASE("ga-check subcommand") {
  const Run ok = run({"--seed", "42", "ga-check", "--trials", "500"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("all invariants hold") != std::string::npos);
  CHECK(run({"ga-check", "--trials", "0"}).code == kExitUsage);
  CHECK(run({"ga-check", "--trials", "-3"}).code == kExitUsage);
}

TEST_CASE("strong-derivative subcommand") {
  const Run r = run({"--format", "json", "strong-derivative", "--fn1d", "x^2", "--x0", "1", "--h-levels", "5",
                     "--trials", "1000"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["levels"].size() == 5);
  for (const auto& l : j["levels"]) CHECK(l["max_error"].get<double>() <= 2 * l["h"].get<double>());

  CHECK(run({"strong-derivative", "--fn1d", "x^", "--x0", "1"}).code == kExitParseError);
  CHECK(run({"strong-derivative", "--fn1d", "x*y", "--x0", "1"}).code == kExitParseError);
  CHECK(run({"strong-derivative", "--fn1d", "x", "--x0", "1", "--trials", "0"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
