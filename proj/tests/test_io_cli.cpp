#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "ffc/io.hpp"
#include "test_util.hpp"

using namespace ffc;
using ffct::P;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

#ifdef FFC_CLI_PATH
int run_cli(const std::string& args) {
  std::string cmd = std::string(FFC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}
#endif

}  // namespace

TEST_CASE("polynomial JSON round-trips exactly") {
  Polynomial p({Rational(-1), make_rational(5, 2), Rational(0), Rational(3)});
  auto j = polynomial_to_json(p);
  CHECK(j["coeffs"][1] == "5/2");
  CHECK(polynomial_from_json(j) == p);

  auto r = nlohmann::json::parse(R"({"roots": [3, "5/2"], "degree": 2})");
  Polynomial q = polynomial_from_json(r);
  CHECK(q == from_roots(std::vector<Rational>{Rational(3), make_rational(5, 2)}));

  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"roots": [1], "degree": 3})")),
                  ParseError);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"foo": 1})")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"coeffs": ["1/0"]})")),
                  std::invalid_argument);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7/2") == make_rational(-7, 2));
  CHECK(parse_rational("2.5") == make_rational(5, 2));
  CHECK(parse_rational("-0.125") == make_rational(-1, 8));
  CHECK(to_fraction_string(make_rational(-7, 2)) == "-7/2");
  CHECK(to_fraction_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("bound report serialization") {
  BoundReport r = make_bound_report("sqsum", 1.25, 2.5, 1e-9);
  auto j = bound_report_to_json(r);
  CHECK(j["context"] == "sqsum");
  CHECK(j["lhs"] == 1.25);
  CHECK(j["margin"] == 1.25);
  CHECK(j["satisfied"] == true);
  std::string row = csv_row(r, "1", "2");
  CHECK(row == "sqsum,1,2,1.25,2.5,1.25,true");
  CHECK(format_double(2.0 / 3.0) == "0.66666666666666663");
}

#ifdef FFC_CLI_PATH
TEST_CASE("CLI contract: exit codes and byte-identical reruns") {
  std::string dir = "cli_scratch";
  std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  write_text_file(dir + "/p.json", R"({"coeffs": ["-1", "0", "1"]})" "\n");
  write_text_file(dir + "/id2.json", R"({"roots": [1, 1]})" "\n");
  write_text_file(dir + "/bad.json", "{ not json\n");

  CHECK(run_cli("conv sym-add " + dir + "/p.json " + dir + "/p.json --out " + dir +
                "/r.json") == 0);
  CHECK(polynomial_from_json(nlohmann::json::parse(slurp(dir + "/r.json"))) ==
        P({-2, 0, 1}));

  // Identity element echoes the input exactly.
  CHECK(run_cli("conv sym-mult " + dir + "/p.json " + dir + "/id2.json --out " + dir +
                "/echo.json") == 0);
  CHECK(polynomial_from_json(nlohmann::json::parse(slurp(dir + "/echo.json"))) ==
        P({-1, 0, 1}));

  CHECK(run_cli("conv sym-add " + dir + "/bad.json " + dir + "/p.json") == 2);
  CHECK(run_cli("conv sym-add " + dir + "/p.json " + dir + "/p.json --d 1") == 3);
  CHECK(run_cli("verify quadrature --d 9") == 3);
  CHECK(run_cli("bounds sqsum " + dir + "/p.json " + dir + "/p.json --out " + dir +
                "/b.csv") == 0);
  std::string csv = slurp(dir + "/b.csv");
  CHECK(csv.substr(0, std::string(kCsvHeader).size()) == kCsvHeader);

  // Determinism: identical flags give byte-identical artifacts.
  std::string flags = "verify quadrature --d 2..3 --instances 3 --seed 17 --out ";
  CHECK(run_cli(flags + dir + "/v1.json") == 0);
  CHECK(run_cli(flags + dir + "/v2.json") == 0);
  CHECK(slurp(dir + "/v1.json") == slurp(dir + "/v2.json"));
  CHECK(slurp(dir + "/v1.json").find("\"seed\": 17") != std::string::npos);
}
#endif
