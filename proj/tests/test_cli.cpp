#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qseries/builders.hpp"
#include "qseries/cli.hpp"
#include "qseries/json_io.hpp"
#include "sessions.hpp"

using namespace qseries;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kRR = "sum(q^(n*n)/aqprod(q,1,n,50), n, 0, 8)";

}  // namespace

TEST_CASE("expand") {
  CHECK(run({"expand", "-e", "1/(1-q)", "-T", "5"}).out == "1 + q + q^2 + q^3 + q^4 + O(q^5)\n");
  const Run j = run({"expand", "-e", "1+q", "-T", "3", "--format", "json"});
  CHECK(j.code == kExitOk);
  CHECK(series_from_json(Json::parse(j.out)) == QSeries(std::vector<Rational>{1, 1, 0}));
  // Several inputs print in order.
  CHECK(run({"expand", "-e", "1", "-e", "q", "-T", "2"}).out == "1 + O(q^2)\nq + O(q^2)\n");
}

TEST_CASE("product conversions") {
  CHECK(run({"prodmake", "-e", kRR, "-T", "50", "--order", "20"}).out ==
        "1/((1-q)*(1-q^4)*(1-q^6)*(1-q^9)*(1-q^11)*(1-q^14)*(1-q^16)*(1-q^19))\n");
  CHECK(run({"etamake", "-e", "theta3(100)"}).out == "eta(2*tau)^5/(eta(4*tau)^2*eta(tau)^2)\n");
  const Json eta = Json::parse(run({"etamake", "-e", "theta3(100)", "--format", "json"}).out);
  CHECK(eta["exponents"]["2"] == 5);
  CHECK(eta["recognized"] == true);
  CHECK(run({"jacprodmake", "-e", kRR, "-T", "50"}).out == "JAC(0,5,infinity)/JAC(1,5,infinity)\n");
  CHECK(run({"qfactor", "-e", "qbin(2,4)"}).out == "(1-q^3)*(1-q^4)/((1-q)*(1-q^2))\n");
  CHECK(run({"jac2prod", "--jac", "JAC(0,5,infinity)/JAC(1,5,infinity)"}).out ==
        "1/((q;q^5)_infinity*(q^4;q^5)_infinity)\n");
  const Run series = run({"jac2series", "--jac", "JAC(0,5,infinity)/JAC(1,5,infinity)", "-T", "50",
                          "--format", "json"});
  CHECK(series_from_json(Json::parse(series.out)) == sessions::rogers_ramanujan(50));
  CHECK(run({"sift", "-e", "1/etaq(1,100)", "-n", "5", "-k", "4", "-T", "100"}).out.rfind("5 + 30*q + 135*q^2", 0) ==
        0);
}

TEST_CASE("relation searches") {
  const std::vector<std::string> thetas{"-e", "theta3(100)", "-e", "theta4(100)", "-e", "theta3(q^2,100)",
                                        "-e", "theta4(q^2,100)"};
  std::vector<std::string> args{"findhom", "-n", "2"};
  args.insert(args.end(), thetas.begin(), thetas.end());
  CHECK(run(args).out == "# of terms: 31\nX1^2 + X2^2 - 2*X3^2\nX1*X2 - X4^2\n");
  args.insert(args.end(), {"--format", "json"});
  const Json j = Json::parse(run(args).out);
  CHECK(j["terms"] == 31);
  REQUIRE(j["relations"].size() == 2);
  CHECK(j["relations"][1]["text"] == "X1*X2 - X4^2");
  CHECK(j["relations"][1]["verified_to"] == "100");

  const Run none = run({"findhomcombo", "-e", "etaq(1,50)^5/etaq(5,50)", "-e", "q*etaq(5,50)^5/etaq(1,50)",
                        "--target", "theta3(50)", "-n", "2", "-T", "50"});
  CHECK(none.code == kExitOk);
  CHECK(none.out.find("no combination found") != std::string::npos);
}

TEST_CASE("check-identity") {
  const Run eq = run({"check-identity", "--lhs", "tripleprod(q,3,10,60)", "--rhs", "etaq(1,60)", "-T", "60"});
  CHECK(eq.code == kExitOk);
  CHECK(eq.out == "equal to O(q^60)\n");
  const Run ne = run({"check-identity", "--lhs", "etaq(1,30)", "--rhs", "etaq(2,30)", "-T", "30"});
  CHECK(ne.code == kExitFailure);
  CHECK(ne.out == "differ at q^1: lhs -1, rhs 0\n");
}

TEST_CASE("files and definitions") {
  const std::string path = "test_cli_input.json";
  {
    std::ofstream f(path);
    f << to_json(theta3(40)).dump();
  }
  CHECK(run({"etamake", "--in", path, "-T", "40"}).out == "eta(2*tau)^5/(eta(4*tau)^2*eta(tau)^2)\n");
  {
    std::ofstream f(path);
    f << "1/(1-q)\n";
  }
  CHECK(run({"expand", "--in", path, "-T", "3"}).out == "1 + q + q^2 + O(q^3)\n");
  std::remove(path.c_str());
  CHECK(run({"expand", "--def", "A=1-q", "-e", "1/A", "-T", "3"}).out == "1 + q + q^2 + O(q^3)\n");
}

TEST_CASE("exit codes") {
  const Run parse = run({"expand", "-e", "1+"});
  CHECK(parse.code == kExitUsage);
  CHECK(parse.err == "parse error: unexpected end of input at line 1, column 3\n");
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"sift", "-e", "q"}).code == kExitUsage);
  CHECK(run({"expand", "--in", "/nonexistent/file"}).code == kExitUsage);
  CHECK(run({"expand", "-e", "q", "--def", "bad"}).code == kExitUsage);
  CHECK(run({"expand", "-e", "1/(q-q)"}).code == kExitFailure);
  CHECK(run({"findhom", "-e", "theta3(12)", "-e", "theta4(12)", "-n", "15", "-T", "12"}).code == kExitFailure);
  CHECK(run({"findpoly", "--x", "theta3(60)", "--y", "etaq(1,60)", "--deg1", "1", "--deg2", "1", "-T", "60"}).code ==
        kExitFailure);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"findnonhom", "-e", "theta3(80)", "-e", "theta4(80)", "-n", "2",
                                      "--format", "json"};
  CHECK(run(args).out == run(args).out);
}
