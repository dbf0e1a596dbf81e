#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qseries/builders.hpp"
#include "qseries/error.hpp"
#include "qseries/expression.hpp"
#include "qseries/json_io.hpp"
#include "sessions.hpp"
#include "test_util.hpp"

using namespace qseries;
using testutil::geometric;

namespace {

QSeries eval(std::string_view text, int T, const Definitions& defs = {}) {
  return evaluate(*parse_expression(text), T, defs);
}

}  // namespace

TEST_CASE("parse") {
  CHECK(to_string(*parse_expression("etaq(2,200)/etaq(1,200)")) == "(etaq(2,200)/etaq(1,200))");
  CHECK(to_string(*parse_expression("1+q")) == "(1+q)");
  CHECK(to_string(*parse_expression("-q^2^3")) == "(-(q^(2^3)))");
  CHECK(to_string(*parse_expression("q^-1")) == "(q^(-1))");
  CHECK(to_string(*parse_expression("sum(q^(n*n)/aqprod(q,1,n,50), n, 0, 8)")) ==
        "sum(((q^(n*n))/aqprod(q,1,n,50)),n,0,8)");
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_expression("1 +\n  * q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_expression("etaq(1,"), ParseError);
  CHECK_THROWS_AS(parse_expression("(1+q"), ParseError);
  CHECK_THROWS_AS(parse_expression("1 $ 2"), ParseError);
  CHECK_THROWS_AS(parse_expression(""), ParseError);
}

TEST_CASE("evaluate") {
  CHECK(eval("1/(1-q)", 5) == geometric(5));
  const QSeries rr = eval("sum(q^(n*n)/aqprod(q,1,n,50), n, 0, 8)", 50);
  CHECK(rr[49] == 961);
  for (int n = 0; n < 50; ++n) CHECK(rr[n] == oracle::rr(n));
  CHECK(rr == sessions::rogers_ramanujan(50));
  CHECK(eval("etaq(2,200)/etaq(1,200)", 200) == etaq(2, 200) / etaq(1, 200));
  CHECK(eval("theta2(100)/q^(1/4)", 100).prefactor_exp() == 0);
  CHECK(eval("theta3(q^2, 100)", 100) == sessions::in_q_pow(theta3, 2, 100));
  CHECK(eval("aqprod(-q, q, infinity)", 30) == aqprod_inf(QMonomial(-1, 1), 1, 30));
  CHECK(eval("sqrt(1 - 2*q + 3*q^2)", 3) == testutil::S({1, -1, 1}));
  CHECK(eval("sift(1/etaq(1,500), 5, 4)", 500)[3] == 490);
  CHECK(eval("O(q^3) + 1 + q", 10) == testutil::S({1, 1, 0}));
  CHECK(eval("subq(1 + q, 3)", 10).truncated_abs(10) == testutil::S({1, 0, 0, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(eval("JAC(1,5,infinity)", 40) == jacprod(1, 5, 40) * etaq(5, 40));
}

TEST_CASE("Dixon's sum evaluates exactly") {
  const char* dixon =
      "sum((-1)^k*q^(k*(3*k+1)/2)*qbin(5+k,10)*qbin(5+k,10)*qbin(5+k,10), k, -5, 5)";
  const RationalFunction f = evaluate_rational(*parse_expression(dixon));
  const auto want = oracle::dixon(5, 5, 5);
  REQUIRE(f.is_polynomial());
  REQUIRE(f.numerator().degree() == static_cast<int>(want.size()) - 1);
  for (size_t i = 0; i < want.size(); ++i) CHECK(f.numerator()[static_cast<int>(i)] == want[i]);
}

TEST_CASE("definitions") {
  Definitions defs;
  defs["B1"] = parse_expression("etaq(1,50)^5/etaq(5,50)");
  defs["B2"] = parse_expression("q*etaq(5,50)^5/etaq(1,50)");
  const auto bs = sessions::eisenstein_pair(50).second;
  CHECK(eval("B1*B2", 50, defs).truncated_abs(50) == (bs[0] * bs[1]).truncated_abs(50));
  defs["loop"] = parse_expression("loop + 1");
  CHECK_THROWS_AS(eval("loop", 10, defs), ParseError);
  CHECK_THROWS_AS(eval("nosuch(1)", 10), ParseError);
  CHECK_THROWS_AS(eval("etaq(1,2,3,4)", 10), ParseError);
  CHECK_THROWS_AS(eval("1/(q-q)", 10), DomainError);
}

TEST_CASE("structured series records round-trip") {
  for (const QSeries& s : {theta2(30), eval("1/(1-q)", 7), sessions::mod14_sum(40),
                           QSeries::big_o(Rational(5, 2)), eval("q^(-2)/(1-q)", 10)}) {
    const Json j = to_json(s);
    CHECK(series_from_json(Json::parse(j.dump())) == s);
  }
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"coeffs": 3})")), ParseError);
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"prefactor_exp": "x", "trunc_order": 1, "coeffs": ["1"]})")),
                  ParseError);
}
