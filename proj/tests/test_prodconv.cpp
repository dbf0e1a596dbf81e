#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "qseries/builders.hpp"
#include "qseries/error.hpp"
#include "qseries/polynomial.hpp"
#include "qseries/prodconv.hpp"
#include "sessions.hpp"
#include "test_util.hpp"

using namespace qseries;
using testutil::ints;
using testutil::S;

namespace {

using sessions::mod14_sum;
using sessions::rogers_ramanujan;

// The printed expansion of T(8,8).
Polynomial t8_printed() {
  const std::map<int, long> terms = {
      {6, 1},   {7, 1},   {8, 2},   {9, 3},   {10, 5},  {11, 6},  {12, 9},  {13, 11}, {14, 15},
      {15, 17}, {16, 21}, {17, 23}, {18, 28}, {19, 29}, {20, 33}, {21, 34}, {22, 37}, {23, 36},
      {24, 38}, {25, 36}, {26, 37}, {27, 34}, {28, 33}, {29, 29}, {30, 28}, {31, 23}, {32, 21},
      {33, 17}, {34, 15}, {35, 11}, {36, 9},  {37, 6},  {38, 5},  {39, 3},  {40, 2},  {41, 1},
      {42, 1}};
  std::vector<Rational> v(43);
  for (auto [e, c] : terms) v[static_cast<size_t>(e)] = c;
  return Polynomial(std::move(v));
}

// T(r,N) by its recursion, on int64 polynomials.
oracle::Poly rogers_t(int r, int n) {
  if (n == 0) return {1};
  if (n == 1) return {};
  oracle::Poly acc;
  for (int j = 1; 2 * j <= n; ++j) {
    oracle::add_shifted(acc, oracle::mul(oracle::qbin(j, r + 2 * j), rogers_t(r + 2 * j, n - 2 * j)), 0, -1);
  }
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

Polynomial to_polynomial(const oracle::Poly& p) {
  std::vector<Rational> v;
  for (auto c : p) v.emplace_back(c);
  return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("prodmake") {
  const QProduct rr = prodmake(rogers_ramanujan(50), 40);
  CHECK(rr.leading_coeff == 1);
  CHECK(rr.q_valuation == 0);
  CHECK(rr.all_integral);
  for (int j = 1; j < 40; ++j) {
    const bool hit = j % 5 == 1 || j % 5 == 4;
    CHECK(rr.exponents.count(j) == (hit ? 1u : 0u));
    if (hit) CHECK(rr.exponents.at(j) == -1);
  }
  CHECK(to_string(rr).starts_with("1/((1-q)*(1-q^4)*(1-q^6)*(1-q^9)*"));
  CHECK(to_string(rr).ends_with("*(1-q^39))"));

  CHECK(prodmake(S({1, -1, 0, 0, 0, 0}), 6).exponents == std::map<int, Rational>{{1, 1}});
  const QProduct p = prodmake(series_inv(etaq(1, 60)), 60);
  CHECK(p.exponents.size() == 59);
  for (auto& [j, a] : p.exponents) CHECK(a == -1);

  // A leading c*q^v is split off.
  const QProduct scaled = prodmake(QSeries::monomial(3, 2, 30) * etaq(2, 30), 25);
  CHECK(scaled.leading_coeff == 3);
  CHECK(scaled.q_valuation == 2);
  CHECK(scaled.exponents.size() == 12);
  CHECK_THROWS_AS(prodmake(etaq(1, 20), 30), TruncationError);
  CHECK_THROWS_AS(prodmake(S({1, 1}, Rational(1, 2)), 2), DomainError);

  // Non-integral exponents are flagged, not fatal: sqrt(1-q).
  const QProduct half = prodmake(series_sqrt(S({1, -1, 0, 0, 0, 0, 0, 0})), 8);
  CHECK_FALSE(half.all_integral);
  CHECK(half.exponents == std::map<int, Rational>{{1, Rational(1, 2)}});
}

TEST_CASE("expand_qproduct") {
  QProduct p;
  p.exponents = {{1, 1}};
  CHECK(expand_qproduct(p, 5) == S({1, -1, 0, 0, 0}));
  // 5 (q^5;q^5)^5/(q;q)^6 is the generating function of p(5n+4).
  QProduct r;
  r.leading_coeff = 5;
  for (int j = 1; j < 60; ++j) r.exponents[j] = j % 5 == 0 ? -1 : -6;
  const QSeries got = expand_qproduct(r, 60);
  for (int n = 0; n < 25; ++n) CHECK(got[n] == oracle::p(5 * n + 4));
  CHECK(expand_qproduct(prodmake(mod14_sum(60), 60), 60) == mod14_sum(60));
}

TEST_CASE("qfactor") {
  const Polynomial t8 = to_polynomial(rogers_t(8, 8));
  CHECK(t8 == t8_printed());
  for (std::optional<int> T : {std::optional<int>(20), std::optional<int>()}) {
    const QFactorResult r = qfactor(RationalFunction(t8), T);
    CHECK(r.product.leading_coeff == 1);
    CHECK(r.product.q_valuation == 6);
    CHECK(r.product.exponents ==
          std::map<int, Rational>{{1, -1}, {2, -1}, {3, -1}, {4, -1}, {9, 1}, {10, 1}, {11, 1}, {16, 1}});
    CHECK(r.remainder == RationalFunction(Polynomial::constant(1)));
    CHECK(to_string(r.product) ==
          "q^6*(1-q^9)*(1-q^10)*(1-q^11)*(1-q^16)/((1-q)*(1-q^2)*(1-q^3)*(1-q^4))");
  }

  const Polynomial dixon = to_polynomial(oracle::dixon(5, 5, 5));
  const QFactorResult d = qfactor(RationalFunction(dixon));
  std::map<int, Rational> want;
  for (int j = 6; j <= 15; ++j) want[j] = 1;
  for (int j = 1; j <= 5; ++j) want[j] = -2;
  CHECK(d.product.exponents == want);
  CHECK(d.remainder == RationalFunction(Polynomial::constant(1)));

  const QFactorResult simple = qfactor(RationalFunction(Polynomial({1, 0, -1})));
  CHECK(simple.product.exponents == std::map<int, Rational>{{2, 1}});

  // A factor that is no q-product is left in the remainder: (1-q^3)(1+q+q^3).
  const Polynomial stubborn = Polynomial::one_minus_q_pow(3) * Polynomial({1, 1, 0, 1});
  const QFactorResult s = qfactor(RationalFunction(stubborn));
  CHECK(s.product.exponents == std::map<int, Rational>{{3, 1}});
  CHECK(s.remainder == RationalFunction(Polynomial({1, 1, 0, 1})));

  // Quotients: (1-q^6)/((1-q^2)(1-q)) = (1+q^2+q^4)/(1-q).
  const RationalFunction quot(Polynomial::one_minus_q_pow(6),
                              Polynomial::one_minus_q_pow(2) * Polynomial::one_minus_q_pow(1));
  CHECK(qfactor(quot).product.exponents == std::map<int, Rational>{{1, -1}, {2, -1}, {6, 1}});
  CHECK_THROWS_AS(qfactor(RationalFunction(Polynomial({1}), Polynomial({0, 1, 1}))), DomainError);
}

TEST_CASE("etamake") {
  const EtaProduct t3 = etamake(theta3(100), 100);
  CHECK(t3.exponents == std::map<int, long>{{1, -2}, {2, 5}, {4, -2}});
  CHECK(t3.q_power == 0);
  CHECK(to_string(t3) == "eta(2*tau)^5/(eta(4*tau)^2*eta(tau)^2)");

  const EtaProduct t4 = etamake(theta4(100), 100);
  CHECK(t4.exponents == std::map<int, long>{{1, 2}, {2, -1}});
  CHECK(to_string(t4) == "eta(tau)^2/eta(2*tau)");

  const EtaProduct t2 = etamake(series_shift(theta2(100), Rational(-1, 4)), 100);
  CHECK(t2.exponents == std::map<int, long>{{2, -1}, {4, 2}});
  CHECK(t2.leading_coeff == 2);
  CHECK(t2.q_power == Rational(1, 4));
  CHECK(to_string(t2) == "2*eta(4*tau)^2/(q^(1/4)*eta(2*tau))");
  CHECK(expand_eta(t2, 100) == series_shift(theta2(100), Rational(-1, 4)));

  const QSeries pd = etaq(2, 500) * series_inv(etaq(1, 500));
  const EtaProduct s = etamake(sift(pd, 5, 1), 99);
  CHECK(s.exponents == std::map<int, long>{{1, -4}, {2, 2}, {5, 3}, {10, -1}});
  CHECK(s.q_power == Rational(5, 24));
  CHECK(to_string(s) == "eta(5*tau)^3*eta(2*tau)^2/(q^(5/24)*eta(10*tau)*eta(tau)^4)");
  CHECK(s.recognized);

  // Non-integral greedy coefficient: 1 + q/2.
  CHECK_FALSE(etamake(S({2, 1, 0, 0}), 4).recognized);
}

TEST_CASE("jacprodmake and jac2prod") {
  const JacProduct rr = jacprodmake(rogers_ramanujan(50), 40);
  CHECK(rr.factors == std::map<std::pair<int, int>, Rational>{{{0, 5}, 1}, {{1, 5}, -1}});
  CHECK(to_string(rr) == "JAC(0,5,infinity)/JAC(1,5,infinity)");
  CHECK(to_string(jac2prod(rr)) == "1/((q;q^5)_infinity*(q^4;q^5)_infinity)");
  CHECK(jac2series(rr, 50) == rogers_ramanujan(50));

  const JacProduct m14 = jacprodmake(mod14_sum(50), 50);
  CHECK(m14.factors.at({7, 14}) == Rational(-1, 2));
  CHECK(m14.factors.at({0, 14}) == Rational(13, 2));
  CHECK(m14.factors.at({1, 14}) == -2);
  for (int a = 3; a <= 6; ++a) CHECK(m14.factors.at({a, 14}) == -1);
  CHECK(m14.factors.count({2, 14}) == 0);
  CHECK(jac2series(m14, 50) == mod14_sum(50));

  const QSeries e0 = sift(etaq(1, 500), 5, 0);
  const JacProduct j0 = jacprodmake(e0, 99);
  CHECK(j0.factors ==
        std::map<std::pair<int, int>, Rational>{{{0, 5}, 1}, {{1, 5}, -1}, {{2, 5}, 1}});
  CHECK(to_string(jac2prod(j0)) ==
        "(q^5;q^5)_infinity*(q^2;q^5)_infinity*(q^3;q^5)_infinity/"
        "((q;q^5)_infinity*(q^4;q^5)_infinity)");

  CHECK(to_string(jac2prod(JacProduct{})) == "1");
  CHECK(jac2series(JacProduct{}, 10) == QSeries::constant(1, 10));
  CHECK(jac_series(1, 5, 60) == jacprod(1, 5, 60) * etaq(5, 60));

  // No period: partitions into distinct parts congruent to 1 mod 7 or... a
  // random perturbation breaks every period.
  QSeries broken = series_inv(jacprod(1, 5, 60));
  std::vector<Rational> v(broken.coeffs().begin(), broken.coeffs().end());
  v[17] += 1;
  CHECK_THROWS_AS(jacprodmake(QSeries(v), 59), RecognitionError);
}
