// Acceptance run: one PASS/FAIL line per criterion; nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "properties.hpp"
#include "qseries/builders.hpp"
#include "qseries/error.hpp"
#include "qseries/polynomial.hpp"
#include "qseries/prodconv.hpp"
#include "qseries/relations.hpp"
#include "sessions.hpp"

using namespace qseries;
using sessions::mono;

namespace {

// Collects the reasons a criterion fails.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void all(const props::Failures& fs) { failures.insert(failures.end(), fs.begin(), fs.end()); }
};

using Exps = std::map<int, Rational>;

Polynomial power(const Polynomial& p, long e) {
  Polynomial out = Polynomial::constant(1);
  for (long i = 0; i < e; ++i) out = out * p;
  return out;
}

// c q^v prod (1-q^j)^{e_j} == f exactly, for integral exponents.
bool product_identity(const QProduct& p, const Polynomial& f) {
  if (!p.all_integral) return false;
  Polynomial num = Polynomial::monomial(p.leading_coeff, static_cast<int>(p.q_valuation));
  Polynomial den = Polynomial::constant(1);
  for (const auto& [j, e] : p.exponents) {
    const long n = to_long(Integer(e.get_num()));
    (n > 0 ? num : den) = (n > 0 ? num : den) * power(Polynomial::one_minus_q_pow(j), n > 0 ? n : -n);
  }
  return f * den == num;
}

// T(r,0) = 1, T(r,1) = 0, T(r,N) = -sum_{1<=2j<=N} [r+2j, j] T(r+2j, N-2j).
Polynomial rogers_t(int r, int n) {
  if (n == 0) return Polynomial::constant(1);
  if (n == 1) return Polynomial();
  Polynomial acc;
  for (int j = 1; 2 * j <= n; ++j) acc = acc - qbin_polynomial(j, r + 2 * j) * rogers_t(r + 2 * j, n - 2 * j);
  return acc;
}

// sum_k (-1)^k q^{k(3k+1)/2} [2n, n+k]^3
Polynomial dixon(int n) {
  Polynomial acc;
  for (int k = -n; k <= n; ++k) {
    const Polynomial b = qbin_polynomial(n + k, 2 * n);
    acc = acc + Polynomial::monomial(k % 2 == 0 ? 1 : -1, k * (3 * k + 1) / 2) * b * b * b;
  }
  return acc;
}

// Monomial exponent vector -> coefficient, zero entries dropped.
template <class C>
std::map<std::vector<int>, Rational> by_monomial(const MonomialBasis& basis, const std::vector<C>& coeffs) {
  std::map<std::vector<int>, Rational> out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out[basis.monomials[i]] = Rational(coeffs[i]);
  }
  return out;
}

std::map<std::vector<int>, Rational> negated(std::map<std::vector<int>, Rational> m) {
  for (auto& [k, v] : m) v = -v;
  return m;
}

Check a1() {
  Check c;
  const QProduct p = prodmake(sessions::rogers_ramanujan(50), 40);
  Exps want;
  for (int j = 1; j <= 39; ++j) {
    if (j % 5 == 1 || j % 5 == 4) want[j] = -1;
  }
  c(p.leading_coeff == 1 && p.q_valuation == 0, "leading term is not 1");
  c(p.exponents == want, "exponents: " + to_string(p));
  return c;
}

Check a2() {
  Check c;
  const Polynomial t8 = rogers_t(8, 8);
  const QFactorResult r = qfactor(RationalFunction(t8), 20);
  const Exps want_t8 = {{1, -1}, {2, -1}, {3, -1}, {4, -1}, {9, 1}, {10, 1}, {11, 1}, {16, 1}};
  c(r.product.q_valuation == 6 && r.product.leading_coeff == 1, "T(8,8) prefactor: " + to_string(r.product));
  c(r.product.exponents == want_t8, "T(8,8) factors: " + to_string(r.product));
  c(r.remainder == RationalFunction(Polynomial::constant(1)), "T(8,8) remainder is not 1");
  c(product_identity(r.product, t8), "T(8,8) polynomial identity fails");

  const Polynomial dx = dixon(5);
  const QFactorResult d = qfactor(RationalFunction(dx), 20);
  Exps want_dx;
  for (int j = 1; j <= 5; ++j) want_dx[j] = -2;
  for (int j = 6; j <= 15; ++j) want_dx[j] = 1;
  c(d.product.exponents == want_dx && d.product.q_valuation == 0 && d.product.leading_coeff == 1,
    "Dixon factors: " + to_string(d.product));
  c(d.remainder == RationalFunction(Polynomial::constant(1)), "Dixon remainder is not 1");
  c(product_identity(d.product, dx), "Dixon polynomial identity fails");
  return c;
}

Check a3() {
  Check c;
  const EtaProduct t2 = etamake(series_shift(theta2(100), Rational(-1, 4)), 100);
  const EtaProduct t3 = etamake(theta3(100), 100);
  const EtaProduct t4 = etamake(theta4(100), 100);
  using E = std::map<int, long>;
  c(t2.exponents == E{{4, 2}, {2, -1}} && t2.leading_coeff == 2 && t2.q_power == Rational(1, 4),
    "theta2: " + to_string(t2));
  c(t3.exponents == E{{2, 5}, {4, -2}, {1, -2}} && t3.leading_coeff == 1 && t3.q_power == 0,
    "theta3: " + to_string(t3));
  c(t4.exponents == E{{1, 2}, {2, -1}} && t4.leading_coeff == 1 && t4.q_power == 0, "theta4: " + to_string(t4));
  c(t2.recognized && t3.recognized && t4.recognized, "residual left over");
  return c;
}

Check a4() {
  Check c;
  using F = std::map<std::pair<int, int>, Rational>;
  const QSeries rr = sessions::rogers_ramanujan(50);
  const JacProduct j = jacprodmake(rr, 40);
  c(j.factors == F{{{0, 5}, 1}, {{1, 5}, -1}}, "RR: " + to_string(j));
  c(to_string(jac2prod(j)) == "1/((q;q^5)_infinity*(q^4;q^5)_infinity)", "jac2prod: " + to_string(jac2prod(j)));
  c(jac2series(j, 50) == rr, "RR jac2series differs");

  const QSeries m = sessions::mod14_sum(50);
  const JacProduct k = jacprodmake(m, 50);
  const F want = {{{0, 14}, Rational(13, 2)}, {{1, 14}, -2}, {{3, 14}, -1}, {{4, 14}, -1},
                  {{5, 14}, -1},          {{6, 14}, -1}, {{7, 14}, Rational(-1, 2)}};
  c(k.factors == want, "mod 14: " + to_string(k));
  c(jac2series(k, 50) == m, "mod 14 jac2series differs");
  return c;
}

Check a5() {
  Check c;
  const QSeries s = sift(series_inv(etaq(1, 500)), 5, 4);
  bool divisible = true;
  for (int n = 0; n < s.trunc_order(); ++n) divisible = divisible && s[n].get_den() == 1 && s[n].get_num() % 5 == 0;
  c(divisible, "p(5n+4) not divisible by 5");
  // 5 (q^5;q^5)^5 / (q;q)^6
  const QProduct p = prodmake(s, s.trunc_order());
  Exps want;
  for (int j = 1; j < s.trunc_order(); ++j) want[j] = j % 5 == 0 ? -1 : -6;
  c(p.leading_coeff == 5 && p.q_valuation == 0 && p.exponents == want, "p(5n+4) product: " + to_string(p));

  const QSeries pd = etaq(2, 500) * series_inv(etaq(1, 500));
  const QSeries s1 = sift(pd, 5, 1);
  const std::vector<long> head = {1, 4, 12, 32, 76, 165};
  for (size_t i = 0; i < head.size(); ++i) c(s1[static_cast<int>(i)] == head[i], "pd(5n+1) at n = " + std::to_string(i));
  const EtaProduct e = etamake(s1, s1.trunc_order());
  c(e.exponents == std::map<int, long>{{5, 3}, {2, 2}, {10, -1}, {1, -4}} && e.q_power == Rational(5, 24) &&
        e.leading_coeff == 1 && e.recognized,
    "pd(5n+1) eta product: " + to_string(e));
  return c;
}

Check a6() {
  Check c;
  const auto xs = sessions::theta_quartet(100);
  c(findhom(xs, 1).relations.empty(), "relations at degree 1");
  const RelationSearch r = findhom(xs, 2);
  std::set<std::map<std::vector<int>, Rational>> got;
  for (const auto& rel : r.relations) got.insert(by_monomial(rel.basis, rel.coeffs));
  const std::map<std::vector<int>, Rational> first = {{{2, 0, 0, 0}, 1}, {{0, 2, 0, 0}, 1}, {{0, 0, 2, 0}, -2}};
  const std::map<std::vector<int>, Rational> second = {{{1, 1, 0, 0}, -1}, {{0, 0, 0, 2}, 1}};
  c(got == std::set{first, negated(second)} || got == std::set{first, second},
    "degree-2 kernel has " + std::to_string(r.relations.size()) + " relations");
  for (const auto& rel : r.relations) c(rel.verified_to >= 100, "verified only to " + to_string(rel.verified_to));
  return c;
}

Check a7() {
  Check c;
  const auto [u, bs] = sessions::eisenstein_pair(50);
  const ComboSearch s = findhomcombo(u, bs, 3, 0, true);
  c(s.combos.size() == 1, std::to_string(s.combos.size()) + " combinations");
  if (s.combos.size() != 1) return c;
  const ComboResult& r = s.combos[0];
  c(by_monomial(r.basis, r.coeffs) ==
        std::map<std::vector<int>, Rational>{{{2, 1}, 1}, {{1, 2}, 40}, {{0, 3}, 335}},
    "combination: " + to_string(r));
  c(r.verified_to >= 50, "verified only to " + to_string(r.verified_to));
  return c;
}

Check a8() {
  Check c;
  const auto [t, xi] = sessions::watson7(100);
  const std::vector<QSeries> xs{t, xi};
  const ComboSearch s = findnonhomcombo(t * t, xs, 7, -15);
  c(s.combos.size() == 1, std::to_string(s.combos.size()) + " combinations");
  if (s.combos.size() != 1) return c;
  const ComboResult& r = s.combos[0];
  std::map<std::vector<int>, Rational> want;
  const long linear[] = {7, 35, 49};
  const long pure[] = {1, 7, 21, 49, 147, 343, 343};
  for (int k = 1; k <= 3; ++k) want[{1, k}] = linear[k - 1];
  for (int k = 1; k <= 7; ++k) want[{0, k}] = pure[k - 1];
  c(by_monomial(r.basis, r.coeffs) == want, "combination: " + to_string(r));
  c(r.verified_to >= 100, "verified only to " + to_string(r.verified_to));
  return c;
}

Check a9() {
  Check c;
  const auto [x, y] = sessions::cubic_pair(100);
  const Relation p = findpoly(x, y, 3, 1, 60);
  // (X+6)^3 Y - 27 (X+2)^2
  const std::map<std::vector<int>, Rational> want = {
      {{3, 1}, 1}, {{2, 1}, 18}, {{1, 1}, 108}, {{0, 1}, 216}, {{2, 0}, -27}, {{1, 0}, -108}, {{0, 0}, -108}};
  const auto got = by_monomial(p.basis, p.coeffs);
  c(got == want || got == negated(want), "polynomial: " + to_string(p));
  c(p.verified_to == 59, "verified to " + to_string(p.verified_to));
  return c;
}

Check a10() {
  Check c;
  const int T = 100;
  for (int b = 2; b <= 12; ++b) {
    for (int a = 1; a < b; ++a) {
      for (int sign : {1, -1}) {
        const QSeries series = tripleprod(mono(sign, a), b, std::nullopt, T);
        const QSeries product = aqprod_inf(mono(sign, a), b, T) * aqprod_inf(mono(sign, b - a), b, T) * etaq(b, T);
        c(series == product, "tripleprod z = " + std::string(sign < 0 ? "-" : "") + "q^" + std::to_string(a) +
                                 ", base q^" + std::to_string(b));
      }
    }
  }

  const QSeries e0 = sift(etaq(1, 500), 5, 0);
  const QSeries quin = quinprod(mono(1, 1), 5, 20, 99);
  c(e0.truncated_abs(99) == quin.truncated_abs(99), "quinprod(q, q^5) differs from E0");

  const int W = 49;
  const auto q = [&](int n) { return tripleprod(mono(1, n), 33, 10, W); };
  const auto shift = [&](const QSeries& f, int k) { return series_shift(f, k).truncated_abs(W); };
  const QSeries a0 = q(15), a9 = q(9);
  const QSeries b2 = q(13) - shift(q(2), 3);
  const QSeries b4 = q(7) + shift(q(4), 1);
  const QSeries idg = a0 * b2 - shift(a9 * b4, 2);
  const QSeries w = winquist(mono(1, 5), mono(1, 3), 11, 10, W);
  const QSeries diff = (w - idg).truncated_abs(W);
  c(diff.is_zero() && diff.abs_order() >= W, "winquist - (A0 B2 - q^2 A9 B4) is not O(q^49)");
  return c;
}

Check a11() {
  Check c;
  c.all(props::product_round_trip(100));
  c.all(props::series_round_trip(100));
  c.all(props::sift_reconstruction(100));
  c.all(props::ring_axioms(200));
  c.all(props::sqrt_round_trip(100));
  c.all(props::qbin_properties(20));
  return c;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;  // 0: no stated budget
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"A1", "Rogers-Ramanujan product exponents", 1, a1},
      {"A2", "qfactor of T(8,8) and Dixon's sum", 5, a2},
      {"A3", "etamake of theta2, theta3, theta4", 0, a3},
      {"A4", "jacprodmake, jac2prod, jac2series", 0, a4},
      {"A5", "sifting p(5n+4) and pd(5n+1)", 0, a5},
      {"A6", "findhom on the theta quartet", 0, a6},
      {"A7", "findhomcombo for U(5,6)", 0, a7},
      {"A8", "findnonhomcombo: Watson's modulus-7 equation", 0, a8},
      {"A9", "findpoly on the cubic theta pair", 0, a9},
      {"A10", "triple, quintuple and Winquist identities", 0, a10},
      {"A11", "property suites", 0, a11},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && secs >= cr.budget_seconds) {
      result.failures.push_back("took " + std::to_string(secs) + " s");
    }
    const bool pass = result.failures.empty();
    failed += pass ? 0 : 1;
    std::printf("%-3s %s  %s (%.2f s)\n", cr.id, pass ? "PASS" : "FAIL", cr.title, secs);
    for (size_t i = 0; i < result.failures.size() && i < 10; ++i) {
      std::printf("      %s\n", result.failures[i].c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
