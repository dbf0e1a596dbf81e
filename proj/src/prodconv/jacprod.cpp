#include <algorithm>

#include "internal.hpp"
#include "qseries/builders.hpp"
#include "qseries/error.hpp"
#include "qseries/prodconv.hpp"

namespace qseries {

JacProduct jacprodmake(const QSeries& f, int T, std::optional<int> max_period) {
  const QProduct p = prodmake(f, T);
  auto a = [&](int n) {
    auto it = p.exponents.find(n);
    return it == p.exponents.end() ? Rational(0) : it->second;
  };
  const int bound = max_period.value_or((T - 1) / 2);
  int period = 0;
  for (int b = 1; b <= bound && period == 0; ++b) {
    bool ok = true;
    for (int n = b + 1; n < T && ok; ++n) ok = a(n) == a(n - b);
    if (ok) period = b;
  }
  if (period == 0) {
    throw RecognitionError("no period found for the product exponents up to " +
                           std::to_string(bound) + " (not a Jacobi-type product to O(q^" +
                           std::to_string(T) + "))");
  }
  const int b = period;
  if (b >= T) throw RecognitionError("not enough coefficients to fix the period");

  JacProduct out;
  out.leading_coeff = p.leading_coeff;
  out.q_valuation = p.q_valuation;
  // Class r of the exponents is (q^r; q^b)^{A_r}, with A_0 on (q^b; q^b).
  Rational zero_class = a(b);
  for (int r = 1; 2 * r < b; ++r) {
    if (a(r) != a(b - r)) {
      throw RecognitionError("exponents of (1-q^n) for n = " + std::to_string(r) + " and " +
                             std::to_string(b - r) + " mod " + std::to_string(b) +
                             " differ; no theta-product form");
    }
    if (a(r) != 0) out.factors[{r, b}] = a(r);
    zero_class -= a(r);
  }
  if (b % 2 == 0 && b > 0) {
    // JAC(b/2, b) = (q^{b/2}; q^b)^2 (q^b; q^b)
    const Rational half = a(b / 2) / 2;
    if (half != 0) out.factors[{b / 2, b}] = half;
    zero_class -= half;
  }
  if (zero_class != 0) out.factors[{0, b}] = zero_class;
  return out;
}

PochhammerProduct jac2prod(const JacProduct& j) {
  std::map<std::pair<int, int>, Rational> merged;
  for (const auto& [key, e] : j.factors) {
    const auto [a, b] = key;
    if (a == 0) {
      merged[{b, b}] += e;
    } else {
      merged[{a, b}] += e;
      merged[{b - a, b}] += e;
      merged[{b, b}] += e;
    }
  }
  PochhammerProduct out;
  out.leading_coeff = j.leading_coeff;
  out.q_valuation = j.q_valuation;
  for (const auto& [key, e] : merged) {
    if (e != 0) out.factors.push_back({key.first, key.second, e});
  }
  // (q^b; q^b) first within a modulus, then by residue.
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.b != y.b) return x.b < y.b;
    if ((x.a == x.b) != (y.a == y.b)) return x.a == x.b;
    return x.a < y.a;
  });
  return out;
}

QSeries jac_series(int a, int b, int T) {
  if (b < 1 || a < 0 || a >= b) throw DomainError("JAC(a,b) needs 0 <= a < b");
  if (a == 0) return etaq(b, T);
  return tripleprod(QMonomial::q_pow(a), b, std::nullopt, T);
}

QSeries jac2series(const JacProduct& j, int T) {
  if (T < 1) throw DomainError("jac2series: T must be >= 1");
  QSeries acc = QSeries::constant(j.leading_coeff, T);
  for (const auto& [key, e] : j.factors) {
    const Integer den = e.get_den();
    if (den != 1 && den != 2) {
      throw DomainError("jac2series: exponent " + to_string(e) + " has denominator > 2");
    }
    QSeries s = series_pow(jac_series(key.first, key.second, T), to_long(Integer(e.get_num())));
    if (den == 2) s = series_sqrt(s);
    acc = series_mul(acc, s);
  }
  return series_shift(acc, Rational(j.q_valuation));
}

}  // namespace qseries
