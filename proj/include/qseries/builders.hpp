#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qseries/polynomial.hpp"
#include "qseries/qseries.hpp"

// Classical q-series and products. Every builder takes the truncation T last
// (the result is exact to O(q^T)); `base_exp` is the power of q substituted
// for the identity's q. Summation half-widths default to the smallest value
// whose omitted terms all lie at or beyond q^T.

namespace qseries {

/// (a; q^b)_n = (1-a)(1-a q^b)...(1-a q^{b(n-1)})
QSeries aqprod(const QMonomial& a, int base_exp, int n, int T);
/// (a; q^b)_inf
QSeries aqprod_inf(const QMonomial& a, int base_exp, int T);

/// Gaussian polynomial [n choose m]_q by the Pascal recurrence; zero unless
/// 0 <= m <= n.
Polynomial qbin_polynomial(int m, int n);
/// As a series; T defaults to degree + 1 so that no term is lost.
QSeries qbin(int m, int n, std::optional<int> T = std::nullopt);

/// prod_{n>=1} (1 - q^{kn}) via the pentagonal number theorem.
QSeries etaq(int k, int T);

/// sum_{i=-N}^{N} z^i q^{b i^2}
QSeries theta(const QMonomial& z, int base_exp, std::optional<int> half_width, int T);
/// q^(1/4) * 2 sum_{n>=0} q^{n(n+1)}
QSeries theta2(int T);
QSeries theta3(int T);
QSeries theta4(int T);

/// (q^a; q^b)_inf (q^{b-a}; q^b)_inf, 0 < a < b.
QSeries jacprod(int a, int b, int T);

/// Arguments shared by the theta-type identities.
struct ThetaSpec {
  QMonomial z;
  int base_exp = 1;
  int trunc = 1;
};

/// sum_n (-1)^n z^n q^{b n(n-1)/2}
QSeries tripleprod(const QMonomial& z, int base_exp, std::optional<int> half_width, int T);
QSeries tripleprod(const ThetaSpec& spec, std::optional<int> half_width = std::nullopt);

/// sum_m ((-z)^{-3m} - (-z)^{3m+1}) q^{b m(3m+1)/2}
QSeries quinprod(const QMonomial& z, int base_exp, std::optional<int> half_width, int T);
QSeries quinprod(const ThetaSpec& spec, std::optional<int> half_width = std::nullopt);

/// Winquist's double series with a, b signed monomials and q -> q^base_exp;
/// n runs over [0, N], m over [-N, N].
QSeries winquist(const QMonomial& a, const QMonomial& b, int base_exp,
                 std::optional<int> half_width, int T);

/// (a; q^base_exp)_inf raised to `power`.
struct PochhammerFactor {
  QMonomial a;
  int base_exp = 1;
  long power = 1;

  friend bool operator==(const PochhammerFactor&, const PochhammerFactor&) = default;
};

std::string to_string(const PochhammerFactor& f);

QSeries expand_pochhammer(std::span<const PochhammerFactor> factors, int T);

/// The five product-side factors of the quintuple product identity:
/// (-z;q), (-q/z;q), (z^2 q;q^2), (q/z^2;q^2), (q;q), with q -> q^b.
std::vector<PochhammerFactor> quinprod_factors(const QMonomial& z, int base_exp);
/// The product side of Winquist's identity: (a)(q/a)(b)(q/b)(ab)(q/ab)
/// (a/b)(qb/a)(q;q)^2, with q -> q^b.
std::vector<PochhammerFactor> winquist_factors(const QMonomial& a, const QMonomial& b,
                                               int base_exp);

}  // namespace qseries
