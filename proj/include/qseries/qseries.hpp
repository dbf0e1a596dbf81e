#pragma once

#include <span>
#include <string>
#include <vector>

#include "qseries/rational.hpp"

namespace qseries {

/// Coefficients of a q-series are exact rationals.
using Coefficient = Rational;

/// A signed power of q, +q^e or -q^e, used as the `z`/`a` argument of the
/// classical products. The exponent may be rational but is never negative.
struct QMonomial {
  int sign = 1;
  Rational exp = 0;

  QMonomial() = default;
  QMonomial(int sign, Rational exp);

  /// +q^e
  static QMonomial q_pow(long e) { return QMonomial(1, Rational(e)); }
  /// -q^e
  static QMonomial neg_q_pow(long e) { return QMonomial(-1, Rational(e)); }

  friend bool operator==(const QMonomial&, const QMonomial&) = default;
};

std::string to_string(const QMonomial& m);

/// Truncated formal power series
///
///     q^r * (c_0 + c_1 q + ... + c_{T-1} q^{T-1} + O(q^T))
///
/// with exact rational coefficients. `r` (the prefactor exponent) may be any
/// rational, which is how fractional powers such as q^(1/4) and Laurent tails
/// such as q^(-1) are carried.
///
/// Values are kept in a canonical form so that equal series compare equal:
/// nonnegative integer parts of r are absorbed into leading zero
/// coefficients, so either 0 <= r < 1, or r < 0 and c_0 != 0.
class QSeries {
 public:
  /// 0 + O(q).
  QSeries();

  /// Series whose known coefficients are exactly `coeffs` (T = coeffs.size()).
  explicit QSeries(std::vector<Coefficient> coeffs, Rational prefactor_exp = 0);

  static QSeries constant(const Coefficient& c, int trunc_order);
  /// c * q^e, known to relative order `trunc_order` beyond its own exponent.
  static QSeries monomial(const Coefficient& c, const Rational& e, int trunc_order);
  /// Zero series O(q^order); `order` is an absolute exponent.
  static QSeries big_o(const Rational& order);

  int trunc_order() const { return static_cast<int>(coeffs_.size()); }
  const Rational& prefactor_exp() const { return prefactor_; }
  std::span<const Coefficient> coeffs() const { return coeffs_; }

  /// Coefficient of q^(r+n). Throws TruncationError for n outside [0, T).
  const Coefficient& operator[](int n) const;

  /// Absolute exponent of the first unknown term: r + T.
  Rational abs_order() const { return prefactor_ + trunc_order(); }

  /// Index of the first nonzero coefficient, or T if there is none.
  int valuation() const;
  bool is_zero() const { return valuation() == trunc_order(); }

  /// Keeps at most `n` coefficients (relative to the prefactor).
  QSeries truncated(int n) const;
  /// Drops everything at or beyond absolute exponent `order`.
  QSeries truncated_abs(const Rational& order) const;

  /// Moves leading zero coefficients into the prefactor, so that c_0 != 0.
  /// The result is deliberately not canonical; it is the working form used
  /// before products and reciprocals. A zero series is returned unchanged.
  QSeries stripped() const;

  /// Coefficient at absolute exponent `e`. Zero below the prefactor and
  /// at non-aligned exponents; throws TruncationError at or beyond abs_order.
  Coefficient coeff_at(const Rational& e) const;

  bool all_integer() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  struct Raw {};
  QSeries(Raw, std::vector<Coefficient> coeffs, Rational prefactor)
      : coeffs_(std::move(coeffs)), prefactor_(std::move(prefactor)) {}
  void canonicalize();

  std::vector<Coefficient> coeffs_;
  Rational prefactor_;
};

// Arithmetic. Binary operations align prefactors (their difference must be
// an integer) and never claim more precision than the operands carry.
QSeries series_add(const QSeries& f, const QSeries& g);
QSeries series_sub(const QSeries& f, const QSeries& g);
QSeries series_neg(const QSeries& f);
QSeries series_scale(const QSeries& f, const Coefficient& c);
QSeries series_mul(const QSeries& f, const QSeries& g);
/// Multiplies by q^e.
QSeries series_shift(const QSeries& f, const Rational& e);

/// 1/f; requires c_0 != 0 (in canonical form).
QSeries series_inv(const QSeries& f);
/// 1/f for any nonzero f: a leading q^v is inverted into the prefactor.
QSeries series_reciprocal(const QSeries& f);
QSeries series_div(const QSeries& f, const QSeries& g);

/// f^e by binary exponentiation; e < 0 uses series_inv.
QSeries series_pow(const QSeries& f, long e);
/// Square root with g_0 = 1; requires c_0 = 1. The prefactor is halved.
QSeries series_sqrt(const QSeries& f);

/// q -> q^k; f + O(q^T) becomes f(q^k) + O(q^{kT}).
QSeries substitute_power(const QSeries& f, int k);
/// q d/dq; requires prefactor 0.
QSeries q_derivative(const QSeries& f);
/// sum_i s[n*i + k] q^i; requires prefactor 0 and 0 <= k < n.
QSeries sift(const QSeries& s, int n, int k);
/// Coefficient of q^n; throws TruncationError beyond the truncation.
Coefficient coeff(const QSeries& f, int n);

inline QSeries operator+(const QSeries& f, const QSeries& g) { return series_add(f, g); }
inline QSeries operator-(const QSeries& f, const QSeries& g) { return series_sub(f, g); }
inline QSeries operator-(const QSeries& f) { return series_neg(f); }
inline QSeries operator*(const QSeries& f, const QSeries& g) { return series_mul(f, g); }
inline QSeries operator*(const Coefficient& c, const QSeries& f) { return series_scale(f, c); }
inline QSeries operator/(const QSeries& f, const QSeries& g) { return series_div(f, g); }

/// `c0 + c1*q + c2*q^2 + ... + O(q^T)`; a nonzero prefactor is written as
/// `q^(r)*( ... )`.
std::string to_string(const QSeries& f);

}  // namespace qseries
