#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qseries/qseries.hpp"

namespace qseries {

/// Exact polynomial in q with rational coefficients; dense, with trailing
/// zeros trimmed (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// 1 - q^j
  static Polynomial one_minus_q_pow(int j);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator[](int n) const;
  const Rational& leading() const { return coeffs_.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);

Polynomial pow(const Polynomial& a, int e);
/// Multiplies by q^k (k >= 0) or divides by q^-k (k < 0, must be exact).
Polynomial shift(const Polynomial& a, int k);

/// Euclidean division over Q: a = quot*b + rem, deg rem < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// a / b; throws DomainError if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Expansion to O(q^T); the polynomial is truncated if its degree >= T.
QSeries to_series(const Polynomial& p, int T);

std::string to_string(const Polynomial& p);

/// Quotient of two polynomials in q, kept in lowest terms with a monic
/// denominator.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(Polynomial numerator, Polynomial denominator = Polynomial::constant(1));

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
RationalFunction pow(const RationalFunction& a, int e);

/// Laurent expansion to absolute order O(q^T).
QSeries to_series(const RationalFunction& f, int T);

std::string to_string(const RationalFunction& f);

}  // namespace qseries
