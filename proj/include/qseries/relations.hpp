#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qseries/qseries.hpp"

// Polynomial relations among q-series, found as exact null vectors of the
// matrix whose rows are the coefficient sequences of candidate monomials.

namespace qseries {

/// Dense rational matrix, row-major.
using Matrix = std::vector<std::vector<Rational>>;

/// Basis of the right nullspace of M^T (i.e. integer combinations of the
/// rows of M that vanish). Vectors are primitive with their first nonzero
/// entry positive; one vector per free column, in column order.
std::vector<std::vector<Integer>> kernel_basis(const Matrix& m);

enum class BasisMode { homogeneous, inhomogeneous, bivariate };

/// Ordered exponent vectors over k formal variables.
///
///   homogeneous(n):    total degree exactly n, descending lex
///                      (X1^2, X1*X2, ..., Xk^2);
///   inhomogeneous(n):  total degree <= n, by ascending degree, constant first;
///   bivariate(d1, d2): X^i Y^j with i <= d1, j <= d2, by descending degree
///                      then descending lex, constant last.
struct MonomialBasis {
  BasisMode mode = BasisMode::homogeneous;
  int variables = 0;
  std::vector<std::vector<int>> monomials;

  static MonomialBasis homogeneous(int k, int n);
  static MonomialBasis inhomogeneous(int k, int n);
  static MonomialBasis bivariate(int deg1, int deg2);

  size_t size() const { return monomials.size(); }
  /// X1..Xk, or X, Y in bivariate mode.
  std::vector<std::string> variable_names() const;

  friend bool operator==(const MonomialBasis&, const MonomialBasis&) = default;
};

/// Each monomial evaluated on `xs` (one series per variable).
std::vector<QSeries> evaluate_monomials(const MonomialBasis& basis, std::span<const QSeries> xs);

/// Text of sum coeffs[m] * monomial m, in basis order, e.g.
/// `X1^2*X2 + 40*X1*X2^2 + 335*X2^3`.
std::string render_polynomial(const MonomialBasis& basis, std::span<const Rational> coeffs);

struct Relation {
  MonomialBasis basis;
  /// Primitive, first nonzero entry positive.
  std::vector<Integer> coeffs;
  /// The relation vanishes to O(q^verified_to) (absolute exponent).
  Rational verified_to = 0;
};

std::string to_string(const Relation& r);

struct RelationSearch {
  std::vector<Relation> relations;
  /// Null vectors of the row-limited matrix that fail on the remaining
  /// coefficients; never part of `relations`.
  std::vector<Relation> rejected;
  /// Matrix shape: candidate vectors x coefficient columns used.
  int vectors = 0;
  int columns = 0;
};

struct ComboResult {
  MonomialBasis basis;
  /// f = sum coeffs[m] * monomial m.
  std::vector<Rational> coeffs;
  Rational verified_to = 0;
  /// Eta-product text of each monomial with a nonzero coefficient, when
  /// requested and recognizable.
  std::vector<std::optional<std::string>> eta;
};

std::string to_string(const ComboResult& c);

struct ComboSearch {
  std::vector<ComboResult> combos;
  std::vector<ComboResult> rejected;
  int vectors = 0;
  int columns = 0;
};

/// Number of coefficient columns used for `monomials` candidate monomials.
int relation_columns(size_t monomials, int topshift);

RelationSearch findhom(std::span<const QSeries> xs, int n, int topshift = 0);
RelationSearch findnonhom(std::span<const QSeries> xs, int n, int topshift = 0);
ComboSearch findhomcombo(const QSeries& f, std::span<const QSeries> xs, int n, int topshift = 0,
                         bool eta_render = false);
ComboSearch findnonhomcombo(const QSeries& f, std::span<const QSeries> xs, int n,
                            int topshift = 0, bool eta_render = false);

/// A polynomial P(X, Y) with deg_X <= deg1, deg_Y <= deg2 and P(x, y) = 0.
/// With `check`, the inputs are cut to O(q^check) and the relation must
/// vanish to the resulting order (VerificationError otherwise). Throws
/// RecognitionError when no candidate survives.
Relation findpoly(const QSeries& x, const QSeries& y, int deg1, int deg2,
                  std::optional<int> check = std::nullopt);

}  // namespace qseries
