#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/polynomial.hpp"
#include "qseries/qseries.hpp"

// A small calculator language for series, enough to transcribe the classical
// sessions:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | name | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// Names are `q`, `infinity`, loop variables bound by `sum`, user definitions,
// and builder calls (see evaluate()).

namespace qseries {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, name, negate, binary, call };

  Kind kind = Kind::number;
  Integer number = 0;
  std::string name;  // name or called function
  char op = 0;       // + - * / ^
  std::vector<ExprPtr> args;
  int line = 1;
  int column = 1;
};

/// Throws ParseError with the position of the offending token.
ExprPtr parse_expression(std::string_view text);

/// Fully parenthesised form, for diagnostics and tests.
std::string to_string(const Expr& e);

/// Named sub-expressions, expanded where the name is used.
using Definitions = std::map<std::string, ExprPtr>;

/// Value of `e` as a series known to O(q^T) (absolute). Builder calls may
/// carry their own smaller truncation argument, which then limits the result
/// in the usual way.
QSeries evaluate(const Expr& e, int T, const Definitions& defs = {});

/// Exact value of `e` as a rational function of q; accepts numbers, q,
/// arithmetic with integer powers, qbin, finite aqprod and sum.
RationalFunction evaluate_rational(const Expr& e, const Definitions& defs = {});

}  // namespace qseries
