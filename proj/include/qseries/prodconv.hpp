#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/polynomial.hpp"
#include "qseries/qseries.hpp"

// Series -> product conversions and their inverses.
//
// Products carry a monomial prefactor c*q^v that is split off before any
// recognition; their truncation orders are relative to that prefactor, so
// expanding a product found with order T gives c*q^v*(... + O(q^T)).

namespace qseries {

/// c * q^v * prod_j (1-q^j)^{a_j}
struct QProduct {
  Rational leading_coeff = 1;
  long q_valuation = 0;
  /// j -> exponent of (1-q^j); no zero entries.
  std::map<int, Rational> exponents;
  bool all_integral = true;

  friend bool operator==(const QProduct&, const QProduct&) = default;
};

/// Infinite-product form of f, exponents a_1..a_{T-1}. f is first written as
/// c*q^v*g with g(0) = 1 (v must be a nonnegative integer); T may not exceed
/// g's truncation order.
QProduct prodmake(const QSeries& f, int T);

/// c*q^v*prod(1-q^j)^{a_j} + O(q^{v+T}). Non-integral exponents use the
/// binomial series.
QSeries expand_qproduct(const QProduct& p, int T);

struct QFactorResult {
  QProduct product;
  /// Part left unfactored; constant 1 when the factorisation is complete.
  RationalFunction remainder;
};

/// Writes a rational function as c*q^v*prod(1-q^j)^{a_j} times a remainder.
/// The default order is 4d+3 (d the larger degree). The factorisation is
/// checked by exact polynomial arithmetic; when the series route fails the
/// cyclotomic part is extracted instead.
QFactorResult qfactor(const RationalFunction& f, std::optional<int> T = std::nullopt);

/// c * q^{-q_power} * prod_k eta(k tau)^{e_k}, where eta(k tau) stands for
/// q^{k/24} prod_n (1-q^{kn}).
struct EtaProduct {
  Rational leading_coeff = 1;
  Rational q_power = 0;
  std::map<int, long> exponents;
  /// False when the greedy search met a non-integral coefficient; the
  /// exponents found so far are kept.
  bool recognized = true;

  friend bool operator==(const EtaProduct&, const EtaProduct&) = default;
};

EtaProduct etamake(const QSeries& f, int T);
/// Relative to the monomial prefactor, like expand_qproduct.
QSeries expand_eta(const EtaProduct& p, int T);

/// c * q^v * prod JAC(a,b,infinity)^{e}, keys folded to 0 <= a <= b/2.
struct JacProduct {
  Rational leading_coeff = 1;
  long q_valuation = 0;
  std::map<std::pair<int, int>, Rational> factors;

  friend bool operator==(const JacProduct&, const JacProduct&) = default;
};

/// Throws RecognitionError when the exponent sequence has no period up to
/// max_period (default (T-1)/2) or a period class is not symmetric.
JacProduct jacprodmake(const QSeries& f, int T, std::optional<int> max_period = std::nullopt);

/// (q^a; q^b)_infinity^exponent
struct PochhammerPower {
  int a = 0;
  int b = 1;
  Rational exponent = 1;

  friend bool operator==(const PochhammerPower&, const PochhammerPower&) = default;
};

struct PochhammerProduct {
  Rational leading_coeff = 1;
  long q_valuation = 0;
  std::vector<PochhammerPower> factors;

  friend bool operator==(const PochhammerProduct&, const PochhammerProduct&) = default;
};

PochhammerProduct jac2prod(const JacProduct& j);
/// Replaces each JAC factor by its theta series; exponent denominators must
/// be 1 or 2.
QSeries jac2series(const JacProduct& j, int T);

/// Expansion of JAC(a, b, infinity) alone.
QSeries jac_series(int a, int b, int T);

std::string to_string(const QProduct& p);
std::string to_string(const EtaProduct& p);
std::string to_string(const JacProduct& p);
std::string to_string(const PochhammerProduct& p);

}  // namespace qseries
