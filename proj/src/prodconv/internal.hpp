#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qseries/qseries.hpp"

namespace qseries::detail {

/// f = c * q^v * g with g(0) = 1 and g's prefactor 0.
struct Normalized {
  Rational c;
  Rational v;
  QSeries g;
};

Normalized normalize_leading(const QSeries& f);

/// Text for c * q^{qpow} * prod factor^exponent, positive exponents over
/// negative ones. A negative q-power is listed first in the denominator.
std::string render_product(const Rational& c, const Rational& qpow,
                           const std::vector<std::pair<std::string, Rational>>& factors);

}  // namespace qseries::detail
