#include "internal.hpp"
#include "qseries/builders.hpp"
#include "qseries/error.hpp"
#include "qseries/prodconv.hpp"

namespace qseries {

EtaProduct etamake(const QSeries& f, int T) {
  const auto [c, v, g] = detail::normalize_leading(f);
  if (T < 1) throw DomainError("etamake: T must be >= 1");
  if (T > g.trunc_order()) {
    throw TruncationError("etamake: order " + std::to_string(T) + " exceeds the " +
                          std::to_string(g.trunc_order()) + " known coefficients");
  }
  EtaProduct out;
  out.leading_coeff = c;
  QSeries residual = g.truncated(T);
  Rational weight = 0;  // sum e_k k / 24
  for (int k = 1; k < T; ++k) {
    const Rational ck = residual[k];
    if (ck == 0) continue;
    if (!is_integer(ck)) {
      out.recognized = false;
      break;
    }
    const long e = to_long(ck);
    residual = series_mul(residual, series_pow(etaq(k, T), e));
    out.exponents[k] = -e;
    weight += Rational(-e * k) / 24;
  }
  out.q_power = weight - v;
  return out;
}

QSeries expand_eta(const EtaProduct& p, int T) {
  if (T < 1) throw DomainError("expand_eta: T must be >= 1");
  QSeries acc = QSeries::constant(p.leading_coeff, T);
  Rational weight = 0;
  for (const auto& [k, e] : p.exponents) {
    acc = series_mul(acc, series_pow(etaq(k, T), e));
    weight += Rational(e * k) / 24;
  }
  return series_shift(acc, weight - p.q_power);
}

}  // namespace qseries
