#include "internal.hpp"
#include "qseries/error.hpp"
#include "qseries/prodconv.hpp"

namespace qseries {

namespace {

long require_valuation(const Rational& v) {
  if (!is_integer(v) || v < 0) {
    throw DomainError("leading power q^" + to_string(v) +
                      " is not a nonnegative integer power of q");
  }
  return to_long(v);
}

// acc *= (1 - q^j)^e for arbitrary rational e, via the binomial series.
void mul_binomial(std::vector<Rational>& acc, int j, const Rational& e) {
  const long T = static_cast<long>(acc.size());
  if (j >= T || e == 0) return;
  // Small integer powers by repeated passes; large ones (which arise from
  // series that are no genuine product) by the binomial series.
  const bool few_passes = is_integer(e) && abs(e) <= T / j + 1;
  if (few_passes && e > 0) {
    for (long r = 0; r < to_long(e); ++r) {
      for (long n = T - 1; n >= j; --n) acc[n] -= acc[n - j];
    }
    return;
  }
  if (few_passes) {
    for (long r = 0; r < -to_long(e); ++r) {
      for (long n = j; n < T; ++n) acc[n] += acc[n - j];
    }
    return;
  }
  // (1-x)^e = sum_k binom(e,k) (-x)^k
  std::vector<Rational> b;
  Rational term = 1;
  for (long k = 0; k * j < T; ++k) {
    if (k > 0) term *= -(e - (k - 1)) / Rational(k);
    b.push_back(term);
  }
  for (long n = T - 1; n >= 0; --n) {
    Rational s = 0;
    for (long k = 0; k * j <= n; ++k) {
      if (acc[n - k * j] != 0) s += b[k] * acc[n - k * j];
    }
    acc[n] = s;
  }
}

}  // namespace

QProduct prodmake(const QSeries& f, int T) {
  const auto [c, v, g] = detail::normalize_leading(f);
  QProduct out;
  out.leading_coeff = c;
  out.q_valuation = require_valuation(v);
  if (T < 1) throw DomainError("prodmake: T must be >= 1");
  if (T > g.trunc_order()) {
    throw TruncationError("prodmake: order " + std::to_string(T) + " exceeds the " +
                          std::to_string(g.trunc_order()) + " known coefficients");
  }
  // Logarithmic derivative: q f'/f = sum c_n q^n, c_n = -sum_{d|n} d b_d.
  std::vector<Rational> cn(static_cast<size_t>(T));
  std::vector<Rational> a(static_cast<size_t>(T));
  for (int n = 1; n < T; ++n) {
    Rational s = n * g[n];
    for (int j = 1; j < n; ++j) {
      if (g[n - j] != 0) s -= cn[j] * g[n - j];
    }
    cn[n] = s;
    Rational t = s;
    for (int d = 1; d < n; ++d) {
      if (n % d == 0) t -= d * a[d];
    }
    a[n] = t / n;
    if (a[n] != 0) {
      out.exponents[n] = -a[n];
      if (!is_integer(a[n])) out.all_integral = false;
    }
  }
  return out;
}

QSeries expand_qproduct(const QProduct& p, int T) {
  if (T < 1) throw DomainError("expand_qproduct: T must be >= 1");
  std::vector<Rational> acc(static_cast<size_t>(T));
  acc[0] = 1;
  for (const auto& [j, e] : p.exponents) {
    if (j < 1) throw DomainError("expand_qproduct: factor index must be >= 1");
    mul_binomial(acc, j, e);
  }
  for (auto& x : acc) x *= p.leading_coeff;
  return QSeries(std::move(acc), Rational(p.q_valuation));
}

}  // namespace qseries
