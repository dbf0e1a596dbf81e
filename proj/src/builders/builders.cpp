#include "qseries/builders.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "qseries/error.hpp"

namespace qseries {

namespace {

struct Term {
  int coeff;  // +-1 (or small integer)
  Rational exp;
};

void require_trunc(int T) {
  if (T < 1) throw DomainError("truncation order must be >= 1");
}

void require_base(int b) {
  if (b < 1) throw DomainError("base exponent must be >= 1");
}

// Sign of s^k for s = +-1.
int sign_pow(int s, long k) { return (s < 0 && (k % 2 != 0)) ? -1 : 1; }

long integral_exp(const Rational& e) {
  if (!is_integer(e)) {
    throw DomainError("generated exponent " + to_string(e) + " is not an integer");
  }
  return to_long(e);
}

// Multiplies acc by (1 - s q^k) in place, truncated at acc.size().
void mul_one_minus(std::vector<Rational>& acc, int s, long k) {
  const long T = static_cast<long>(acc.size());
  if (k >= T) return;
  if (k == 0) {
    const Rational c = 1 - s;
    for (auto& x : acc) x *= c;
    return;
  }
  for (long n = T - 1; n >= k; --n) {
    if (acc[n - k] == 0) continue;
    if (s > 0) {
      acc[n] -= acc[n - k];
    } else {
      acc[n] += acc[n - k];
    }
  }
}

// Sums the terms produced for each shell index i = 0, 1, 2, ...; terms of the
// shells beyond the half-width are omitted. With no explicit half-width the
// smallest one is chosen whose omitted shells lie entirely at or beyond q^T.
// Shell exponents must grow eventually (quadratic weights guarantee this).
QSeries sum_shells(const std::function<std::vector<Term>(long)>& shell,
                   std::optional<int> half_width, int T) {
  require_trunc(T);
  std::vector<Rational> out(static_cast<size_t>(T));
  auto add = [&](const std::vector<Term>& terms) {
    for (const auto& t : terms) {
      if (t.exp < 0) {
        throw DomainError("negative exponent " + to_string(t.exp) +
                          " generated; Laurent output is unsupported");
      }
      const long e = integral_exp(t.exp);
      if (e < T) out[static_cast<size_t>(e)] += t.coeff;
    }
  };
  auto min_exp = [](const std::vector<Term>& terms) {
    Rational m = std::numeric_limits<long>::max();
    for (const auto& t : terms) m = std::min(m, t.exp);
    return m;
  };

  if (half_width) {
    if (*half_width < 0) throw DomainError("half-width must be >= 0");
    for (long i = 0; i <= *half_width; ++i) add(shell(i));
    return QSeries(std::move(out));
  }
  add(shell(0));
  Rational prev = min_exp(shell(0));
  for (long i = 1;; ++i) {
    auto terms = shell(i);
    const Rational m = min_exp(terms);
    if (m >= T && m >= prev && i > 2) break;
    add(terms);
    prev = m;
  }
  return QSeries(std::move(out));
}

}  // namespace

QSeries aqprod(const QMonomial& a, int base_exp, int n, int T) {
  require_trunc(T);
  require_base(base_exp);
  if (n < 0) throw DomainError("aqprod: n must be >= 0");
  const long e = integral_exp(a.exp);
  std::vector<Rational> acc(static_cast<size_t>(T));
  acc[0] = 1;
  for (long i = 0; i < n; ++i) mul_one_minus(acc, a.sign, e + i * base_exp);
  return QSeries(std::move(acc));
}

QSeries aqprod_inf(const QMonomial& a, int base_exp, int T) {
  require_trunc(T);
  if (base_exp < 1) throw DomainError("aqprod_inf: infinitely many constant factors");
  const long e = integral_exp(a.exp);
  std::vector<Rational> acc(static_cast<size_t>(T));
  acc[0] = 1;
  for (long k = e; k < T; k += base_exp) mul_one_minus(acc, a.sign, k);
  return QSeries(std::move(acc));
}

Polynomial qbin_polynomial(int m, int n) {
  if (m < 0 || n < 0 || m > n) return {};
  // row[j] = [i choose j]_q for the current i, updated in place (j descending).
  std::vector<Polynomial> row(static_cast<size_t>(m) + 1);
  row[0] = Polynomial::constant(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      row[j] = row[j - 1] + shift(row[j], j);
    }
  }
  return row[m];
}

QSeries qbin(int m, int n, std::optional<int> T) {
  const Polynomial p = qbin_polynomial(m, n);
  return to_series(p, T.value_or(std::max(p.degree() + 1, 1)));
}

QSeries etaq(int k, int T) {
  require_trunc(T);
  if (k < 1) throw DomainError("etaq: k must be >= 1");
  std::vector<Rational> out(static_cast<size_t>(T));
  out[0] = 1;
  for (long n = 1;; ++n) {
    const long lo = k * (n * (3 * n - 1) / 2);
    const long hi = k * (n * (3 * n + 1) / 2);
    if (lo >= T) break;
    const int s = (n % 2 == 0) ? 1 : -1;
    out[static_cast<size_t>(lo)] += s;
    if (hi < T) out[static_cast<size_t>(hi)] += s;
  }
  return QSeries(std::move(out));
}

QSeries theta(const QMonomial& z, int base_exp, std::optional<int> half_width, int T) {
  require_base(base_exp);
  auto shell = [&](long i) {
    std::vector<Term> terms;
    for (long j : {i, -i}) {
      terms.push_back({sign_pow(z.sign, j), z.exp * j + Rational(base_exp * j * j)});
      if (i == 0) break;
    }
    return terms;
  };
  return sum_shells(shell, half_width, T);
}

QSeries theta2(int T) {
  require_trunc(T);
  std::vector<Rational> out(static_cast<size_t>(T));
  for (long n = 0; n * (n + 1) < T; ++n) out[static_cast<size_t>(n * (n + 1))] = 2;
  return QSeries(std::move(out), Rational(1, 4));
}

QSeries theta3(int T) {
  require_trunc(T);
  std::vector<Rational> out(static_cast<size_t>(T));
  out[0] = 1;
  for (long n = 1; n * n < T; ++n) out[static_cast<size_t>(n * n)] = 2;
  return QSeries(std::move(out));
}

QSeries theta4(int T) {
  require_trunc(T);
  std::vector<Rational> out(static_cast<size_t>(T));
  out[0] = 1;
  for (long n = 1; n * n < T; ++n) out[static_cast<size_t>(n * n)] = (n % 2 == 0) ? 2 : -2;
  return QSeries(std::move(out));
}

QSeries jacprod(int a, int b, int T) {
  if (!(0 < a && a < b)) throw DomainError("jacprod: need 0 < a < b");
  return series_mul(aqprod_inf(QMonomial::q_pow(a), b, T),
                    aqprod_inf(QMonomial::q_pow(b - a), b, T));
}

QSeries tripleprod(const QMonomial& z, int base_exp, std::optional<int> half_width, int T) {
  require_base(base_exp);
  auto shell = [&](long i) {
    std::vector<Term> terms;
    for (long n : {i, -i}) {
      const int s = ((n % 2 == 0) ? 1 : -1) * sign_pow(z.sign, n);
      terms.push_back({s, z.exp * n + Rational(base_exp * n * (n - 1) / 2)});
      if (i == 0) break;
    }
    return terms;
  };
  return sum_shells(shell, half_width, T);
}

QSeries tripleprod(const ThetaSpec& spec, std::optional<int> half_width) {
  return tripleprod(spec.z, spec.base_exp, half_width, spec.trunc);
}

QSeries quinprod(const QMonomial& z, int base_exp, std::optional<int> half_width, int T) {
  require_base(base_exp);
  // (-z)^k = (-s)^k q^{k e}
  const int neg_s = -z.sign;
  auto shell = [&](long i) {
    std::vector<Term> terms;
    for (long m : {i, -i}) {
      const Rational w(base_exp * m * (3 * m + 1) / 2);
      terms.push_back({sign_pow(neg_s, -3 * m), z.exp * (-3 * m) + w});
      terms.push_back({-sign_pow(neg_s, 3 * m + 1), z.exp * (3 * m + 1) + w});
      if (i == 0) break;
    }
    return terms;
  };
  return sum_shells(shell, half_width, T);
}

QSeries quinprod(const ThetaSpec& spec, std::optional<int> half_width) {
  return quinprod(spec.z, spec.base_exp, half_width, spec.trunc);
}

QSeries winquist(const QMonomial& a, const QMonomial& b, int base_exp,
                 std::optional<int> half_width, int T) {
  require_base(base_exp);
  auto term = [&](long n, long m) {
    std::vector<Term> terms;
    const int s = ((n + m) % 2 == 0) ? 1 : -1;
    const Rational w(base_exp * (3 * n * (n + 1) / 2 + m * (3 * m + 1) / 2));
    // (a^{ka1} - a^{ka2}) (b^{kb1} - b^{kb2})
    auto product = [&](long ka1, long ka2, long kb1, long kb2) {
      for (auto [ka, sa] : {std::pair{ka1, 1}, std::pair{ka2, -1}}) {
        for (auto [kb, sb] : {std::pair{kb1, 1}, std::pair{kb2, -1}}) {
          const int c = s * sa * sb * sign_pow(a.sign, ka) * sign_pow(b.sign, kb);
          terms.push_back({c, a.exp * ka + b.exp * kb + w});
        }
      }
    };
    product(-3 * n, 3 * n + 3, -3 * m, 3 * m + 1);
    product(-3 * m + 1, 3 * m + 2, 3 * n + 2, -3 * n - 1);
    return terms;
  };
  // Shell i holds the (n, m) pairs with max(n, |m|) = i.
  auto shell = [&](long i) {
    std::vector<Term> terms;
    auto append = [&](long n, long m) {
      auto t = term(n, m);
      terms.insert(terms.end(), t.begin(), t.end());
    };
    for (long m = -i; m <= i; ++m) append(i, m);
    for (long n = 0; n < i; ++n) {
      append(n, i);
      if (i != 0) append(n, -i);
    }
    return terms;
  };
  return sum_shells(shell, half_width, T);
}

std::string to_string(const PochhammerFactor& f) {
  std::string base = f.base_exp == 1 ? "q" : "q^" + std::to_string(f.base_exp);
  std::string out = "(" + to_string(f.a) + ";" + base + ")_infinity";
  if (f.power != 1) out += "^" + (f.power < 0 ? "(" + std::to_string(f.power) + ")"
                                              : std::to_string(f.power));
  return out;
}

QSeries expand_pochhammer(std::span<const PochhammerFactor> factors, int T) {
  require_trunc(T);
  QSeries acc = QSeries::constant(1, T);
  for (const auto& f : factors) {
    acc = series_mul(acc, series_pow(aqprod_inf(f.a, f.base_exp, T), f.power));
  }
  return acc;
}

std::vector<PochhammerFactor> quinprod_factors(const QMonomial& z, int base_exp) {
  require_base(base_exp);
  const int b = base_exp;
  auto mono = [](int sign, const Rational& e) {
    if (e < 0) throw DomainError("quinprod_factors: factor with negative q-exponent");
    return QMonomial(sign, e);
  };
  return {
      {mono(-z.sign, z.exp), b, 1},
      {mono(-z.sign, Rational(b) - z.exp), b, 1},
      {mono(1, 2 * z.exp + b), 2 * b, 1},
      {mono(1, Rational(b) - 2 * z.exp), 2 * b, 1},
      {mono(1, Rational(b)), b, 1},
  };
}

std::vector<PochhammerFactor> winquist_factors(const QMonomial& a, const QMonomial& b,
                                               int base_exp) {
  require_base(base_exp);
  const int B = base_exp;
  const int sab = a.sign * b.sign;
  auto mono = [](int sign, const Rational& e) {
    if (e < 0) throw DomainError("winquist_factors: factor with negative q-exponent");
    return QMonomial(sign, e);
  };
  return {
      {mono(a.sign, a.exp), B, 1},
      {mono(a.sign, Rational(B) - a.exp), B, 1},
      {mono(b.sign, b.exp), B, 1},
      {mono(b.sign, Rational(B) - b.exp), B, 1},
      {mono(sab, a.exp + b.exp), B, 1},
      {mono(sab, Rational(B) - a.exp - b.exp), B, 1},
      {mono(sab, a.exp - b.exp), B, 1},
      {mono(sab, Rational(B) + b.exp - a.exp), B, 1},
      {QMonomial(1, Rational(B)), B, 2},
  };
}

}  // namespace qseries
