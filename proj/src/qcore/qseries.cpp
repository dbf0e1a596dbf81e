#include "qseries/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "qseries/error.hpp"

namespace qseries {

namespace {

std::vector<int> nonzero_indices(std::span<const Coefficient> c) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[i] != 0) idx.push_back(i);
  }
  return idx;
}

int checked_offset(const Rational& d) {
  if (!is_integer(d)) {
    throw DomainError("prefactor exponents differ by the non-integer " + to_string(d));
  }
  return static_cast<int>(to_long(d));
}

}  // namespace

QMonomial::QMonomial(int s, Rational e) : sign(s), exp(std::move(e)) {
  if (sign != 1 && sign != -1) throw DomainError("monomial sign must be +1 or -1");
  if (exp < 0) throw DomainError("monomial exponent must be nonnegative");
}

std::string to_string(const QMonomial& m) {
  std::string body;
  if (m.exp == 0) {
    body = "1";
  } else if (m.exp == 1) {
    body = "q";
  } else if (is_integer(m.exp)) {
    body = "q^" + to_string(m.exp);
  } else {
    body = "q^(" + to_string(m.exp) + ")";
  }
  return m.sign < 0 ? "-" + body : body;
}

QSeries::QSeries() : coeffs_(1), prefactor_(0) {}

QSeries::QSeries(std::vector<Coefficient> coeffs, Rational prefactor_exp)
    : coeffs_(std::move(coeffs)), prefactor_(std::move(prefactor_exp)) {
  if (coeffs_.empty()) throw DomainError("a series needs trunc_order >= 1");
  canonicalize();
}

void QSeries::canonicalize() {
  size_t lead = 0;
  Rational p = prefactor_;
  while (p < 0 && lead + 1 < coeffs_.size() && coeffs_[lead] == 0) {
    ++lead;
    p += 1;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    prefactor_ = p;
  }
  if (prefactor_ >= 1) {
    const long k = to_long(floor(prefactor_));
    coeffs_.insert(coeffs_.begin(), static_cast<size_t>(k), Coefficient(0));
    prefactor_ -= k;
  }
}

QSeries QSeries::constant(const Coefficient& c, int trunc_order) {
  if (trunc_order < 1) throw DomainError("trunc_order must be >= 1");
  std::vector<Coefficient> v(static_cast<size_t>(trunc_order));
  v[0] = c;
  return QSeries(std::move(v));
}

QSeries QSeries::monomial(const Coefficient& c, const Rational& e, int trunc_order) {
  if (trunc_order < 1) throw DomainError("trunc_order must be >= 1");
  std::vector<Coefficient> v(static_cast<size_t>(trunc_order));
  v[0] = c;
  return QSeries(std::move(v), e);
}

QSeries QSeries::big_o(const Rational& order) {
  const Integer fl = floor(order);
  if (fl >= 1) {
    return QSeries(std::vector<Coefficient>(static_cast<size_t>(to_long(fl))),
                   order - Rational(fl));
  }
  return QSeries(std::vector<Coefficient>(1), order - 1);
}

const Coefficient& QSeries::operator[](int n) const {
  if (n < 0 || n >= trunc_order()) {
    throw TruncationError("coefficient index " + std::to_string(n) +
                          " is beyond the truncation O(q^" + std::to_string(trunc_order()) +
                          ")");
  }
  return coeffs_[static_cast<size_t>(n)];
}

int QSeries::valuation() const {
  for (int i = 0; i < trunc_order(); ++i) {
    if (coeffs_[static_cast<size_t>(i)] != 0) return i;
  }
  return trunc_order();
}

QSeries QSeries::truncated(int n) const {
  if (n < 1) throw DomainError("cannot truncate below one coefficient");
  if (n >= trunc_order()) return *this;
  return QSeries(std::vector<Coefficient>(coeffs_.begin(), coeffs_.begin() + n), prefactor_);
}

QSeries QSeries::truncated_abs(const Rational& order) const {
  const Integer keep = ceil(order - prefactor_);
  if (keep >= trunc_order()) return *this;
  if (keep < 1) return big_o(std::min(order, abs_order()));
  return truncated(static_cast<int>(to_long(keep)));
}

QSeries QSeries::stripped() const {
  const int v = valuation();
  if (v == 0 || v == trunc_order()) return *this;
  return QSeries(Raw{}, std::vector<Coefficient>(coeffs_.begin() + v, coeffs_.end()),
                 prefactor_ + v);
}

Coefficient QSeries::coeff_at(const Rational& e) const {
  const Rational d = e - prefactor_;
  if (d >= trunc_order()) {
    throw TruncationError("exponent " + to_string(e) + " is beyond the truncation O(q^" +
                          to_string(abs_order()) + ")");
  }
  if (d < 0 || !is_integer(d)) return 0;
  return coeffs_[static_cast<size_t>(to_long(d))];
}

bool QSeries::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Coefficient& c) { return is_integer(c); });
}

QSeries series_add(const QSeries& f, const QSeries& g) {
  const int d = checked_offset(g.prefactor_exp() - f.prefactor_exp());
  const Rational base = d >= 0 ? f.prefactor_exp() : g.prefactor_exp();
  const int off_f = d >= 0 ? 0 : -d;
  const int off_g = d >= 0 ? d : 0;
  const int T = std::min(f.trunc_order() + off_f, g.trunc_order() + off_g);
  if (T < 1) return QSeries::big_o(base + T);
  std::vector<Coefficient> out(static_cast<size_t>(T));
  for (int i = 0; i + off_f < T && i < f.trunc_order(); ++i) out[i + off_f] += f.coeffs()[i];
  for (int i = 0; i + off_g < T && i < g.trunc_order(); ++i) out[i + off_g] += g.coeffs()[i];
  return QSeries(std::move(out), base);
}

QSeries series_neg(const QSeries& f) { return series_scale(f, -1); }

QSeries series_sub(const QSeries& f, const QSeries& g) { return series_add(f, series_neg(g)); }

QSeries series_scale(const QSeries& f, const Coefficient& c) {
  std::vector<Coefficient> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) x *= c;
  return QSeries(std::move(out), f.prefactor_exp());
}

QSeries series_shift(const QSeries& f, const Rational& e) {
  const QSeries s = f.stripped();
  return QSeries(std::vector<Coefficient>(s.coeffs().begin(), s.coeffs().end()),
                 s.prefactor_exp() + e);
}

QSeries series_mul(const QSeries& f, const QSeries& g) {
  const bool fz = f.is_zero();
  const bool gz = g.is_zero();
  if (fz && gz) return QSeries::big_o(f.abs_order() + g.abs_order());
  if (fz) return QSeries::big_o(f.abs_order() + g.prefactor_exp() + g.valuation());
  if (gz) return QSeries::big_o(g.abs_order() + f.prefactor_exp() + f.valuation());

  const QSeries a = f.stripped();
  const QSeries b = g.stripped();
  const int T = std::min(a.trunc_order(), b.trunc_order());
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  const std::vector<int> bnz = nonzero_indices(bc.first(static_cast<size_t>(T)));
  std::vector<Coefficient> out(static_cast<size_t>(T));
  Coefficient tmp;
  for (int i = 0; i < T; ++i) {
    if (ac[i] == 0) continue;
    for (int j : bnz) {
      if (i + j >= T) break;
      tmp = ac[i] * bc[j];
      out[i + j] += tmp;
    }
  }
  return QSeries(std::move(out), a.prefactor_exp() + b.prefactor_exp());
}

QSeries series_reciprocal(const QSeries& f) {
  if (f.is_zero()) throw DomainError("division by a series with no nonzero known coefficient");
  const QSeries s = f.stripped();
  const auto c = s.coeffs();
  const int T = s.trunc_order();
  const Coefficient inv0 = 1 / Rational(c[0]);
  std::vector<int> nz = nonzero_indices(c);
  std::vector<Coefficient> g(static_cast<size_t>(T));
  g[0] = inv0;
  Coefficient acc;
  Coefficient tmp;
  for (int n = 1; n < T; ++n) {
    acc = 0;
    for (int j : nz) {
      if (j == 0) continue;
      if (j > n) break;
      tmp = c[j] * g[n - j];
      acc += tmp;
    }
    g[n] = -acc * inv0;
  }
  return QSeries(std::move(g), -s.prefactor_exp());
}

QSeries series_inv(const QSeries& f) {
  if (f.coeffs()[0] == 0) throw DomainError("series_inv: zero constant term");
  return series_reciprocal(f);
}

QSeries series_div(const QSeries& f, const QSeries& g) {
  return series_mul(f, series_reciprocal(g));
}

QSeries series_pow(const QSeries& f, long e) {
  if (e < 0) return series_pow(series_inv(f), -e);
  QSeries result = QSeries::constant(1, f.stripped().trunc_order());
  if (e == 0) return result;
  QSeries base = f;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : series_mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

QSeries series_sqrt(const QSeries& f) {
  const QSeries s = f.stripped();
  const auto c = s.coeffs();
  if (c[0] != 1) throw DomainError("series_sqrt: leading coefficient must be 1");
  const int T = s.trunc_order();
  std::vector<Coefficient> g(static_cast<size_t>(T));
  g[0] = 1;
  Coefficient acc;
  Coefficient tmp;
  for (int n = 1; n < T; ++n) {
    acc = c[n];
    for (int j = 1; j < n; ++j) {
      if (g[j] == 0 || g[n - j] == 0) continue;
      tmp = g[j] * g[n - j];
      acc -= tmp;
    }
    g[n] = acc / 2;
  }
  return QSeries(std::move(g), s.prefactor_exp() / 2);
}

QSeries substitute_power(const QSeries& f, int k) {
  if (k < 1) throw DomainError("substitute_power: k must be >= 1");
  if (k == 1) return f;
  const int T = k * f.trunc_order();
  std::vector<Coefficient> out(static_cast<size_t>(T));
  for (int n = 0; n < f.trunc_order(); ++n) out[static_cast<size_t>(k * n)] = f.coeffs()[n];
  return QSeries(std::move(out), f.prefactor_exp() * k);
}

QSeries q_derivative(const QSeries& f) {
  if (f.prefactor_exp() != 0) throw DomainError("q_derivative: prefactor must be 0");
  std::vector<Coefficient> out(f.coeffs().begin(), f.coeffs().end());
  for (size_t n = 0; n < out.size(); ++n) out[n] *= static_cast<long>(n);
  return QSeries(std::move(out));
}

QSeries sift(const QSeries& s, int n, int k) {
  if (s.prefactor_exp() != 0) throw DomainError("sift: prefactor must be 0");
  if (n < 1) throw DomainError("sift: modulus must be >= 1");
  if (k < 0 || k >= n) throw DomainError("sift: residue must lie in [0, n)");
  const int T = s.trunc_order();
  const int out_t = (T - k + n - 1) / n;
  if (T <= k || out_t < 1) throw TruncationError("sift: residue lies beyond the truncation");
  std::vector<Coefficient> out(static_cast<size_t>(out_t));
  for (int i = 0; i < out_t; ++i) out[i] = s.coeffs()[n * i + k];
  return QSeries(std::move(out));
}

Coefficient coeff(const QSeries& f, int n) { return f[n]; }

std::string to_string(const QSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n < f.trunc_order(); ++n) {
    const Coefficient& c = f.coeffs()[n];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Coefficient mag = neg ? Coefficient(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (n == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    os << 'q';
    if (n > 1) os << '^' << n;
  }
  if (!first) os << " + ";
  os << "O(q^" << f.trunc_order() << ')';
  if (f.prefactor_exp() == 0) return os.str();
  return "q^(" + to_string(f.prefactor_exp()) + ")*(" + os.str() + ")";
}

}  // namespace qseries
