#include "qseries/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "qseries/error.hpp"

namespace qseries {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw DomainError("negative polynomial degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_q_pow(int j) {
  return Polynomial::constant(1) - Polynomial::monomial(1, j);
}

int Polynomial::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational Polynomial::operator[](int n) const {
  if (n < 0 || n > degree()) return 0;
  return coeffs_[static_cast<size_t>(n)];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(static_cast<size_t>(std::max(a.degree(), b.degree()) + 1));
  for (int i = 0; i <= a.degree(); ++i) v[i] += a.coeffs()[i];
  for (int i = 0; i <= b.degree(); ++i) v[i] += b.coeffs()[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> v(a.coeffs());
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(static_cast<size_t>(a.degree() + b.degree() + 1));
  Rational tmp;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      if (b.coeffs()[j] == 0) continue;
      tmp = a.coeffs()[i] * b.coeffs()[j];
      v[i + j] += tmp;
    }
  }
  return Polynomial(std::move(v));
}

Polynomial pow(const Polynomial& a, int e) {
  if (e < 0) throw DomainError("negative power of a polynomial");
  Polynomial result = Polynomial::constant(1);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial shift(const Polynomial& a, int k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<Rational> v = a.coeffs();
  if (k > 0) {
    v.insert(v.begin(), static_cast<size_t>(k), Rational(0));
  } else {
    if (a.valuation() < -k) throw DomainError("shift: division by q^k is not exact");
    v.erase(v.begin(), v.begin() + (-k));
  }
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree() + 1));
  const Rational& lead = b.leading();
  Rational tmp;
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational c = rem[i + b.degree()] / lead;
    quot[i] = c;
    if (c == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      tmp = c * b.coeffs()[j];
      rem[i + j] -= tmp;
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (1 / a.leading()) * a;
}

QSeries to_series(const Polynomial& p, int T) {
  if (T < 1) throw DomainError("trunc_order must be >= 1");
  std::vector<Rational> v(static_cast<size_t>(T));
  for (int i = 0; i <= p.degree() && i < T; ++i) v[i] = p.coeffs()[i];
  return QSeries(std::move(v));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= p.degree(); ++n) {
    const Rational& c = p.coeffs()[n];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
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
  return os.str();
}

RationalFunction::RationalFunction() : num_(), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = (1 / lead) * num_;
    den_ = (1 / lead) * den_;
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.denominator() == b.denominator()) {
    return {a.numerator() + b.numerator(), a.denominator()};
  }
  return {a.numerator() * b.denominator() + b.numerator() * a.denominator(),
          a.denominator() * b.denominator()};
}

RationalFunction operator-(const RationalFunction& a) { return {-a.numerator(), a.denominator()}; }

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.numerator() * b.numerator(), a.denominator() * b.denominator()};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.numerator().is_zero()) throw DomainError("rational function division by zero");
  return {a.numerator() * b.denominator(), a.denominator() * b.numerator()};
}

RationalFunction pow(const RationalFunction& a, int e) {
  if (e >= 0) return {pow(a.numerator(), e), pow(a.denominator(), e)};
  if (a.numerator().is_zero()) throw DomainError("negative power of zero");
  return {pow(a.denominator(), -e), pow(a.numerator(), -e)};
}

QSeries to_series(const RationalFunction& f, int T) {
  const Polynomial& n = f.numerator();
  const Polynomial& d = f.denominator();
  if (n.is_zero()) return QSeries::big_o(T);
  const int vn = n.valuation();
  const int vd = d.valuation();
  const int v = vn - vd;
  if (T - v < 1) return QSeries::big_o(T);
  const int rel = T - v;
  const QSeries ns = to_series(shift(n, -vn), rel);
  const QSeries ds = to_series(shift(d, -vd), rel);
  return series_shift(series_mul(ns, series_inv(ds)), v);
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) {
    return to_string((1 / f.denominator().leading()) * f.numerator());
  }
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace qseries
