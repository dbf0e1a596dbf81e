#include <algorithm>

#include "qseries/error.hpp"
#include "qseries/prodconv.hpp"

namespace qseries {

namespace {

// prod (1-q^j)^{e} over the entries with the given sign of e.
Polynomial product_part(const std::map<int, Rational>& exps, int sign) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& [j, e] : exps) {
    if (sgn(e) != sign) continue;
    out = out * pow(Polynomial::one_minus_q_pow(j), static_cast<int>(to_long(abs(Rational(e)))));
  }
  return out;
}

// Degree bookkeeping of n0*neg == c*d0*pos, checked before multiplying out:
// on inputs that are no q-product the exponents grow exponentially.
bool degrees_match(const std::map<int, Rational>& exps, int deg_num, int deg_den, int order) {
  Integer pos = 0;
  Integer neg = 0;
  for (const auto& [j, e] : exps) {
    const Integer w = e.get_num() * j;
    (w > 0 ? pos : neg) += abs(w);
  }
  const Integer limit = Integer(order) * order;
  return pos + neg <= limit && deg_num + neg == deg_den + pos;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Cyclotomic polynomials normalised to constant term 1 (so Phi_1 = 1-q).
class Cyclotomics {
 public:
  const Polynomial& get(int n) {
    if (static_cast<int>(cache_.size()) <= n) cache_.resize(static_cast<size_t>(n) + 1);
    auto& slot = cache_[static_cast<size_t>(n)];
    if (slot.is_zero()) {
      // 1 - q^n = prod_{d|n} Phi_d
      Polynomial p = Polynomial::one_minus_q_pow(n);
      for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = exact_div(p, get(d));
      }
      slot = p;
    }
    return cache_[static_cast<size_t>(n)];
  }

 private:
  std::vector<Polynomial> cache_;
};

// Divides out every cyclotomic factor of p (p(0) != 0); returns the
// multiplicities and leaves the cofactor in p.
std::map<int, int> strip_cyclotomic(Polynomial& p, Cyclotomics& cyc) {
  std::map<int, int> mult;
  const int deg = p.degree();
  for (int n = 1; deg > 0 && p.degree() > 0; ++n) {
    const int phi = euler_phi(n);
    // phi(n) >= sqrt(n/2), so nothing beyond 2 deg^2 can divide p.
    if (n > 2 * deg * deg + 2) break;
    if (phi > p.degree()) continue;
    const Polynomial& c = cyc.get(n);
    for (;;) {
      auto [quot, rem] = divmod(p, c);
      if (!rem.is_zero()) break;
      p = quot;
      ++mult[n];
    }
  }
  return mult;
}

}  // namespace

QFactorResult qfactor(const RationalFunction& f, std::optional<int> T) {
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  if (num.is_zero()) throw DomainError("qfactor: zero rational function");
  const int vn = num.valuation();
  const int vd = den.valuation();
  if (vn < vd) throw DomainError("qfactor: negative q-valuation");
  const Polynomial n0 = shift(num, -vn);
  const Polynomial d0 = shift(den, -vd);
  const Rational c = n0[0] / d0[0];
  const int d = std::max(n0.degree(), d0.degree());
  const int order = T.value_or(4 * d + 3);
  if (order < 1) throw DomainError("qfactor: T must be >= 1");

  QFactorResult out;
  out.product.leading_coeff = c;
  out.product.q_valuation = vn - vd;
  out.remainder = RationalFunction(Polynomial::constant(1));

  // Series route: the exponents up to T must reproduce f exactly.
  const QSeries g = to_series(RationalFunction((1 / c) * n0, d0), order + 1);
  const QProduct p = prodmake(g, order + 1);
  if (p.all_integral && degrees_match(p.exponents, n0.degree(), d0.degree(), order)) {
    const Polynomial pos = product_part(p.exponents, 1);
    const Polynomial neg = product_part(p.exponents, -1);
    if (n0 * neg == c * d0 * pos) {
      out.product.exponents = p.exponents;
      return out;
    }
  }

  // Fallback: pull out the cyclotomic factors; the rest is the remainder.
  Cyclotomics cyc;
  Polynomial rn = (1 / n0[0]) * n0;
  Polynomial rd = (1 / d0[0]) * d0;
  std::map<int, int> mult;
  for (const auto& [k, m] : strip_cyclotomic(rn, cyc)) mult[k] += m;
  for (const auto& [k, m] : strip_cyclotomic(rd, cyc)) mult[k] -= m;
  // Phi_n = prod_{j|n} (1-q^j)^{mu(n/j)}
  std::map<int, Rational> exps;
  for (const auto& [n, m] : mult) {
    if (m == 0) continue;
    for (int j = 1; j <= n; ++j) {
      if (n % j == 0 && mobius(n / j) != 0) exps[j] += m * mobius(n / j);
    }
  }
  std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
  out.product.exponents = std::move(exps);
  out.remainder = RationalFunction(rn, rd);
  return out;
}

}  // namespace qseries
