#include <functional>
#include <set>
#include <variant>

#include "qseries/builders.hpp"
#include "qseries/error.hpp"
#include "qseries/expression.hpp"
#include "qseries/prodconv.hpp"

namespace qseries {

namespace {

// c * q^e, kept exact until it meets a series.
struct Mono {
  Rational c;
  Rational e;
};
struct Infinity {};

using Value = std::variant<Rational, Mono, QSeries, Infinity>;

Value make_mono(const Rational& c, const Rational& e) {
  if (e == 0 || c == 0) return c;
  return Mono{c, e};
}

[[noreturn]] void fail_at(const Expr& e, const std::string& msg) {
  throw ParseError(msg, e.line, e.column);
}

QSeries mono_series(const Rational& c, const Rational& e, int T) {
  if (c == 0 || e >= T) return QSeries::big_o(Rational(T));
  return QSeries::monomial(c, e, static_cast<int>(to_long(ceil(Rational(T - e)))));
}

class Evaluator {
 public:
  Evaluator(int T, const Definitions& defs) : T_(T), defs_(defs) {
    if (T < 1) throw DomainError("truncation order must be >= 1");
  }

  QSeries series(const Expr& e) { return as_series(eval(e)); }

 private:
  QSeries as_series(const Value& v) const {
    if (const auto* r = std::get_if<Rational>(&v)) return QSeries::constant(*r, T_);
    if (const auto* m = std::get_if<Mono>(&v)) return mono_series(m->c, m->e, T_);
    if (const auto* s = std::get_if<QSeries>(&v)) return *s;
    throw DomainError("'infinity' is only meaningful as a product length");
  }

  Rational scalar(const Expr& e) {
    const Value v = eval(e);
    if (const auto* r = std::get_if<Rational>(&v)) return *r;
    fail_at(e, "expected a number");
  }

  long integer(const Expr& e) {
    const Rational r = scalar(e);
    if (!is_integer(r)) fail_at(e, "expected an integer, got " + to_string(r));
    return to_long(r);
  }

  int small_int(const Expr& e) { return static_cast<int>(integer(e)); }

  // +-q^k argument of a product or theta function.
  QMonomial monomial_arg(const Expr& e) {
    const Value v = eval(e);
    Rational c;
    Rational x = 0;
    if (const auto* r = std::get_if<Rational>(&v)) {
      c = *r;
    } else if (const auto* m = std::get_if<Mono>(&v)) {
      c = m->c;
      x = m->e;
    } else {
      fail_at(e, "expected a signed power of q such as -q^2");
    }
    if (c != 1 && c != -1) fail_at(e, "expected a signed power of q such as -q^2");
    if (x < 0) fail_at(e, "negative power of q not allowed here");
    return QMonomial(c > 0 ? 1 : -1, x);
  }

  // Base of a product: an integer k or q^k.
  int base_arg(const Expr& e) {
    const Value v = eval(e);
    Rational k;
    if (const auto* r = std::get_if<Rational>(&v)) {
      k = *r;
    } else if (const auto* m = std::get_if<Mono>(&v); m && m->c == 1) {
      k = m->e;
    } else {
      fail_at(e, "expected a base k or q^k");
    }
    if (!is_integer(k) || k < 1) fail_at(e, "base must be a positive integer power of q");
    return static_cast<int>(to_long(k));
  }

  int trunc_arg(const Expr& call, size_t idx) {
    return idx < call.args.size() ? small_int(*call.args[idx]) : T_;
  }

  std::optional<int> width_arg(const Expr& call, size_t idx) {
    if (idx < call.args.size()) return small_int(*call.args[idx]);
    return std::nullopt;
  }

  static void arity(const Expr& call, size_t lo, size_t hi) {
    const size_t n = call.args.size();
    if (n < lo || n > hi) {
      fail_at(call, call.name + " takes " +
                        (lo == hi ? std::to_string(lo)
                                  : std::to_string(lo) + " to " + std::to_string(hi)) +
                        " arguments, got " + std::to_string(n));
    }
  }

  Value add(const Value& a, const Value& b, int sign) {
    const auto* ra = std::get_if<Rational>(&a);
    const auto* rb = std::get_if<Rational>(&b);
    if (ra && rb) return Rational(*ra + sign * *rb);
    const auto* ma = std::get_if<Mono>(&a);
    const auto* mb = std::get_if<Mono>(&b);
    if (ma && mb && ma->e == mb->e) return make_mono(ma->c + sign * mb->c, ma->e);
    const QSeries sb = as_series(b);
    return sign > 0 ? series_add(as_series(a), sb) : series_sub(as_series(a), sb);
  }

  Value mul(const Value& a, const Value& b) {
    if (std::holds_alternative<Infinity>(a) || std::holds_alternative<Infinity>(b)) {
      throw DomainError("'infinity' is only meaningful as a product length");
    }
    auto mono_of = [](const Value& v) -> std::optional<Mono> {
      if (const auto* r = std::get_if<Rational>(&v)) return Mono{*r, 0};
      if (const auto* m = std::get_if<Mono>(&v)) return *m;
      return std::nullopt;
    };
    const auto ma = mono_of(a);
    const auto mb = mono_of(b);
    if (ma && mb) return make_mono(ma->c * mb->c, ma->e + mb->e);
    if (ma) return series_scale(series_shift(std::get<QSeries>(b), ma->e), ma->c);
    if (mb) return series_scale(series_shift(std::get<QSeries>(a), mb->e), mb->c);
    return series_mul(std::get<QSeries>(a), std::get<QSeries>(b));
  }

  Value reciprocal(const Value& v) {
    if (const auto* r = std::get_if<Rational>(&v)) {
      if (*r == 0) throw DomainError("division by zero");
      return Rational(1 / *r);
    }
    if (const auto* m = std::get_if<Mono>(&v)) return make_mono(1 / m->c, -m->e);
    return series_reciprocal(as_series(v));
  }

  Value power(const Expr& node, const Value& base, const Rational& x) {
    if (const auto* r = std::get_if<Rational>(&base)) {
      if (!is_integer(x)) fail_at(node, "non-integral power of a number");
      const long n = to_long(x);
      if (*r == 0 && n < 0) throw DomainError("division by zero");
      Rational out = 1;
      const Rational b = n < 0 ? Rational(1 / *r) : *r;
      for (long i = 0; i < (n < 0 ? -n : n); ++i) out *= b;
      return out;
    }
    if (const auto* m = std::get_if<Mono>(&base)) {
      if (!is_integer(x) && m->c != 1) fail_at(node, "non-integral power of a coefficient");
      const auto c = std::get<Rational>(power(node, m->c, is_integer(x) ? x : Rational(0)));
      return make_mono(c, m->e * x);
    }
    QSeries s = as_series(base);
    const Integer den = x.get_den();
    if (den != 1 && den != 2) fail_at(node, "series powers must be integers or halves");
    const long num = to_long(Integer(x.get_num()));
    if (den == 2) s = series_sqrt(s);
    return num < 0 ? series_pow(series_reciprocal(s), -num) : series_pow(s, num);
  }

  Value lookup(const Expr& e) {
    if (e.name == "q") return Mono{1, 1};
    if (e.name == "infinity") return Infinity{};
    if (auto it = bound_.find(e.name); it != bound_.end()) return it->second;
    if (auto it = defs_.find(e.name); it != defs_.end()) {
      if (auto c = cache_.find(e.name); c != cache_.end()) return c->second;
      if (!active_.insert(e.name).second) fail_at(e, "definition of '" + e.name + "' refers to itself");
      Value v = eval(*it->second);
      active_.erase(e.name);
      cache_.emplace(e.name, v);
      return v;
    }
    fail_at(e, "unknown name '" + e.name + "'");
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::number:
        return Rational(e.number);
      case Expr::Kind::name:
        return lookup(e);
      case Expr::Kind::negate:
        return mul(Rational(-1), eval(*e.args[0]));
      case Expr::Kind::binary: {
        if (e.op == '^') {
          const Value base = eval(*e.args[0]);
          return power(e, base, scalar(*e.args[1]));
        }
        const Value a = eval(*e.args[0]);
        const Value b = eval(*e.args[1]);
        switch (e.op) {
          case '+':
            return add(a, b, 1);
          case '-':
            return add(a, b, -1);
          case '*':
            return mul(a, b);
          default:
            return mul(a, reciprocal(b));
        }
      }
      case Expr::Kind::call:
        return call(e);
    }
    fail_at(e, "bad expression");
  }

  Value call(const Expr& c) {
    const std::string& f = c.name;
    const auto& a = c.args;
    if (f == "aqprod") {
      arity(c, 3, 4);
      const QMonomial z = monomial_arg(*a[0]);
      const int b = base_arg(*a[1]);
      const int T = trunc_arg(c, 3);
      if (std::holds_alternative<Infinity>(eval(*a[2]))) return aqprod_inf(z, b, T);
      return aqprod(z, b, small_int(*a[2]), T);
    }
    if (f == "qbin") {
      arity(c, 2, 3);
      return to_series(qbin_polynomial(small_int(*a[0]), small_int(*a[1])), trunc_arg(c, 2));
    }
    if (f == "etaq") {
      arity(c, 1, 2);
      return etaq(base_arg(*a[0]), trunc_arg(c, 1));
    }
    if (f == "theta") {
      arity(c, 2, 4);
      return theta(monomial_arg(*a[0]), base_arg(*a[1]), width_arg(c, 2), trunc_arg(c, 3));
    }
    if (f == "theta2" || f == "theta3" || f == "theta4") {
      // theta3(T) or theta3(q^k, T): the series in q^k.
      arity(c, 0, 2);
      size_t t_idx = 0;
      int k = 1;
      if (!a.empty() && (a.size() == 2 || std::holds_alternative<Mono>(eval(*a[0])))) {
        k = base_arg(*a[0]);
        t_idx = 1;
      }
      const int T = trunc_arg(c, t_idx);
      const int inner = k == 1 ? T : T / k + 1;
      const QSeries s = f == "theta2" ? theta2(inner) : f == "theta3" ? theta3(inner) : theta4(inner);
      return k == 1 ? s : substitute_power(s, k).truncated_abs(T);
    }
    if (f == "jacprod") {
      arity(c, 2, 3);
      return jacprod(small_int(*a[0]), small_int(*a[1]), trunc_arg(c, 2));
    }
    if (f == "tripleprod" || f == "quinprod") {
      arity(c, 2, 4);
      const QMonomial z = monomial_arg(*a[0]);
      const int b = base_arg(*a[1]);
      return f == "tripleprod" ? tripleprod(z, b, width_arg(c, 2), trunc_arg(c, 3))
                               : quinprod(z, b, width_arg(c, 2), trunc_arg(c, 3));
    }
    if (f == "winquist") {
      arity(c, 3, 5);
      return winquist(monomial_arg(*a[0]), monomial_arg(*a[1]), base_arg(*a[2]), width_arg(c, 3),
                      trunc_arg(c, 4));
    }
    if (f == "JAC") {
      arity(c, 2, 3);
      if (a.size() == 3 && !std::holds_alternative<Infinity>(eval(*a[2]))) {
        fail_at(*a[2], "third argument of JAC must be infinity");
      }
      return jac_series(small_int(*a[0]), small_int(*a[1]), T_);
    }
    if (f == "subq") {
      arity(c, 2, 2);
      const Value v = eval(*a[0]);
      const int k = small_int(*a[1]);
      if (k < 1) fail_at(*a[1], "subq needs k >= 1");
      if (const auto* m = std::get_if<Mono>(&v)) return make_mono(m->c, m->e * k);
      if (std::holds_alternative<Rational>(v)) return v;
      return substitute_power(as_series(v), k);
    }
    if (f == "sift") {
      arity(c, 3, 3);
      return sift(as_series(eval(*a[0])), small_int(*a[1]), small_int(*a[2]));
    }
    if (f == "sqrt") {
      arity(c, 1, 1);
      return power(c, eval(*a[0]), Rational(1, 2));
    }
    if (f == "O") {
      arity(c, 1, 1);
      const Value v = eval(*a[0]);
      if (const auto* m = std::get_if<Mono>(&v); m && m->c == 1) return QSeries::big_o(m->e);
      if (const auto* r = std::get_if<Rational>(&v); r && *r == 1) return QSeries::big_o(0);
      fail_at(*a[0], "O() takes a power of q");
    }
    if (f == "sum") {
      arity(c, 4, 4);
      if (a[1]->kind != Expr::Kind::name) fail_at(*a[1], "sum variable must be a name");
      const std::string& var = a[1]->name;
      const long lo = integer(*a[2]);
      const long hi = integer(*a[3]);
      const auto saved = bound_.find(var) != bound_.end() ? std::optional(bound_[var]) : std::nullopt;
      Value acc = Rational(0);
      for (long i = lo; i <= hi; ++i) {
        bound_[var] = Rational(i);
        acc = add(acc, eval(*a[0]), 1);
      }
      if (saved) {
        bound_[var] = *saved;
      } else {
        bound_.erase(var);
      }
      return acc;
    }
    fail_at(c, "unknown function '" + f + "'");
  }

  int T_;
  const Definitions& defs_;
  std::map<std::string, Value> bound_;
  std::map<std::string, Value> cache_;
  std::set<std::string> active_;
};

// Exact evaluation over Q(q).
class RationalEvaluator {
 public:
  explicit RationalEvaluator(const Definitions& defs) : defs_(defs) {}

  RationalFunction eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::number:
        return RationalFunction(Polynomial::constant(Rational(e.number)));
      case Expr::Kind::name:
        return lookup(e);
      case Expr::Kind::negate:
        return -eval(*e.args[0]);
      case Expr::Kind::binary: {
        if (e.op == '^') {
          const RationalFunction base = eval(*e.args[0]);
          return pow(base, static_cast<int>(integer(*e.args[1])));
        }
        const RationalFunction a = eval(*e.args[0]);
        const RationalFunction b = eval(*e.args[1]);
        switch (e.op) {
          case '+':
            return a + b;
          case '-':
            return a - b;
          case '*':
            return a * b;
          default:
            if (b.numerator().is_zero()) throw DomainError("division by zero");
            return a / b;
        }
      }
      case Expr::Kind::call:
        return call(e);
    }
    fail_at(e, "bad expression");
  }

 private:
  Rational constant(const Expr& e) {
    const RationalFunction f = eval(e);
    if (f.numerator().degree() > 0 || f.denominator().degree() > 0) {
      fail_at(e, "expected a number");
    }
    return f.numerator().is_zero() ? Rational(0) : f.numerator()[0] / f.denominator()[0];
  }

  long integer(const Expr& e) {
    const Rational r = constant(e);
    if (!is_integer(r)) fail_at(e, "expected an integer");
    return to_long(r);
  }

  // (sign, k) for an argument +-q^k
  std::pair<int, int> monomial(const Expr& e) {
    const RationalFunction f = eval(e);
    const Polynomial& n = f.numerator();
    if (f.denominator().degree() != 0 || n.is_zero() || n.valuation() != n.degree()) {
      fail_at(e, "expected a signed power of q");
    }
    const Rational c = n.leading() / f.denominator()[0];
    if (c != 1 && c != -1) fail_at(e, "expected a signed power of q");
    return {c > 0 ? 1 : -1, n.degree()};
  }

  RationalFunction lookup(const Expr& e) {
    if (e.name == "q") return RationalFunction(Polynomial::monomial(1, 1));
    if (auto it = bound_.find(e.name); it != bound_.end()) {
      return RationalFunction(Polynomial::constant(it->second));
    }
    if (auto it = defs_.find(e.name); it != defs_.end()) {
      if (!active_.insert(e.name).second) fail_at(e, "definition of '" + e.name + "' refers to itself");
      RationalFunction v = eval(*it->second);
      active_.erase(e.name);
      return v;
    }
    fail_at(e, "unknown name '" + e.name + "' in a rational function");
  }

  static void arity(const Expr& call, size_t lo, size_t hi) {
    if (call.args.size() < lo || call.args.size() > hi) {
      fail_at(call, "wrong number of arguments for " + call.name);
    }
  }

  RationalFunction call(const Expr& c) {
    const auto& a = c.args;
    if (c.name == "qbin") {
      arity(c, 2, 2);
      return RationalFunction(
          qbin_polynomial(static_cast<int>(integer(*a[0])), static_cast<int>(integer(*a[1]))));
    }
    if (c.name == "aqprod") {
      arity(c, 3, 3);
      const auto [sign, k] = monomial(*a[0]);
      const auto [bs, b] = monomial(*a[1]);
      if (bs != 1 || b < 1) fail_at(*a[1], "base must be q^k with k >= 1");
      const long n = integer(*a[2]);
      if (n < 0) fail_at(*a[2], "aqprod length must be >= 0");
      Polynomial p = Polynomial::constant(1);
      for (long i = 0; i < n; ++i) {
        p = p * (Polynomial::constant(1) -
                 Polynomial::monomial(Rational(sign), k + static_cast<int>(i) * b));
      }
      return RationalFunction(p);
    }
    if (c.name == "sum") {
      arity(c, 4, 4);
      if (a[1]->kind != Expr::Kind::name) fail_at(*a[1], "sum variable must be a name");
      const std::string& var = a[1]->name;
      const long lo = integer(*a[2]);
      const long hi = integer(*a[3]);
      const auto saved = bound_.find(var) != bound_.end() ? std::optional(bound_[var]) : std::nullopt;
      RationalFunction acc;
      for (long i = lo; i <= hi; ++i) {
        bound_[var] = Rational(i);
        acc = acc + eval(*a[0]);
      }
      if (saved) {
        bound_[var] = *saved;
      } else {
        bound_.erase(var);
      }
      return acc;
    }
    fail_at(c, "'" + c.name + "' is not available in a rational function");
  }

  const Definitions& defs_;
  std::map<std::string, Rational> bound_;
  std::set<std::string> active_;
};

}  // namespace

QSeries evaluate(const Expr& e, int T, const Definitions& defs) {
  return Evaluator(T, defs).series(e);
}

RationalFunction evaluate_rational(const Expr& e, const Definitions& defs) {
  return RationalEvaluator(defs).eval(e);
}

}  // namespace qseries
