#include <algorithm>

#include "internal.hpp"
#include "qseries/error.hpp"
#include "qseries/prodconv.hpp"

namespace qseries {

namespace detail {

Normalized normalize_leading(const QSeries& f) {
  if (f.is_zero()) throw DomainError("series is zero to its truncation order");
  const QSeries s = f.stripped();
  const Rational c = s[0];
  std::vector<Rational> g(s.coeffs().begin(), s.coeffs().end());
  for (auto& x : g) x /= c;
  return {c, s.prefactor_exp(), QSeries(std::move(g))};
}

namespace {

std::string power_text(const std::string& base, const Rational& e) {
  if (e == 1) return base;
  if (is_integer(e)) return base + "^" + to_string(e);
  return base + "^(" + to_string(e) + ")";
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

}  // namespace

std::string render_product(const Rational& c, const Rational& qpow,
                           const std::vector<std::pair<std::string, Rational>>& factors) {
  std::vector<std::string> num;
  std::vector<std::string> den;
  if (qpow > 0) num.push_back(power_text("q", qpow));
  if (qpow < 0) den.push_back(power_text("q", -qpow));
  for (const auto& [text, e] : factors) {
    if (e > 0) num.push_back(power_text(text, e));
    if (e < 0) den.push_back(power_text(text, -e));
  }

  std::string out;
  const Rational mag = abs(c);
  std::string sign = c < 0 ? "-" : "";
  if (num.empty()) {
    out = is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
  } else if (mag == 1) {
    out = join(num);
  } else {
    out = (is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")") + "*" + join(num);
  }
  out = sign + out;
  if (den.empty()) return out;
  if (den.size() == 1) return out + "/" + den[0];
  return out + "/(" + join(den) + ")";
}

}  // namespace detail

namespace {

std::string one_minus(int j) {
  return j == 1 ? "(1-q)" : "(1-q^" + std::to_string(j) + ")";
}

std::string q_text(long k) { return k == 1 ? "q" : "q^" + std::to_string(k); }

}  // namespace

std::string to_string(const QProduct& p) {
  std::vector<std::pair<std::string, Rational>> fs;
  for (const auto& [j, e] : p.exponents) fs.emplace_back(one_minus(j), e);
  return detail::render_product(p.leading_coeff, Rational(p.q_valuation), fs);
}

std::string to_string(const EtaProduct& p) {
  std::vector<std::pair<std::string, Rational>> fs;
  for (auto it = p.exponents.rbegin(); it != p.exponents.rend(); ++it) {
    const std::string arg = it->first == 1 ? "tau" : std::to_string(it->first) + "*tau";
    fs.emplace_back("eta(" + arg + ")", Rational(it->second));
  }
  return detail::render_product(p.leading_coeff, -p.q_power, fs);
}

std::string to_string(const JacProduct& p) {
  // By modulus, then residue.
  std::vector<std::pair<std::pair<int, int>, Rational>> items(p.factors.begin(), p.factors.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.second != y.first.second) return x.first.second < y.first.second;
    return x.first.first < y.first.first;
  });
  std::vector<std::pair<std::string, Rational>> fs;
  for (const auto& [key, e] : items) {
    fs.emplace_back("JAC(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                        ",infinity)",
                    e);
  }
  return detail::render_product(p.leading_coeff, Rational(p.q_valuation), fs);
}

std::string to_string(const PochhammerProduct& p) {
  std::vector<std::pair<std::string, Rational>> fs;
  for (const auto& f : p.factors) {
    fs.emplace_back("(" + q_text(f.a) + ";" + q_text(f.b) + ")_infinity", f.exponent);
  }
  return detail::render_product(p.leading_coeff, Rational(p.q_valuation), fs);
}

}  // namespace qseries
