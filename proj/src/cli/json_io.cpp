#include "qseries/json_io.hpp"

#include "qseries/error.hpp"

namespace qseries {

namespace {

Json rationals(std::span<const Rational> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace

Json to_json(const QSeries& s) {
  Json j;
  j["prefactor_exp"] = to_string(s.prefactor_exp());
  j["trunc_order"] = s.trunc_order();
  j["coeffs"] = rationals(s.coeffs());
  return j;
}

Json to_json(const Polynomial& p) { return rationals(p.coeffs()); }

Json to_json(const RationalFunction& f) {
  Json j;
  j["numerator"] = to_json(f.numerator());
  j["denominator"] = to_json(f.denominator());
  return j;
}

Json to_json(const QProduct& p) {
  Json j;
  j["leading_coeff"] = to_string(p.leading_coeff);
  j["q_valuation"] = p.q_valuation;
  Json ex = Json::object();
  for (const auto& [k, e] : p.exponents) ex[std::to_string(k)] = to_string(e);
  j["exponents"] = ex;
  j["all_integral"] = p.all_integral;
  return j;
}

Json to_json(const EtaProduct& p) {
  Json j;
  j["leading_coeff"] = to_string(p.leading_coeff);
  j["q_power"] = to_string(p.q_power);
  Json ex = Json::object();
  for (const auto& [k, e] : p.exponents) ex[std::to_string(k)] = e;
  j["exponents"] = ex;
  j["recognized"] = p.recognized;
  return j;
}

Json to_json(const JacProduct& p) {
  Json j;
  j["leading_coeff"] = to_string(p.leading_coeff);
  j["q_valuation"] = p.q_valuation;
  Json fs = Json::array();
  for (const auto& [key, e] : p.factors) {
    fs.push_back({{"a", key.first}, {"b", key.second}, {"exponent", to_string(e)}});
  }
  j["factors"] = fs;
  return j;
}

Json to_json(const PochhammerProduct& p) {
  Json j;
  j["leading_coeff"] = to_string(p.leading_coeff);
  j["q_valuation"] = p.q_valuation;
  Json fs = Json::array();
  for (const auto& f : p.factors) {
    fs.push_back({{"a", f.a}, {"b", f.b}, {"exponent", to_string(f.exponent)}});
  }
  j["factors"] = fs;
  return j;
}

Json to_json(const MonomialBasis& b) {
  Json j;
  j["mode"] = b.mode == BasisMode::homogeneous     ? "homogeneous"
              : b.mode == BasisMode::inhomogeneous ? "inhomogeneous"
                                                   : "bivariate";
  j["variables"] = b.variable_names();
  j["monomials"] = b.monomials;
  return j;
}

Json to_json(const Relation& r) {
  Json j;
  j["text"] = to_string(r);
  j["basis"] = to_json(r.basis);
  Json cs = Json::array();
  for (const auto& c : r.coeffs) cs.push_back(c.get_str());
  j["coeffs"] = cs;
  j["verified_to"] = to_string(r.verified_to);
  return j;
}

Json to_json(const ComboResult& c) {
  Json j;
  j["text"] = to_string(c);
  j["basis"] = to_json(c.basis);
  j["coeffs"] = rationals(c.coeffs);
  j["verified_to"] = to_string(c.verified_to);
  if (!c.eta.empty()) {
    Json eta = Json::array();
    for (const auto& e : c.eta) eta.push_back(e ? Json(*e) : Json(nullptr));
    j["eta"] = eta;
  }
  return j;
}

QSeries series_from_json(const Json& j) {
  try {
    const Rational r = parse_rational(j.at("prefactor_exp").get<std::string>());
    std::vector<Rational> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(parse_rational(c.get<std::string>()));
    const int T = j.at("trunc_order").get<int>();
    if (T != static_cast<int>(cs.size())) {
      throw ParseError("trunc_order does not match the number of coefficients", 1, 1);
    }
    if (T < 1) throw ParseError("trunc_order must be >= 1", 1, 1);
    return QSeries(std::move(cs), r);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed series record: ") + e.what(), 1, 1);
  }
}

}  // namespace qseries
