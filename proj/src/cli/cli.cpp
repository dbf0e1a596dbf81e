#include "qseries/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qseries/error.hpp"
#include "qseries/expression.hpp"
#include "qseries/json_io.hpp"
#include "qseries/relations.hpp"

namespace qseries {

namespace {

// Product of JAC factors, numbers and powers of q.
JacProduct jac_from_expr(const Expr& e) {
  auto fail = [&](const std::string& msg) -> JacProduct {
    throw ParseError(msg, e.line, e.column);
  };
  auto scale = [](JacProduct p, const Rational& x) {
    if (p.leading_coeff != 1) {
      if (!is_integer(x)) throw DomainError("fractional power of a JAC product's coefficient");
      Rational c = 1;
      for (long i = 0; i < (x < 0 ? -to_long(x) : to_long(x)); ++i) c *= p.leading_coeff;
      p.leading_coeff = x < 0 ? Rational(1 / c) : c;
    }
    const Rational v = p.q_valuation * x;
    if (!is_integer(v)) throw DomainError("fractional power of q in a JAC product");
    p.q_valuation = to_long(v);
    for (auto& [key, ex] : p.factors) ex *= x;
    return p;
  };
  auto combine = [](JacProduct a, const JacProduct& b, int sign) {
    a.leading_coeff = sign > 0 ? Rational(a.leading_coeff * b.leading_coeff)
                               : Rational(a.leading_coeff / b.leading_coeff);
    a.q_valuation += sign * b.q_valuation;
    for (const auto& [key, ex] : b.factors) a.factors[key] += sign * ex;
    std::erase_if(a.factors, [](const auto& kv) { return kv.second == 0; });
    return a;
  };
  auto scalar = [](const Expr& x) {
    return evaluate(x, 1).coeffs()[0];  // exponents are plain numbers
  };
  switch (e.kind) {
    case Expr::Kind::number: {
      JacProduct p;
      p.leading_coeff = Rational(e.number);
      return p;
    }
    case Expr::Kind::name:
      if (e.name == "q") {
        JacProduct p;
        p.q_valuation = 1;
        return p;
      }
      return fail("unexpected name '" + e.name + "' in a JAC product");
    case Expr::Kind::negate: {
      JacProduct p = jac_from_expr(*e.args[0]);
      p.leading_coeff = -p.leading_coeff;
      return p;
    }
    case Expr::Kind::binary:
      if (e.op == '*') return combine(jac_from_expr(*e.args[0]), jac_from_expr(*e.args[1]), 1);
      if (e.op == '/') return combine(jac_from_expr(*e.args[0]), jac_from_expr(*e.args[1]), -1);
      if (e.op == '^') return scale(jac_from_expr(*e.args[0]), scalar(*e.args[1]));
      return fail("a JAC product cannot contain sums");
    case Expr::Kind::call: {
      if (e.name == "sqrt" && e.args.size() == 1) {
        return scale(jac_from_expr(*e.args[0]), Rational(1, 2));
      }
      if (e.name != "JAC" || e.args.size() < 2 || e.args.size() > 3) {
        return fail("expected JAC(a,b[,infinity])");
      }
      if (e.args.size() == 3 &&
          (e.args[2]->kind != Expr::Kind::name || e.args[2]->name != "infinity")) {
        return fail("third argument of JAC must be infinity");
      }
      const Rational a = scalar(*e.args[0]);
      const Rational b = scalar(*e.args[1]);
      if (!is_integer(a) || !is_integer(b) || a < 0 || b < 1 || a >= b) {
        return fail("JAC(a,b) needs integers 0 <= a < b");
      }
      long ai = to_long(a);
      const long bi = to_long(b);
      if (2 * ai > bi) ai = bi - ai;
      JacProduct p;
      p.factors[{static_cast<int>(ai), static_cast<int>(bi)}] = 1;
      return p;
    }
  }
  return fail("bad JAC product");
}

struct Common {
  std::vector<std::string> exprs;
  std::vector<std::string> files;
  std::vector<std::string> defs;
  int T = 100;
  std::string format = "text";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-e,--expr", c.exprs, "series expression (repeatable)");
  sub->add_option("--in", c.files, "file holding an expression or a JSON series record");
  sub->add_option("-T", c.T, "truncation order O(q^T)")->capture_default_str();
  sub->add_option("--def", c.defs, "NAME=EXPR definition usable in expressions (repeatable)");
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

Definitions parse_defs(const std::vector<std::string>& defs) {
  Definitions out;
  for (const auto& d : defs) {
    const auto eq = d.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("definition '" + d + "' is not of the form NAME=EXPR", 1, 1);
    }
    std::string name = d.substr(0, eq);
    out[name] = parse_expression(std::string_view(d).substr(eq + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'", 1, 1);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Context {
 public:
  explicit Context(const Common& c) : c_(c), defs_(parse_defs(c.defs)) {}

  bool json() const { return c_.format == "json"; }
  int T() const { return c_.T; }
  const Definitions& defs() const { return defs_; }

  QSeries eval(const std::string& text) const {
    return evaluate(*parse_expression(text), c_.T, defs_);
  }

  std::vector<QSeries> inputs() const {
    std::vector<QSeries> out;
    for (const auto& e : c_.exprs) out.push_back(eval(e));
    for (const auto& f : c_.files) {
      const std::string text = read_file(f);
      const auto start = text.find_first_not_of(" \t\r\n");
      if (start != std::string::npos && text[start] == '{') {
        Json j;
        try {
          j = Json::parse(text);
        } catch (const nlohmann::json::exception& ex) {
          throw ParseError(std::string("bad JSON in '") + f + "': " + ex.what(), 1, 1);
        }
        out.push_back(series_from_json(j));
      } else {
        out.push_back(eval(text));
      }
    }
    return out;
  }

  QSeries single_input() const {
    auto xs = inputs();
    if (xs.size() != 1) {
      throw CLI::ValidationError("exactly one input series is required (--expr or --in)");
    }
    return xs.front();
  }

  std::string single_text() const {
    if (c_.exprs.size() + c_.files.size() != 1) {
      throw CLI::ValidationError("exactly one input expression is required (--expr or --in)");
    }
    return c_.exprs.empty() ? read_file(c_.files.front()) : c_.exprs.front();
  }

 private:
  const Common& c_;
  Definitions defs_;
};

// Order used by a recognizer: the requested one, else every coefficient the
// series carries beyond its leading term.
int recognizer_order(const QSeries& f, std::optional<int> order) {
  if (order) return *order;
  return f.is_zero() ? f.trunc_order() : f.stripped().trunc_order();
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string eta_combination(const ComboResult& c) {
  std::string out;
  for (size_t i = 0; i < c.coeffs.size(); ++i) {
    const Rational& x = c.coeffs[i];
    if (x == 0) continue;
    const std::vector<Rational> unit_coeffs = [&] {
      std::vector<Rational> v(c.coeffs.size());
      v[i] = 1;
      return v;
    }();
    const std::string factor =
        i < c.eta.size() && c.eta[i] ? *c.eta[i] : render_polynomial(c.basis, unit_coeffs);
    const Rational mag = abs(x);
    std::string term = mag == 1 ? factor
                                : (is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")") +
                                      "*" + factor;
    if (out.empty()) {
      out = (x < 0 ? "-" : "") + term;
    } else {
      out += (x < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

struct Params {
  std::optional<int> order;
  int n = 1;
  int k = 0;
  int topshift = 0;
  bool eta = false;
  std::string target;
  std::string x;
  std::string y;
  int deg1 = 1;
  int deg2 = 1;
  std::optional<int> check;
  std::optional<int> max_period;
  std::string jac;
  std::string lhs;
  std::string rhs;
};

int run_command(const std::string& name, const Common& common, const Params& p,
                std::ostream& out) {
  const Context ctx(common);

  if (name == "expand") {
    // Values that know more terms (exact polynomials, substitutions) print to O(q^T).
    auto xs = ctx.inputs();
    if (xs.empty()) throw CLI::ValidationError("no input series given");
    for (auto& x : xs) x = x.truncated_abs(common.T);
    if (ctx.json()) {
      if (xs.size() == 1) {
        print_json(out, to_json(xs[0]));
      } else {
        Json arr = Json::array();
        for (const auto& x : xs) arr.push_back(to_json(x));
        print_json(out, arr);
      }
    } else {
      for (const auto& x : xs) out << to_string(x) << "\n";
    }
    return kExitOk;
  }

  if (name == "sift") {
    const QSeries s = sift(ctx.single_input(), p.n, p.k);
    if (ctx.json()) {
      print_json(out, to_json(s));
    } else {
      out << to_string(s) << "\n";
    }
    return kExitOk;
  }

  if (name == "prodmake") {
    const QSeries f = ctx.single_input();
    const QProduct r = prodmake(f, recognizer_order(f, p.order));
    if (ctx.json()) {
      print_json(out, to_json(r));
    } else {
      out << to_string(r) << "\n";
    }
    return kExitOk;
  }

  if (name == "qfactor") {
    const RationalFunction f = evaluate_rational(*parse_expression(ctx.single_text()), ctx.defs());
    const QFactorResult r = qfactor(f, p.order);
    const bool complete = r.remainder == RationalFunction(Polynomial::constant(1));
    if (ctx.json()) {
      Json j;
      j["product"] = to_json(r.product);
      j["remainder"] = to_json(r.remainder);
      print_json(out, j);
    } else {
      out << to_string(r.product);
      if (!complete) out << " * (" << to_string(r.remainder) << ")";
      out << "\n";
    }
    return kExitOk;
  }

  if (name == "etamake") {
    const QSeries f = ctx.single_input();
    const int order = recognizer_order(f, p.order);
    const EtaProduct r = etamake(f, order);
    if (ctx.json()) {
      print_json(out, to_json(r));
    } else {
      out << to_string(r) << "\n";
    }
    if (!r.recognized) {
      throw RecognitionError("not an eta product to O(q^" + std::to_string(order) +
                             "); the partial product is shown");
    }
    return kExitOk;
  }

  if (name == "jacprodmake" || (name == "jac2prod" && p.jac.empty())) {
    const QSeries f = ctx.single_input();
    const JacProduct j = jacprodmake(f, recognizer_order(f, p.order), p.max_period);
    if (name == "jacprodmake") {
      if (ctx.json()) {
        print_json(out, to_json(j));
      } else {
        out << to_string(j) << "\n";
      }
      return kExitOk;
    }
    const PochhammerProduct pp = jac2prod(j);
    if (ctx.json()) {
      print_json(out, to_json(pp));
    } else {
      out << to_string(pp) << "\n";
    }
    return kExitOk;
  }

  if (name == "jac2prod" || name == "jac2series") {
    if (p.jac.empty()) throw CLI::ValidationError("--jac is required");
    const JacProduct j = parse_jac_product(p.jac);
    if (name == "jac2prod") {
      const PochhammerProduct pp = jac2prod(j);
      if (ctx.json()) {
        print_json(out, to_json(pp));
      } else {
        out << to_string(pp) << "\n";
      }
      return kExitOk;
    }
    const QSeries s = jac2series(j, ctx.T());
    if (ctx.json()) {
      print_json(out, to_json(s));
    } else {
      out << to_string(s) << "\n";
    }
    return kExitOk;
  }

  if (name == "findhom" || name == "findnonhom") {
    const auto xs = ctx.inputs();
    if (xs.empty()) throw CLI::ValidationError("no input series given");
    const RelationSearch r =
        name == "findhom" ? findhom(xs, p.n, p.topshift) : findnonhom(xs, p.n, p.topshift);
    if (ctx.json()) {
      Json j;
      j["terms"] = r.columns;
      j["matrix"] = {r.vectors, r.columns};
      Json rel = Json::array();
      for (const auto& x : r.relations) rel.push_back(to_json(x));
      j["relations"] = rel;
      Json rej = Json::array();
      for (const auto& x : r.rejected) rej.push_back(to_json(x));
      j["rejected"] = rej;
      print_json(out, j);
    } else {
      out << "# of terms: " << r.columns << "\n";
      if (r.relations.empty()) out << "no relations\n";
      for (const auto& x : r.relations) out << to_string(x) << "\n";
      for (const auto& x : r.rejected) out << "rejected: " << to_string(x) << "\n";
    }
    return kExitOk;
  }

  if (name == "findhomcombo" || name == "findnonhomcombo") {
    if (p.target.empty()) throw CLI::ValidationError("--target is required");
    const QSeries f = ctx.eval(p.target);
    const auto xs = ctx.inputs();
    if (xs.empty()) throw CLI::ValidationError("no input series given");
    const ComboSearch r = name == "findhomcombo"
                              ? findhomcombo(f, xs, p.n, p.topshift, p.eta)
                              : findnonhomcombo(f, xs, p.n, p.topshift, p.eta);
    if (ctx.json()) {
      Json j;
      j["terms"] = r.columns;
      j["matrix"] = {r.vectors, r.columns};
      Json cs = Json::array();
      for (const auto& x : r.combos) cs.push_back(to_json(x));
      j["combinations"] = cs;
      Json rej = Json::array();
      for (const auto& x : r.rejected) rej.push_back(to_json(x));
      j["rejected"] = rej;
      print_json(out, j);
    } else {
      out << "# of terms: " << r.columns << "\n";
      out << "matrix: " << r.vectors << " x " << r.columns << "\n";
      if (r.combos.empty()) out << "no combination found\n";
      for (const auto& x : r.combos) {
        if (p.eta) out << eta_combination(x) << "\n";
        out << to_string(x) << "\n";
      }
      for (const auto& x : r.rejected) out << "rejected: " << to_string(x) << "\n";
    }
    return kExitOk;
  }

  if (name == "findpoly") {
    if (p.x.empty() || p.y.empty()) throw CLI::ValidationError("--x and --y are required");
    const QSeries x = ctx.eval(p.x);
    const QSeries y = ctx.eval(p.y);
    const Relation r = findpoly(x, y, p.deg1, p.deg2, p.check);
    const size_t dims = r.basis.size();
    const int cols = static_cast<int>(dims) + 10;
    if (ctx.json()) {
      Json j;
      j["dims"] = {dims, cols};
      j["relation"] = to_json(r);
      print_json(out, j);
    } else {
      out << "dims: " << dims << ", " << cols << "\n";
      out << to_string(r) << "\n";
      out << "verified to O(q^" << to_string(r.verified_to) << ")\n";
    }
    return kExitOk;
  }

  if (name == "check-identity") {
    if (p.lhs.empty() || p.rhs.empty()) throw CLI::ValidationError("--lhs and --rhs are required");
    const QSeries l = ctx.eval(p.lhs);
    const QSeries r = ctx.eval(p.rhs);
    const QSeries d = series_sub(l, r);
    const bool equal = d.is_zero();
    const Rational at = equal ? d.abs_order() : Rational(d.prefactor_exp() + d.valuation());
    if (ctx.json()) {
      Json j;
      j["equal"] = equal;
      if (equal) {
        j["order"] = to_string(at);
      } else {
        j["first_difference"] = to_string(at);
        j["lhs"] = to_string(l.coeff_at(at));
        j["rhs"] = to_string(r.coeff_at(at));
      }
      print_json(out, j);
    } else if (equal) {
      out << "equal to O(q^" << to_string(at) << ")\n";
    } else {
      out << "differ at q^" << to_string(at) << ": lhs " << to_string(l.coeff_at(at))
          << ", rhs " << to_string(r.coeff_at(at)) << "\n";
    }
    return equal ? kExitOk : kExitFailure;
  }

  throw CLI::ValidationError("unknown command " + name);
}

}  // namespace

JacProduct parse_jac_product(std::string_view text) { return jac_from_expr(*parse_expression(text)); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series toolkit", "qseries"};
  app.require_subcommand(1);
  Common common;
  Params p;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, common);
    return s;
  };
  auto order_opt = [&](CLI::App* s, const char* help) { s->add_option("--order", p.order, help); };

  sub("expand", "print the series of each input");
  order_opt(sub("prodmake", "infinite product form of a series"),
            "number of product exponents to compute (default: all known)");
  order_opt(sub("qfactor", "rational function as a q-product"), "search bound (default 4d+3)");
  order_opt(sub("etamake", "eta-product form of a series"), "order to recognize to");
  {
    CLI::App* s = sub("jacprodmake", "theta-product (JAC) form of a series");
    order_opt(s, "order to recognize to");
    s->add_option("--max-period", p.max_period, "largest period tried (default (T-1)/2)");
  }
  {
    CLI::App* s = sub("jac2prod", "JAC product as (q^a;q^b) factors");
    s->add_option("--jac", p.jac, "JAC product text; without it the input series is recognized first");
    order_opt(s, "order to recognize to");
    s->add_option("--max-period", p.max_period, "largest period tried");
  }
  sub("jac2series", "series of a JAC product")->add_option("--jac", p.jac, "JAC product text");
  {
    CLI::App* s = sub("sift", "coefficients n*i+k of a series");
    s->add_option("-n", p.n, "modulus")->required();
    s->add_option("-k", p.k, "residue")->required();
  }
  for (const char* name : {"findhom", "findnonhom", "findhomcombo", "findnonhomcombo"}) {
    CLI::App* s = sub(name, "polynomial relations among the input series");
    s->add_option("-n", p.n, "degree")->required();
    s->add_option("--topshift", p.topshift, "extra coefficient columns")->capture_default_str();
    if (std::string(name).find("combo") != std::string::npos) {
      s->add_option("--target", p.target, "series to express")->required();
      s->add_flag("--eta", p.eta, "also render each monomial as an eta product");
    }
  }
  {
    CLI::App* s = sub("findpoly", "polynomial P(X,Y) with P(x,y) = 0");
    s->add_option("--x", p.x, "expression for x")->required();
    s->add_option("--y", p.y, "expression for y")->required();
    s->add_option("--deg1", p.deg1, "degree in X")->required();
    s->add_option("--deg2", p.deg2, "degree in Y")->required();
    s->add_option("--check", p.check, "verify to this order");
  }
  {
    CLI::App* s = sub("check-identity", "compare two expressions to O(q^T)");
    s->add_option("--lhs", p.lhs, "left side")->required();
    s->add_option("--rhs", p.rhs, "right side")->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return run_command(name, common, p, out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RecognitionError& e) {
    err << "not recognized: " << e.what() << "\n";
    return kExitFailure;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace qseries
