#include <algorithm>

#include "qseries/error.hpp"
#include "qseries/prodconv.hpp"
#include "qseries/relations.hpp"

namespace qseries {

namespace {

// Margin of coefficient columns beyond the number of candidate monomials.
constexpr int kColumnMargin = 21;
constexpr int kPolyColumnMargin = 10;

void homogeneous_into(int k, int n, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == k - 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = n; e >= 0; --e) {
    prefix.push_back(e);
    homogeneous_into(k, n - e, prefix, out);
    prefix.pop_back();
  }
}

void require_shape(int k, int n) {
  if (k < 1) throw DomainError("need at least one series");
  if (n < 0) throw DomainError("degree must be >= 0");
}

// Coefficients of the rows at aligned absolute exponents base, base+1, ...
struct Aligned {
  Matrix full;
  Rational base;
  int available = 0;
};

Aligned align_rows(std::span<const QSeries> rows) {
  Aligned out;
  out.base = rows[0].prefactor_exp();
  for (const auto& r : rows) out.base = std::min(out.base, r.prefactor_exp());
  Rational avail = rows[0].abs_order() - out.base;
  for (const auto& r : rows) {
    if (!is_integer(r.prefactor_exp() - out.base)) {
      throw DomainError("series with prefactors " + to_string(r.prefactor_exp()) + " and " +
                        to_string(out.base) + " cannot be compared coefficientwise");
    }
    avail = std::min(avail, Rational(r.abs_order() - out.base));
  }
  out.available = static_cast<int>(to_long(avail));
  for (const auto& r : rows) {
    std::vector<Rational> row(static_cast<size_t>(out.available));
    for (int j = 0; j < out.available; ++j) row[static_cast<size_t>(j)] = r.coeff_at(out.base + j);
    out.full.push_back(std::move(row));
  }
  return out;
}

struct Candidates {
  std::vector<std::vector<Integer>> accepted;
  std::vector<std::vector<Integer>> rejected;
  Rational verified_to;
  int vectors = 0;
  int columns = 0;
};

// Null vectors of the first `wanted` columns, split by whether they also
// annihilate every remaining column. Elimination visits the rows in `order`;
// the vectors come back indexed like `rows`, first nonzero entry positive.
Candidates null_vectors(std::span<const QSeries> rows, int wanted,
                        const std::vector<size_t>& order) {
  Aligned al = align_rows(rows);
  const int vectors = static_cast<int>(rows.size());
  const int cols = std::min(wanted, al.available);
  if (cols < vectors) {
    throw TruncationError("only " + std::to_string(al.available) +
                          " coefficients are known, fewer than the " + std::to_string(vectors) +
                          " candidate terms");
  }
  Matrix m;
  for (size_t i : order) m.emplace_back(al.full[i].begin(), al.full[i].begin() + cols);

  Candidates out;
  out.vectors = vectors;
  out.columns = cols;
  out.verified_to = al.base + al.available;
  for (const auto& pv : kernel_basis(m)) {
    std::vector<Integer> v(pv.size());
    for (size_t i = 0; i < order.size(); ++i) v[order[i]] = pv[i];
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (first != v.end() && *first < 0) {
      for (auto& x : v) x = -x;
    }
    bool ok = true;
    for (int j = cols; j < al.available && ok; ++j) {
      Rational s = 0;
      for (int i = 0; i < vectors; ++i) {
        if (v[static_cast<size_t>(i)] != 0) s += v[static_cast<size_t>(i)] * al.full[i][j];
      }
      ok = s == 0;
    }
    (ok ? out.accepted : out.rejected).push_back(std::move(v));
  }
  // Present vectors by where their support starts in basis order.
  auto by_support = [](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    for (size_t i = 0; i < x.size(); ++i) {
      if ((x[i] != 0) != (y[i] != 0)) return x[i] != 0;
    }
    return false;
  };
  std::stable_sort(out.accepted.begin(), out.accepted.end(), by_support);
  std::stable_sort(out.rejected.begin(), out.rejected.end(), by_support);
  return out;
}

// Rows are eliminated in ascending lex order with X1 most significant, so a
// dependency is solved for its monomial of highest degree in the leading
// variables (a combination target goes last of all). This expresses a target
// through low powers of X1 even when, say, X1^2 itself is a candidate.
std::vector<size_t> elimination_order(const MonomialBasis& basis, bool with_target) {
  std::vector<size_t> order(basis.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return basis.monomials[a] < basis.monomials[b];
  });
  if (with_target) order.push_back(basis.size());
  return order;
}

RelationSearch find_relations(const MonomialBasis& basis, std::span<const QSeries> xs,
                              int topshift) {
  const auto rows = evaluate_monomials(basis, xs);
  const Candidates c = null_vectors(rows, relation_columns(basis.size(), topshift),
                                    elimination_order(basis, false));
  RelationSearch out;
  out.vectors = c.vectors;
  out.columns = c.columns;
  for (const auto& v : c.accepted) out.relations.push_back({basis, v, c.verified_to});
  for (const auto& v : c.rejected) out.rejected.push_back({basis, v, c.verified_to});
  return out;
}

std::optional<std::string> eta_text(const QSeries& s) {
  try {
    const int t = s.stripped().trunc_order();
    const EtaProduct e = etamake(s, t);
    if (e.recognized) return to_string(e);
  } catch (const Error&) {
  }
  return std::nullopt;
}

ComboSearch find_combos(const QSeries& f, const MonomialBasis& basis,
                        std::span<const QSeries> xs, int topshift, bool eta_render) {
  auto rows = evaluate_monomials(basis, xs);
  const auto monos = rows;
  rows.push_back(f);
  const Candidates c = null_vectors(rows, relation_columns(basis.size(), topshift),
                                    elimination_order(basis, true));
  const size_t fi = basis.size();

  auto to_combo = [&](const std::vector<Integer>& v) {
    ComboResult r{basis, {}, c.verified_to, {}};
    const Rational vf(v[fi]);
    for (size_t i = 0; i < fi; ++i) r.coeffs.push_back(-Rational(v[i]) / vf);
    if (eta_render) {
      for (size_t i = 0; i < fi; ++i) {
        r.eta.push_back(r.coeffs[i] != 0 ? eta_text(monos[i]) : std::nullopt);
      }
    }
    return r;
  };
  ComboSearch out;
  out.vectors = c.vectors;
  out.columns = c.columns;
  for (const auto& v : c.accepted) {
    if (v[fi] != 0) out.combos.push_back(to_combo(v));
  }
  for (const auto& v : c.rejected) {
    if (v[fi] != 0) out.rejected.push_back(to_combo(v));
  }
  return out;
}

QSeries evaluate_relation(const MonomialBasis& basis, std::span<const Integer> coeffs,
                          std::span<const QSeries> xs) {
  const auto monos = evaluate_monomials(basis, xs);
  std::optional<QSeries> acc;
  for (size_t i = 0; i < monos.size(); ++i) {
    if (coeffs[i] == 0) continue;
    QSeries term = series_scale(monos[i], Rational(coeffs[i]));
    acc = acc ? series_add(*acc, term) : term;
  }
  return acc.value_or(QSeries());
}

}  // namespace

MonomialBasis MonomialBasis::homogeneous(int k, int n) {
  require_shape(k, n);
  MonomialBasis b;
  b.mode = BasisMode::homogeneous;
  b.variables = k;
  std::vector<int> prefix;
  homogeneous_into(k, n, prefix, b.monomials);
  return b;
}

MonomialBasis MonomialBasis::inhomogeneous(int k, int n) {
  require_shape(k, n);
  MonomialBasis b;
  b.mode = BasisMode::inhomogeneous;
  b.variables = k;
  for (int d = 0; d <= n; ++d) {
    std::vector<int> prefix;
    homogeneous_into(k, d, prefix, b.monomials);
  }
  return b;
}

MonomialBasis MonomialBasis::bivariate(int deg1, int deg2) {
  if (deg1 < 0 || deg2 < 0) throw DomainError("degrees must be >= 0");
  MonomialBasis b;
  b.mode = BasisMode::bivariate;
  b.variables = 2;
  for (int i = 0; i <= deg1; ++i) {
    for (int j = 0; j <= deg2; ++j) b.monomials.push_back({i, j});
  }
  std::sort(b.monomials.begin(), b.monomials.end(), [](const auto& x, const auto& y) {
    if (x[0] + x[1] != y[0] + y[1]) return x[0] + x[1] > y[0] + y[1];
    return x[0] > y[0];
  });
  return b;
}

std::vector<std::string> MonomialBasis::variable_names() const {
  if (mode == BasisMode::bivariate) return {"X", "Y"};
  std::vector<std::string> names;
  for (int i = 1; i <= variables; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

std::vector<QSeries> evaluate_monomials(const MonomialBasis& basis, std::span<const QSeries> xs) {
  if (static_cast<int>(xs.size()) != basis.variables) {
    throw DomainError("expected " + std::to_string(basis.variables) + " series, got " +
                      std::to_string(xs.size()));
  }
  // The constant monomial is known as far as any input is.
  Rational reach = 1;
  for (const auto& x : xs) reach = std::max(reach, x.abs_order());
  const int const_trunc = static_cast<int>(to_long(ceil(reach)));

  std::vector<std::vector<QSeries>> powers(xs.size());
  std::vector<QSeries> out;
  for (const auto& mono : basis.monomials) {
    std::optional<QSeries> acc;
    for (size_t v = 0; v < xs.size(); ++v) {
      const int e = mono[v];
      if (e == 0) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(xs[v]);
      while (static_cast<int>(pw.size()) < e) pw.push_back(series_mul(pw.back(), xs[v]));
      acc = acc ? series_mul(*acc, pw[static_cast<size_t>(e - 1)]) : pw[static_cast<size_t>(e - 1)];
    }
    out.push_back(acc.value_or(QSeries::constant(1, const_trunc)));
  }
  return out;
}

std::string render_polynomial(const MonomialBasis& basis, std::span<const Rational> coeffs) {
  const auto names = basis.variable_names();
  std::string out;
  for (size_t i = 0; i < basis.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    std::string mono;
    for (size_t v = 0; v < names.size(); ++v) {
      const int e = basis.monomials[i][v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const Rational mag = abs(c);
    const std::string mag_text = is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
    std::string term;
    if (mono.empty()) {
      term = mag_text;
    } else if (mag == 1) {
      term = mono;
    } else {
      term = mag_text + "*" + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const Relation& r) {
  std::vector<Rational> cs(r.coeffs.begin(), r.coeffs.end());
  return render_polynomial(r.basis, cs);
}

std::string to_string(const ComboResult& c) { return render_polynomial(c.basis, c.coeffs); }

int relation_columns(size_t monomials, int topshift) {
  return static_cast<int>(monomials) + kColumnMargin + topshift;
}

RelationSearch findhom(std::span<const QSeries> xs, int n, int topshift) {
  return find_relations(MonomialBasis::homogeneous(static_cast<int>(xs.size()), n), xs, topshift);
}

RelationSearch findnonhom(std::span<const QSeries> xs, int n, int topshift) {
  return find_relations(MonomialBasis::inhomogeneous(static_cast<int>(xs.size()), n), xs,
                        topshift);
}

ComboSearch findhomcombo(const QSeries& f, std::span<const QSeries> xs, int n, int topshift,
                         bool eta_render) {
  return find_combos(f, MonomialBasis::homogeneous(static_cast<int>(xs.size()), n), xs, topshift,
                     eta_render);
}

ComboSearch findnonhomcombo(const QSeries& f, std::span<const QSeries> xs, int n, int topshift,
                            bool eta_render) {
  return find_combos(f, MonomialBasis::inhomogeneous(static_cast<int>(xs.size()), n), xs,
                     topshift, eta_render);
}

Relation findpoly(const QSeries& x, const QSeries& y, int deg1, int deg2,
                  std::optional<int> check) {
  const MonomialBasis basis = MonomialBasis::bivariate(deg1, deg2);
  const std::vector<QSeries> xs{x, y};
  const auto rows = evaluate_monomials(basis, xs);
  const int wanted = static_cast<int>(basis.size()) + kPolyColumnMargin;
  const Candidates c = null_vectors(rows, wanted, elimination_order(basis, false));
  if (c.accepted.empty() && c.rejected.empty()) {
    throw RecognitionError("no polynomial found with degrees (" + std::to_string(deg1) + ", " +
                           std::to_string(deg2) + ")");
  }
  const bool trusted = !c.accepted.empty();
  Relation r{basis, trusted ? c.accepted.front() : c.rejected.front(), c.verified_to};
  if (!check) {
    if (!trusted) {
      throw VerificationError("candidate " + to_string(r) +
                              " fails beyond the coefficients used to find it");
    }
    return r;
  }
  // Orders are counted from the most negative leading power among the
  // inputs, as when each input is expanded to `check` terms.
  Rational lowest = 0;
  for (const auto& s : xs) {
    if (!s.is_zero()) lowest = std::min(lowest, Rational(s.prefactor_exp() + s.valuation()));
  }
  const Rational target = *check + lowest;
  const QSeries p = evaluate_relation(basis, r.coeffs, xs).truncated_abs(target);
  if (!p.is_zero()) {
    throw VerificationError("relation " + to_string(r) + " fails at q^" +
                            to_string(p.prefactor_exp() + p.valuation()));
  }
  if (p.abs_order() < target) {
    throw TruncationError("cannot check to O(q^" + to_string(target) +
                          "): the inputs determine the relation only to O(q^" +
                          to_string(p.abs_order()) + ")");
  }
  r.verified_to = target;
  return r;
}

}  // namespace qseries
