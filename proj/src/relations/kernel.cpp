#include <algorithm>

#include "qseries/relations.hpp"

namespace qseries {

namespace {

using IntRow = std::vector<Integer>;

void remove_content(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (x != 0) g = gcd(g, abs(x));
  }
  if (g > 1) {
    for (auto& x : row) x /= g;
  }
}

void make_primitive(IntRow& v) {
  remove_content(v);
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (first != v.end() && *first < 0) {
    for (auto& x : v) x = -x;
  }
}

}  // namespace

std::vector<std::vector<Integer>> kernel_basis(const Matrix& m) {
  const size_t nv = m.size();
  if (nv == 0) return {};
  const size_t nc = m[0].size();

  // Clear denominators row by row: row i of m is scaled by s_i.
  std::vector<Integer> scale(nv, 1);
  for (size_t i = 0; i < nv; ++i) {
    for (const auto& x : m[i]) scale[i] = lcm(scale[i], Integer(x.get_den()));
  }
  // a = m^T with integer entries; unknown i multiplies column i.
  std::vector<IntRow> a(nc, IntRow(nv));
  for (size_t i = 0; i < nv; ++i) {
    for (size_t c = 0; c < nc; ++c) {
      a[c][i] = Integer(m[i][c].get_num()) * (scale[i] / Integer(m[i][c].get_den()));
    }
  }

  // Fraction-free Gauss-Jordan; the pivot is the first nonzero entry below
  // the current row.
  std::vector<std::pair<size_t, size_t>> pivots;  // (column, row)
  std::vector<size_t> free_cols;
  size_t prow = 0;
  for (size_t col = 0; col < nv; ++col) {
    size_t r = prow;
    while (r < nc && a[r][col] == 0) ++r;
    if (r == nc) {
      free_cols.push_back(col);
      continue;
    }
    std::swap(a[r], a[prow]);
    const Integer p = a[prow][col];
    for (size_t i = 0; i < nc; ++i) {
      if (i == prow || a[i][col] == 0) continue;
      const Integer f = a[i][col];
      for (size_t j = 0; j < nv; ++j) a[i][j] = p * a[i][j] - f * a[prow][j];
      remove_content(a[i]);
    }
    pivots.emplace_back(col, prow);
    ++prow;
  }

  std::vector<std::vector<Integer>> out;
  for (size_t f : free_cols) {
    Integer l = 1;
    for (const auto& [col, row] : pivots) {
      if (a[row][f] != 0) l = lcm(l, abs(a[row][col]));
    }
    IntRow w(nv, 0);
    w[f] = l;
    for (const auto& [col, row] : pivots) {
      if (a[row][f] != 0) w[col] = -a[row][f] * (l / a[row][col]);
    }
    for (size_t i = 0; i < nv; ++i) w[i] *= scale[i];
    make_primitive(w);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace qseries
