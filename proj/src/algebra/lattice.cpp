#include "plde/algebra/lattice.hpp"

#include <utility>

namespace plde {

namespace {

bool is_zero_vec(const IntVec& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

// floor division
Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows, int ncols) {
  int r = 0;
  int nrows = static_cast<int>(rows.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    // Euclid on column c among rows r..end.
    while (true) {
      int best = -1;
      for (int i = r; i < nrows; ++i) {
        if (rows[i][c] == 0) continue;
        if (best < 0 || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best < 0) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (int i = r + 1; i < nrows; ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = fdiv(rows[i][c], rows[r][c]);
        for (int j = c; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = -v;
    for (int i = 0; i < r; ++i) {
      Integer q = fdiv(rows[i][c], rows[r][c]);
      if (q != 0)
        for (int j = c; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  std::vector<IntVec> out;
  for (auto& v : rows)
    if (!is_zero_vec(v)) out.push_back(std::move(v));
  return out;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& a, int n) {
  // Column operations on [A; I] until A is in column echelon form; the
  // identity part of the zero columns spans the kernel.
  int m = static_cast<int>(a.size());
  std::vector<IntVec> cols(n, IntVec(m + n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) cols[j][i] = a[i].at(j);
    cols[j][m + j] = 1;
  }
  int k = 0;  // columns [0, k) hold pivots
  for (int i = 0; i < m && k < n; ++i) {
    while (true) {
      int best = -1;
      for (int j = k; j < n; ++j) {
        if (cols[j][i] == 0) continue;
        if (best < 0 || abs(cols[j][i]) < abs(cols[best][i])) best = j;
      }
      if (best < 0) break;
      std::swap(cols[k], cols[best]);
      bool done = true;
      for (int j = k + 1; j < n; ++j) {
        if (cols[j][i] == 0) continue;
        Integer q = fdiv(cols[j][i], cols[k][i]);
        for (int t = 0; t < m + n; ++t) cols[j][t] -= q * cols[k][t];
        if (cols[j][i] != 0) done = false;
      }
      if (done) {
        ++k;
        break;
      }
    }
  }
  std::vector<IntVec> kernel;
  for (int j = k; j < n; ++j) kernel.emplace_back(cols[j].begin() + m, cols[j].end());
  return hermite_normal_form(std::move(kernel), n);
}

}  // namespace plde
