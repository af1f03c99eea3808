#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "plde/algebra/constant.hpp"

namespace plde {

// Dense rectangular matrix. T() must be the zero of the entry ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n, const T& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<T> row(int i) const {
    return std::vector<T>(a_.begin() + static_cast<long>(i) * cols_,
                          a_.begin() + static_cast<long>(i + 1) * cols_);
  }
  void swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  // Keep the listed columns, in order.
  Matrix select_columns(const std::vector<int>& cols) const {
    Matrix t(rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols.size(); ++j) t(i, static_cast<int>(j)) = (*this)(i, cols[j]);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

// ---- Linear algebra over a field (Constant, RatFun). ----

// Reduced row echelon form in place; pivot = first nonzero entry in column
// order. Only the first pivot_cols columns may hold pivots (all when < 0),
// the rest are carried along. Returns the pivot columns.
template <class T>
std::vector<int> rref(Matrix<T>& a, int pivot_cols = -1) {
  std::vector<int> pivots;
  int r = 0;
  int limit = pivot_cols < 0 ? a.cols() : pivot_cols;
  for (int c = 0; c < limit && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    T inv = T(1) / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      T f = a(i, c);
      for (int j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> a) {
  return static_cast<int>(rref(a).size());
}

// Basis of {v : a v = 0}, one vector per free column (that entry is 1).
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  Matrix<T> a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols());
    v[f] = T(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
struct ParametricSolution {
  // One entry per rhs column; nullopt when that column is inconsistent.
  std::vector<std::optional<std::vector<T>>> particular;
  std::vector<std::vector<T>> nullspace;
};

template <class T>
ParametricSolution<T> solve_parametric_linear(const Matrix<T>& m,
                                              const std::vector<std::vector<T>>& rhs) {
  int n = m.cols(), k = static_cast<int>(rhs.size());
  Matrix<T> a(m.rows(), n + k);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
    for (int j = 0; j < k; ++j) a(i, n + j) = rhs[j].at(i);
  }
  auto mpiv = rref(a, n);
  ParametricSolution<T> out;
  int r = static_cast<int>(mpiv.size());
  for (int j = 0; j < k; ++j) {
    bool ok = true;
    for (int i = r; i < a.rows(); ++i) {
      if (!a(i, n + j).is_zero()) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      out.particular.emplace_back(std::nullopt);
      continue;
    }
    std::vector<T> v(n);
    for (int i = 0; i < r; ++i) v[mpiv[i]] = a(i, n + j);
    out.particular.emplace_back(std::move(v));
  }
  std::vector<bool> is_pivot(n, false);
  for (int p : mpiv) is_pivot[p] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(n);
    v[f] = T(1);
    for (int i = 0; i < r; ++i) v[mpiv[i]] = -a(i, f);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

// ---- Fraction-free elimination over an integral domain. ----
// Requires is_zero(), ring operations, and exact_quotient(a, b) found by
// argument-dependent lookup.

// Bareiss echelon form in place. Returns the pivot columns; row i < rank
// has its pivot at column pivots[i].
template <class T>
std::vector<int> bareiss_echelon(Matrix<T>& a) {
  std::vector<int> pivots;
  int r = 0;
  T prev;
  bool have_prev = false;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (int i = r + 1; i < a.rows(); ++i) {
      for (int j = c + 1; j < a.cols(); ++j) {
        T v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        a(i, j) = have_prev ? exact_quotient(v, prev) : v;
      }
      a(i, c) = T();
    }
    prev = a(r, c);
    have_prev = true;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
int ff_rank(Matrix<T> a) {
  return static_cast<int>(bareiss_echelon(a).size());
}

// Nullspace basis over the fraction field, with entries in the ring itself.
// One vector per free column; entries are not normalized.
template <class T>
std::vector<std::vector<T>> ff_nullspace(const Matrix<T>& m, const T& one) {
  Matrix<T> a = m;
  auto pivots = bareiss_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols());
    v[f] = one;
    // Back substitution, rescaling the whole vector instead of dividing.
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
      int pc = pivots[i];
      T s;
      for (int j = pc + 1; j < a.cols(); ++j) {
        if (!a(i, j).is_zero() && !v[j].is_zero()) s += a(i, j) * v[j];
      }
      if (s.is_zero()) continue;  // v[pc] stays 0
      const T& piv = a(i, pc);
      for (auto& e : v) {
        if (!e.is_zero()) e *= piv;
      }
      v[pc] = -s;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace plde
