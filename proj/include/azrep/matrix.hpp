#pragma once

#include <cassert>
#include <optional>
#include <random>
#include <vector>

#include "azrep/field.hpp"

namespace azrep {

// Dense row-major matrix over an exact field. Everything here is desk-scale;
// plain Gaussian elimination throughout.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(F field, int rows, int cols)
      : f_(field), rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows) * cols, field.zero()) {
    assert(rows >= 0 && cols >= 0);
  }

  static Matrix identity(F field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const F& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!f_.is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (!f_.eq(e_[i], o.e_[i])) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (f_.is_zero(at(i, k))) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = f_.add(r.at(i, j), f_.mul(at(i, k), o.at(k, j)));
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.add(e_[i], o.e_[i]);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.sub(e_[i], o.e_[i]);
    return r;
  }

  Matrix transpose() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Kronecker product, row-major block convention.
  Matrix kron(const Matrix& o) const {
    Matrix r(f_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (f_.is_zero(at(i, j))) continue;
        for (int k = 0; k < o.rows_; ++k)
          for (int l = 0; l < o.cols_; ++l)
            r.at(i * o.rows() + k, j * o.cols() + l) =
                f_.mul(at(i, j), o.at(k, l));
      }
    return r;
  }

  Matrix hstack(const Matrix& o) const {
    assert(rows_ == o.rows_);
    Matrix r(f_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  Matrix vstack(const Matrix& o) const {
    assert(cols_ == o.cols_);
    Matrix r(f_, rows_ + o.rows_, cols_);
    for (int j = 0; j < cols_; ++j) {
      for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, j);
      for (int i = 0; i < o.rows_; ++i) r.at(rows_ + i, j) = o.at(i, j);
    }
    return r;
  }

  Matrix submatrix(int r0, int c0, int nr, int nc) const {
    Matrix r(f_, nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
  }

 private:
  F f_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> e_;
};

namespace detail {

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
  const F& f = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, col))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    auto inv = f.inv(m.at(row, col));
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m.at(i, col))) continue;
      auto c = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class F>
int rank(const Matrix<F>& m) {
  Matrix<F> r = m;
  return static_cast<int>(detail::rref(r).size());
}

// Columns form a basis of ker(m); column count = cols - rank.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  Matrix<F> r = m;
  auto pivots = detail::rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<F> basis(f, m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, static_cast<int>(k)) = f.one();
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(pivots[pi], static_cast<int>(k)) =
          f.neg(r.at(static_cast<int>(pi), fc));
  }
  return basis;
}

// Any particular solution x of a x = b, or nullopt if inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  const F& f = a.field();
  Matrix<F> aug = a.hstack(b);
  auto pivots = detail::rref(aug);
  // Pivot in the b-part means an inconsistent row.
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix<F> x(f, a.cols(), b.cols());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    for (int j = 0; j < b.cols(); ++j)
      x.at(pivots[pi], j) = aug.at(static_cast<int>(pi), a.cols() + j);
  return x;
}

// A full-row-rank q with q m = 0 and rank(q) = m.rows - rank(m):
// the rows span the left null space.
template <class F>
Matrix<F> cokernel_projection(const Matrix<F>& m) {
  return kernel_basis(m.transpose()).transpose();
}

// Deterministic rejection sampling; n x n with rank n.
template <class F>
Matrix<F> random_invertible(F f, int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_invertible: n < 0");
  std::mt19937_64 rng(seed);
  for (;;) {
    Matrix<F> m(f, n, n);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = f.from_int(d(rng));
    if (rank(m) == n) return m;
  }
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  assert(m.rows() == m.cols());
  auto x = solve(m, Matrix<F>::identity(m.field(), m.rows()));
  if (!x) throw std::domain_error("inverse: singular matrix");
  return *x;
}

}  // namespace azrep
