#ifndef GLAT_MATRIX_HPP
#define GLAT_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glat/rational.hpp"

namespace glat {

using Vec = std::vector<Rational>;

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

inline Vec& axpy(Vec& y, const Rational& a, const Vec& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

inline Vec scaled(Vec v, const Rational& a) {
  for (auto& x : v) x *= a;
  return v;
}

// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("Matrix: ragged init");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }
  static Matrix from_rows(int cols, const std::vector<Vec>& rows) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("Matrix: row length mismatch");
      for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec col(int j) const {
    Vec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(int i, const Vec& r) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("set_row: length mismatch");
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix mul: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Vec operator*(const Matrix& a, const Vec& x) {
    if (a.cols_ != static_cast<int>(x.size())) throw std::invalid_argument("Matrix*Vec: shape mismatch");
    Vec y(a.rows_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
    return y;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix add: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sub: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }
  friend Matrix operator*(const Rational& s, Matrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
  }

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row, strictly increasing
};

// Reduced row echelon form by rational Gauss-Jordan. Deterministic: pivots
// are chosen as the first row with a nonzero entry in the leftmost open
// column, so the output is the unique RREF of the input.
inline RrefResult rref(Matrix m) {
  RrefResult res;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    m.swap_rows(r, pr);
    Rational inv = Rational(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

// One exact solution of m x = rhs with all free variables set to zero, or
// nullopt when the system is inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  RrefResult r = rref(std::move(aug));
  Vec x(m.cols());
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == m.cols()) return std::nullopt;  // pivot in rhs column
    x[r.pivots[i]] = r.reduced(i, m.cols());
  }
  return x;
}

// Inverse via Gauss-Jordan on [m | I]; nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

}  // namespace glat

#endif
