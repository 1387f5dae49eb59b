#ifndef GLAT_SUBSPACE_HPP
#define GLAT_SUBSPACE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "glat/matrix.hpp"

namespace glat {

// Linear subspace of Q^n in canonical form: the basis matrix is the RREF of
// any spanning set, with zero rows dropped. Two subspaces are equal iff their
// basis matrices are equal.
class Subspace {
public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  static Subspace zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient);
    return s;
  }
  static Subspace full(int ambient) { return from_matrix(Matrix::identity(ambient)); }
  static Subspace from_spanning(int ambient, const std::vector<Vec>& rows) {
    return from_matrix(Matrix::from_rows(ambient, rows));
  }
  static Subspace from_matrix(const Matrix& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.pivots_ = r.pivots;
    s.basis_ = Matrix(r.rank, rows.cols());
    for (int i = 0; i < r.rank; ++i)
      for (int j = 0; j < rows.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
    return s;
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool is_zero() const { return dim() == 0; }

  // Reduce v against the basis rows; the remainder is zero iff v is a member.
  Vec reduce(Vec v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (int i = 0; i < basis_.rows(); ++i) {
      const Rational& c = v[pivots_[i]];
      if (!c.is_zero()) axpy(v, -c, basis_.row(i));
    }
    return v;
  }
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  // Coordinates of a member vector in the RREF basis (pivot-column reads).
  std::optional<Vec> coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  int ambient_;
  Matrix basis_;
  std::vector<int> pivots_;
};

// Basis of the right kernel {x : m x = 0}, in canonical (RREF) form.
inline Subspace kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols());
    v[j] = Rational(1);
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, j);
    rows.push_back(std::move(v));
  }
  return Subspace::from_spanning(m.cols(), rows);
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  Matrix stack(a.dim() + b.dim(), a.ambient_dim());
  for (int i = 0; i < a.dim(); ++i) stack.set_row(i, a.basis().row(i));
  for (int i = 0; i < b.dim(); ++i) stack.set_row(a.dim() + i, b.basis().row(i));
  return Subspace::from_matrix(stack);
}

// a cap b: solve A^T u - B^T v = 0 and push the u-part back through A.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  int n = a.ambient_dim(), da = a.dim(), db = b.dim();
  Matrix sys(n, da + db);
  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < da; ++u) sys(i, u) = a.basis()(u, i);
    for (int v = 0; v < db; ++v) sys(i, da + v) = -b.basis()(v, i);
  }
  Subspace ker = kernel_basis(sys);
  std::vector<Vec> rows;
  for (int i = 0; i < ker.dim(); ++i) {
    Vec w(n);
    for (int u = 0; u < da; ++u) {
      const Rational& c = ker.basis()(i, u);
      if (!c.is_zero()) axpy(w, c, a.basis().row(u));
    }
    rows.push_back(std::move(w));
  }
  return Subspace::from_spanning(n, rows);
}

struct QuotientMap {
  Matrix projection;    // ambient -> Q^(ambient - dim sub), kernel exactly sub
  Subspace complement;  // spanned by the standard vectors at non-pivot slots
};

// Projection onto the complement of `sub` spanned by the unit vectors at the
// non-pivot coordinates of its RREF basis.
inline QuotientMap quotient_map(int ambient, const Subspace& sub) {
  if (sub.ambient_dim() != ambient) throw std::invalid_argument("quotient_map: ambient mismatch");
  std::vector<bool> is_pivot(ambient, false);
  for (int c : sub.pivots()) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < ambient; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  Matrix proj(static_cast<int>(free_cols.size()), ambient);
  std::vector<Vec> comp_rows;
  for (int t = 0; t < static_cast<int>(free_cols.size()); ++t) {
    int f = free_cols[t];
    proj(t, f) = Rational(1);
    for (int r = 0; r < sub.dim(); ++r) proj(t, sub.pivots()[r]) = -sub.basis()(r, f);
    Vec e(ambient);
    e[f] = Rational(1);
    comp_rows.push_back(std::move(e));
  }
  return QuotientMap{std::move(proj), Subspace::from_spanning(ambient, comp_rows)};
}

}  // namespace glat

#endif
