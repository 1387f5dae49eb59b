#ifndef GLAT_CARTANTYPE_HPP
#define GLAT_CARTANTYPE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glat/matrix.hpp"
#include "glat/subspace.hpp"

namespace glat {

// Sparse polynomial keyed by exponent vectors.
using WeightedPoly = std::map<std::vector<int>, Rational>;

inline void poly_add(WeightedPoly& into, const WeightedPoly& p, const Rational& scale = Rational(1)) {
  for (const auto& [e, c] : p) {
    Rational& slot = into[e];
    slot += scale * c;
    if (slot.is_zero()) into.erase(e);
  }
}

inline WeightedPoly poly_mul(const WeightedPoly& a, const WeightedPoly& b) {
  WeightedPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational& slot = out[e];
      slot += ca * cb;
      if (slot.is_zero()) out.erase(e);
    }
  return out;
}

inline WeightedPoly poly_partial(const WeightedPoly& p, int var) {
  WeightedPoly out;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    --d[var];
    out[d] = c * Rational(e[var]);
  }
  return out;
}

// All exponent vectors with s-weight exactly q, leading exponents high first.
inline std::vector<std::vector<int>> weighted_monomials(const std::vector<int>& s, int q) {
  std::vector<std::vector<int>> out;
  if (q < 0) return out;
  int m = static_cast<int>(s.size());
  std::vector<int> cur(m, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == m) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int e = rest / s[pos]; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, rest - e * s[pos]);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, q);
  return out;
}

inline long long weighted_poly_dim(int m, const std::vector<int>& s, int q) {
  if (static_cast<int>(s.size()) != m) throw std::invalid_argument("weighted_poly_dim: weight count");
  return static_cast<long long>(weighted_monomials(s, q).size());
}

// Polynomial vector field sum_i P_i d/dx_i; homogeneous of degree p when
// P_i has s-weight p + s_i for every i.
struct VectorField {
  std::vector<WeightedPoly> comp;

  bool is_zero() const {
    for (const auto& p : comp)
      if (!p.empty()) return false;
    return true;
  }
};

inline VectorField field_bracket(const VectorField& f, const VectorField& g) {
  int m = static_cast<int>(f.comp.size());
  if (static_cast<int>(g.comp.size()) != m) throw std::invalid_argument("field_bracket: arity");
  VectorField out;
  out.comp.resize(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      poly_add(out.comp[i], poly_mul(f.comp[j], poly_partial(g.comp[i], j)));
      WeightedPoly t = poly_mul(g.comp[j], poly_partial(f.comp[i], j));
      poly_add(out.comp[i], t, Rational(-1));
    }
  return out;
}

// One graded component of W(m;s) or of a subalgebra of it: a basis of vector
// fields together with the ambient coordinate slots (component, monomial).
struct CartanLayer {
  int p = 0;
  std::vector<int> weights;
  std::vector<VectorField> basis;
  std::map<std::pair<int, std::vector<int>>, int> slot;  // (component, exponents) -> index
  int ambient_dim = 0;

  int dim() const { return static_cast<int>(basis.size()); }
};

namespace detail {

inline CartanLayer w_layer_shell(const std::vector<int>& s, int p) {
  CartanLayer l;
  l.p = p;
  l.weights = s;
  int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i)
    for (const auto& e : weighted_monomials(s, p + s[i])) l.slot[{i, e}] = l.ambient_dim++;
  return l;
}

}  // namespace detail

// Coordinates of a homogeneous field in a layer's ambient slots.
inline Vec field_coordinates(const CartanLayer& layer, const VectorField& f) {
  Vec v(layer.ambient_dim);
  for (int i = 0; i < static_cast<int>(f.comp.size()); ++i)
    for (const auto& [e, c] : f.comp[i]) {
      auto it = layer.slot.find({i, e});
      if (it == layer.slot.end())
        throw std::invalid_argument("field_coordinates: field does not lie in the layer");
      v[it->second] = c;
    }
  return v;
}

// W(m;s)_p: every monomial field x^alpha d/dx_i with ||alpha||_s = p + s_i.
inline CartanLayer w_layer(int m, const std::vector<int>& s, int p) {
  if (static_cast<int>(s.size()) != m) throw std::invalid_argument("w_layer: weight count");
  for (int w : s)
    if (w < 1) throw std::invalid_argument("w_layer: weights must be positive");
  CartanLayer l = detail::w_layer_shell(s, p);
  l.basis.resize(l.ambient_dim);
  for (const auto& [key, idx] : l.slot) {
    VectorField f;
    f.comp.resize(m);
    f.comp[key.first][key.second] = Rational(1);
    l.basis[idx] = std::move(f);
  }
  return l;
}

// Residual 1-form coefficients of D omega - f omega for the contact form
// omega = dx_(2n+1) - sum_i x_(n+i) dx_i; D lies in K(n) exactly when all 2n
// residuals vanish.
inline std::vector<WeightedPoly> contact_residuals(const VectorField& field, int n) {
  int vars = 2 * n + 1;
  if (static_cast<int>(field.comp.size()) != vars)
    throw std::invalid_argument("contact_residuals: expected 2n+1 components");
  auto y = [&](int i) {  // x_(n+i) as a polynomial, i = 1..n
    std::vector<int> e(vars, 0);
    e[n + i - 1] = 1;
    WeightedPoly p;
    p[e] = Rational(1);
    return p;
  };
  // multiplier f = d_z P_z - sum_i y_i d_z P_i
  WeightedPoly f = poly_partial(field.comp[vars - 1], vars - 1);
  for (int i = 1; i <= n; ++i) {
    WeightedPoly t = poly_mul(y(i), poly_partial(field.comp[i - 1], vars - 1));
    poly_add(f, t, Rational(-1));
  }
  std::vector<WeightedPoly> residuals(2 * n);
  for (int t = 1; t <= 2 * n; ++t) {
    WeightedPoly r = poly_partial(field.comp[vars - 1], t - 1);
    for (int i = 1; i <= n; ++i) {
      WeightedPoly u = poly_mul(y(i), poly_partial(field.comp[i - 1], t - 1));
      poly_add(r, u, Rational(-1));
    }
    if (t <= n) {
      poly_add(r, field.comp[n + t - 1], Rational(-1));
      poly_add(r, poly_mul(f, y(t)));
    }
    residuals[t - 1] = std::move(r);
  }
  return residuals;
}

// K(n)_p as the kernel of the contact conditions inside
// W(2n+1; (1,...,1,2))_p.
inline CartanLayer k_layer(int n, int p) {
  if (n < 1) throw std::invalid_argument("k_layer: n >= 1 required");
  if (p < -2) throw std::invalid_argument("k_layer: degrees start at -2");
  std::vector<int> s(2 * n + 1, 1);
  s[2 * n] = 2;
  CartanLayer w = w_layer(2 * n + 1, s, p);

  // constraint rows keyed by (residual index, monomial)
  std::map<std::pair<int, std::vector<int>>, int> row_of;
  std::vector<std::map<int, Rational>> cols(w.dim());
  int rows = 0;
  for (int b = 0; b < w.dim(); ++b) {
    auto residuals = contact_residuals(w.basis[b], n);
    for (int t = 0; t < static_cast<int>(residuals.size()); ++t)
      for (const auto& [e, c] : residuals[t]) {
        auto key = std::make_pair(t, e);
        auto it = row_of.find(key);
        if (it == row_of.end()) it = row_of.emplace(key, rows++).first;
        cols[b][it->second] = c;
      }
  }
  Matrix constraints(rows, w.dim());
  for (int b = 0; b < w.dim(); ++b)
    for (const auto& [r, c] : cols[b]) constraints(r, b) = c;
  Subspace sols = kernel_basis(constraints);

  CartanLayer out = detail::w_layer_shell(s, p);
  for (int r = 0; r < sols.dim(); ++r) {
    VectorField f;
    f.comp.resize(2 * n + 1);
    for (int b = 0; b < w.dim(); ++b) {
      const Rational& c = sols.basis()(r, b);
      if (c.is_zero()) continue;
      for (int i = 0; i < 2 * n + 1; ++i)
        for (const auto& [e, cc] : w.basis[b].comp[i]) {
          Rational& slot = f.comp[i][e];
          slot += c * cc;
          if (slot.is_zero()) f.comp[i].erase(e);
        }
    }
    out.basis.push_back(std::move(f));
  }
  return out;
}

// Nonnegative layers must act faithfully on the negative part: a field whose
// bracket with every negative basis field vanishes must be zero.
inline bool check_transitive_cartan(const std::vector<CartanLayer>& layers) {
  using SlotKey = std::pair<std::pair<std::size_t, std::size_t>, std::pair<int, std::vector<int>>>;
  std::vector<const CartanLayer*> negative;
  for (const auto& l : layers)
    if (l.p < 0) negative.push_back(&l);
  for (const auto& l : layers) {
    if (l.p < 0 || l.dim() == 0) continue;
    std::vector<std::map<SlotKey, Rational>> flat(l.dim());
    for (int s = 0; s < l.dim(); ++s)
      for (std::size_t nl = 0; nl < negative.size(); ++nl)
        for (std::size_t y = 0; y < negative[nl]->basis.size(); ++y) {
          VectorField br = field_bracket(l.basis[s], negative[nl]->basis[y]);
          for (int i = 0; i < static_cast<int>(br.comp.size()); ++i)
            for (const auto& [e, c] : br.comp[i]) flat[s][{{nl, y}, {i, e}}] = c;
        }
    std::map<SlotKey, int> col_of;
    for (const auto& row : flat)
      for (const auto& [key, c] : row)
        if (!col_of.count(key)) {
          int next = static_cast<int>(col_of.size());
          col_of[key] = next;
        }
    Matrix stacked(l.dim(), static_cast<int>(col_of.size()));
    for (int s = 0; s < l.dim(); ++s)
      for (const auto& [key, c] : flat[s]) stacked(s, col_of.at(key)) = c;
    if (rref(stacked).rank != l.dim()) return false;
  }
  return true;
}

}  // namespace glat

#endif
