#ifndef GLAT_PROLONG_HPP
#define GLAT_PROLONG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glat/fgla.hpp"
#include "glat/matrix.hpp"
#include "glat/subspace.hpp"

namespace glat {

// A degree-k element of the prolongation tower, stored through its action on
// the base: one matrix per source degree p, mapping g_p into the space at
// degree p+k (a component of m when p+k < 0, the layer p+k otherwise).
struct LayerElement {
  std::map<int, Matrix> comp;
};

struct Layer {
  int k = 0;
  std::vector<LayerElement> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

enum class ProlongationStatus { terminated, truncated };

// Degree-by-degree Tanaka prolongation of a fundamental graded Lie algebra,
// optionally restricted to the derivations preserving a pseudo-product
// structure.
//
// A layer element is determined by its restriction to g_-1: the values on
// deeper components are forced through [g_p, g_-1] = g_(p-1), and the
// parameter survives exactly when the forced extension is consistent. Each
// computed basis element is then re-verified against the full derivation
// identity on every basis pair of m, so the reduced parametrization cannot
// silently deliver a wrong layer.
class Tower {
public:
  Tower(GradedLieAlgebra base, std::optional<PseudoProduct> pp)
      : m_(std::move(base)), pp_(std::move(pp)) {
    if (!is_fundamental(m_)) throw std::invalid_argument("Tower: base must be fundamental");
    if (pp_ && !check_pseudo_product(m_, *pp_))
      throw std::invalid_argument("Tower: invalid pseudo-product structure");
    layers_.push_back(solve_layer(0));
    verify_layer(layers_.back());
  }

  const GradedLieAlgebra& base() const { return m_; }
  bool restricted() const { return pp_.has_value(); }
  int depth() const { return m_.depth(); }
  int top_layer() const { return static_cast<int>(layers_.size()) - 1; }
  const Layer& layer(int k) const { return layers_.at(k); }
  const std::vector<Layer>& layers() const { return layers_; }

  std::vector<int> layer_dims() const {
    std::vector<int> out;
    for (const Layer& l : layers_) out.push_back(l.dim());
    return out;
  }

  // dimension of the component at degree d (base for d < 0, layer otherwise)
  int space_dim(int d) const {
    if (d < 0) return m_.dim(d);
    return d <= top_layer() ? layers_[d].dim() : 0;
  }

  void add_layer() {
    layers_.push_back(solve_layer(top_layer() + 1));
    verify_layer(layers_.back());
    tables_.clear();
    coordinatizers_.clear();
  }

  // Bracket of tower elements given by coordinates at degrees a and b;
  // the result lives at degree a+b. Both-nonnegative brackets require
  // a+b <= top_layer().
  Vec bracket_deg(int a, const Vec& x, int b, const Vec& y) const {
    if (a < 0 && b < 0) return m_.bracket(a, x, b, y);
    if (a >= 0 && b < 0) return act(a, x, b, y);
    if (a < 0) {
      Vec r = act(b, y, a, x);
      for (auto& c : r) c = -c;
      return r;
    }
    bool flip = a > b;
    if (flip) {
      std::swap(a, b);
      // swap of arguments, handled below through the stored tensor
    }
    const auto& tensor = table(a, b);
    const Vec& xs = flip ? y : x;
    const Vec& ys = flip ? x : y;
    Vec out(space_dim(a + b));
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
      if (xs[i].is_zero()) continue;
      for (int j = 0; j < static_cast<int>(ys.size()); ++j) {
        if (ys[j].is_zero()) continue;
        axpy(out, xs[i] * ys[j], tensor[i][j]);
      }
    }
    if (flip)
      for (auto& c : out) c = -c;
    return out;
  }

  // Action of sum(coords * layer-k basis) on v in g_p.
  Vec act(int k, const Vec& coords, int p, const Vec& v) const {
    const Layer& l = layers_.at(k);
    if (static_cast<int>(coords.size()) != l.dim())
      throw std::invalid_argument("Tower::act: coordinate length mismatch");
    Vec out(space_dim(p + k));
    for (int i = 0; i < l.dim(); ++i) {
      if (coords[i].is_zero()) continue;
      axpy(out, coords[i], l.basis[i].comp.at(p) * v);
    }
    return out;
  }

  ProlongationStatus status() const {
    return layers_.back().dim() == 0 ? ProlongationStatus::terminated
                                     : ProlongationStatus::truncated;
  }

  // Degrees above this bound are cut off rather than zero; empty when the
  // tower terminated by itself.
  std::optional<int> truncation_top() const {
    if (status() == ProlongationStatus::terminated) return std::nullopt;
    return top_layer();
  }

  // The truncated prolongation as a graded Lie algebra on degrees
  // [-depth, last nonzero layer].
  GradedLieAlgebra to_algebra() const {
    int top = top_layer();
    while (top >= 0 && layers_[top].dim() == 0) --top;
    std::map<int, int> dims;
    for (int p : m_.degrees()) dims[p] = m_.dim(p);
    for (int k = 0; k <= top; ++k) dims[k] = layers_[k].dim();
    GradedLieAlgebra g(dims);
    for (const auto& [key, out] : m_.table()) g.set_bracket(key.p, key.i, key.q, key.j, out);
    for (int k = 0; k <= top; ++k)
      for (int i = 0; i < layers_[k].dim(); ++i)
        for (int p : m_.degrees()) {
          if (!g.has_degree(p + k)) continue;
          const Matrix& mat = layers_[k].basis[i].comp.at(p);
          for (int j = 0; j < m_.dim(p); ++j) g.set_bracket(k, i, p, j, mat.col(j));
        }
    for (int a = 0; a <= top; ++a)
      for (int b = a; b <= top && a + b <= top; ++b) {
        const auto& tensor = table(a, b);
        for (int i = 0; i < layers_[a].dim(); ++i)
          for (int j = (a == b ? i + 1 : 0); j < layers_[b].dim(); ++j)
            g.set_bracket(a, i, b, j, tensor[i][j]);
      }
    return g;
  }

private:
  using Tensor = std::vector<std::vector<Vec>>;

  // --- layer solving ------------------------------------------------------

  Layer solve_layer(int k) const {
    Layer out;
    out.k = k;
    int n = m_.dim(-1);
    int param_dim = k == 0 ? n : space_dim(k - 1);
    int unknowns = n * param_dim;
    if (unknowns == 0) return out;

    // forced extension of each unit parameter, plus the residuals that must
    // vanish for the extension to define a derivation-compatible map
    std::vector<std::map<int, Matrix>> unit_comp(unknowns);
    std::vector<Vec> residual_cols(unknowns);

    // the parameter is the g_-1 component, written in the coordinates of the
    // target space (g_-1 itself for k = 0, layer k-1 otherwise)
    std::vector<Matrix> phis(unknowns, Matrix(param_dim, n));
    for (int t = 0; t < unknowns; ++t) {
      phis[t](t / n, t % n) = Rational(1);
      unit_comp[t].emplace(-1, phis[t]);
    }

    for (int p = -1; p >= m_.bottom_degree(); --p) {
      int target = p - 1 + k;  // degree of X([g_p, g_-1])
      int tdim = space_dim(target);
      int src_dim = m_.dim(p - 1);
      bool defines = p - 1 >= m_.bottom_degree() && src_dim > 0;

      // numeric pair matrix A[(i,j)] = coords of [u_i, e_j] in g_(p-1)
      std::vector<std::pair<int, int>> pair_rows;
      for (int i = 0; i < m_.dim(p); ++i)
        for (int j = (p == -1 ? i + 1 : 0); j < n; ++j) pair_rows.emplace_back(i, j);
      if (pair_rows.empty()) continue;

      Matrix a(static_cast<int>(pair_rows.size()), src_dim);
      for (int r = 0; r < static_cast<int>(pair_rows.size()); ++r) {
        auto [i, j] = pair_rows[r];
        Vec lhs = m_.bracket_basis(p, i, -1, j);
        for (int w = 0; w < src_dim; ++w) a(r, w) = lhs[w];
      }

      std::vector<int> selected;
      Matrix t_inv(0, 0);
      if (defines) {
        selected = independent_rows(a, src_dim);
        if (static_cast<int>(selected.size()) != src_dim)
          throw std::logic_error("Tower: base is not fundamental at degree " + std::to_string(p - 1));
        Matrix square(src_dim, src_dim);
        for (int r = 0; r < src_dim; ++r) square.set_row(r, a.row(selected[r]));
        t_inv = *inverse(square);
      }

      std::vector<bool> is_selected(pair_rows.size(), false);
      for (int r : selected) is_selected[r] = true;

      for (int t = 0; t < unknowns; ++t) {
        // RHS[(i,j)] = [X(u_i), e_j] + [u_i, X(e_j)]
        Matrix rhs(static_cast<int>(pair_rows.size()), tdim);
        for (int r = 0; r < static_cast<int>(pair_rows.size()); ++r) {
          auto [i, j] = pair_rows[r];
          Vec row(tdim);
          Vec xu = unit_comp[t].at(p).col(i);
          if (tdim > 0) {
            axpy(row, Rational(1), bracket_deg(p + k, xu, -1, m_.unit(-1, j)));
            Vec xe = phis[t].col(j);  // X(e_j) in the parameter space
            if (k == 0) {
              axpy(row, Rational(1), m_.bracket(p, m_.unit(p, i), -1, xe));
            } else {
              Vec term = act(k - 1, xe, p, m_.unit(p, i));
              axpy(row, Rational(-1), term);  // [u, X e] = -[X e, u]
            }
          }
          rhs.set_row(r, row);
        }
        if (defines) {
          Matrix sel(src_dim, tdim);
          for (int r = 0; r < src_dim; ++r) sel.set_row(r, rhs.row(selected[r]));
          Matrix xt = t_inv * sel;                  // rows: X(w) per basis w of g_(p-1)
          unit_comp[t].emplace(p - 1, xt.transposed());
          for (int r = 0; r < static_cast<int>(pair_rows.size()); ++r) {
            if (is_selected[r]) continue;
            Vec res = rhs.row(r);
            for (int w = 0; w < src_dim; ++w) axpy(res, -a(r, w), xt.row(w));
            for (const Rational& c : res) residual_cols[t].push_back(c);
          }
        } else {
          for (int r = 0; r < static_cast<int>(pair_rows.size()); ++r)
            for (int w = 0; w < tdim; ++w) residual_cols[t].push_back(rhs(r, w));
        }
      }
    }

    // degree-0 restriction to a pseudo-product: phi must preserve e and f
    if (k == 0 && pp_) {
      for (const Subspace* s : {&pp_->e, &pp_->f}) {
        QuotientMap qm = quotient_map(n, *s);
        for (int t = 0; t < unknowns; ++t)
          for (int r = 0; r < s->dim(); ++r) {
            Vec img = qm.projection * (phis[t] * s->basis().row(r));
            for (const Rational& c : img) residual_cols[t].push_back(c);
          }
      }
    }

    std::size_t rows = residual_cols[0].size();
    Matrix constraints(static_cast<int>(rows), unknowns);
    for (int t = 0; t < unknowns; ++t) {
      if (residual_cols[t].size() != rows) throw std::logic_error("Tower: ragged residuals");
      for (std::size_t r = 0; r < rows; ++r) constraints(static_cast<int>(r), t) = residual_cols[t][r];
    }
    Subspace sols = kernel_basis(constraints);

    for (int s = 0; s < sols.dim(); ++s) {
      LayerElement el;
      for (int p : m_.degrees()) {
        Matrix compp(space_dim(p + k), m_.dim(p));
        for (int t = 0; t < unknowns; ++t) {
          const Rational& c = sols.basis()(s, t);
          if (c.is_zero()) continue;
          auto it = unit_comp[t].find(p);
          if (it == unit_comp[t].end()) continue;
          compp = compp + c * it->second;
        }
        el.comp.emplace(p, std::move(compp));
      }
      out.basis.push_back(std::move(el));
    }
    return out;
  }

  static std::vector<int> independent_rows(const Matrix& a, int want) {
    std::vector<int> selected;
    std::vector<Vec> echelon;
    std::vector<int> pivcols;
    for (int r = 0; r < a.rows() && static_cast<int>(selected.size()) < want; ++r) {
      Vec v = a.row(r);
      for (std::size_t s = 0; s < echelon.size(); ++s) {
        const Rational& c = v[pivcols[s]];
        if (!c.is_zero()) axpy(v, -c, echelon[s]);
      }
      int piv = -1;
      for (int c = 0; c < a.cols(); ++c)
        if (!v[c].is_zero()) { piv = c; break; }
      if (piv < 0) continue;
      Rational inv = Rational(1) / v[piv];
      for (auto& c : v) c *= inv;
      echelon.push_back(std::move(v));
      pivcols.push_back(piv);
      selected.push_back(r);
    }
    return selected;
  }

  // Exhaustive derivation-identity check of a freshly solved layer on all
  // basis pairs of m, through the tower's own bracket evaluation.
  void verify_layer(const Layer& l) const {
    for (const LayerElement& el : l.basis) {
      for (int p : m_.degrees())
        for (int q : m_.degrees()) {
          if (q < p) continue;
          for (int i = 0; i < m_.dim(p); ++i)
            for (int j = (p == q ? i + 1 : 0); j < m_.dim(q); ++j) {
              Vec lhs(space_dim(p + q + l.k));
              if (m_.has_degree(p + q)) lhs = el.comp.at(p + q) * m_.bracket_basis(p, i, q, j);
              Vec rhs(space_dim(p + q + l.k));
              axpy(rhs, Rational(1),
                   bracket_deg(p + l.k, el.comp.at(p).col(i), q, m_.unit(q, j)));
              Vec second = bracket_deg(q + l.k, el.comp.at(q).col(j), p, m_.unit(p, i));
              axpy(rhs, Rational(-1), second);
              if (lhs != rhs)
                throw std::logic_error("Tower: solved layer violates the derivation identity");
            }
        }
    }
  }

  // --- bracket tables between nonnegative layers ---------------------------

  const Tensor& table(int a, int b) const {
    if (a > b) throw std::logic_error("Tower::table: ordered pair required");
    if (a + b > top_layer()) throw std::logic_error("Tower::table: beyond computed layers");
    auto key = std::make_pair(a, b);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;

    Tensor tensor(layers_[a].dim(), std::vector<Vec>(layers_[b].dim()));
    for (int i = 0; i < layers_[a].dim(); ++i)
      for (int j = 0; j < layers_[b].dim(); ++j) {
        if (a == b && i == j) {
          tensor[i][j] = Vec(space_dim(a + b));
          continue;
        }
        if (a == b && j < i) {
          Vec v = tensor[j][i];
          for (auto& c : v) c = -c;
          tensor[i][j] = std::move(v);
          continue;
        }
        tensor[i][j] = coordinates_in_layer(a + b, commutator_action(a, i, b, j));
      }
    return tables_.emplace(std::move(key), std::move(tensor)).first->second;
  }

  // action of [X_i^(a), X_j^(b)] on every basis vector of m, flattened
  std::vector<std::pair<int, Vec>> commutator_action(int a, int i, int b, int j) const {
    std::vector<std::pair<int, Vec>> action;  // (source degree, value at p + a + b)
    for (int p : m_.degrees())
      for (int u = 0; u < m_.dim(p); ++u) {
        // [X,Y](u) = [X, [Y, u]] - [Y, [X, u]]
        Vec yu = layers_[b].basis[j].comp.at(p).col(u);
        Vec xu = layers_[a].basis[i].comp.at(p).col(u);
        Vec value(space_dim(p + a + b));
        axpy(value, Rational(1), bracket_deg(a, unit_vec(layers_[a].dim(), i), b + p, yu));
        axpy(value, Rational(-1), bracket_deg(b, unit_vec(layers_[b].dim(), j), a + p, xu));
        action.emplace_back(p, std::move(value));
      }
    return action;
  }

  static Vec unit_vec(int n, int i) {
    Vec v(n);
    v[i] = Rational(1);
    return v;
  }

  // express an action profile in the basis of layer k
  Vec coordinates_in_layer(int k, const std::vector<std::pair<int, Vec>>& action) const {
    const Layer& l = layers_.at(k);
    const Matrix& m = coordinatizer(k);
    Vec flat;
    for (const auto& [p, v] : action) {
      (void)p;
      for (const Rational& c : v) flat.push_back(c);
    }
    auto coords = glat::solve(m, flat);
    if (!coords) throw std::logic_error("Tower: bracket escaped its layer");
    (void)l;
    return *coords;
  }

  const Matrix& coordinatizer(int k) const {
    auto it = coordinatizers_.find(k);
    if (it != coordinatizers_.end()) return it->second;
    const Layer& l = layers_.at(k);
    int rows = 0;
    for (int p : m_.degrees()) rows += m_.dim(p) * space_dim(p + k);
    Matrix m(rows, l.dim());
    for (int s = 0; s < l.dim(); ++s) {
      int r = 0;
      for (int p : m_.degrees()) {
        const Matrix& compp = l.basis[s].comp.at(p);
        for (int u = 0; u < m_.dim(p); ++u)
          for (int c = 0; c < compp.rows(); ++c) m(r++, s) = compp(c, u);
      }
    }
    return coordinatizers_.emplace(k, std::move(m)).first->second;
  }

  GradedLieAlgebra m_;
  std::optional<PseudoProduct> pp_;
  std::vector<Layer> layers_;
  mutable std::map<std::pair<int, int>, Tensor> tables_;
  mutable std::map<int, Matrix> coordinatizers_;
};

// ---------------------------------------------------------------------------
// Module operations

inline Layer derivations_degree0(const GradedLieAlgebra& m) {
  return Tower(m, std::nullopt).layer(0);
}

inline Layer restricted_derivations_degree0(const GradedLieAlgebra& m, const PseudoProduct& pp) {
  return Tower(m, pp).layer(0);
}

// Layers are pairwise independent maps by construction; transitivity of a
// tower amounts to each layer basis being linearly independent as maps.
inline bool verify_transitive(const std::vector<Layer>& layers) {
  for (const Layer& l : layers) {
    if (l.dim() == 0) continue;
    int cols = 0;
    for (const auto& [p, mat] : l.basis[0].comp) cols += mat.rows() * mat.cols();
    Matrix flat(l.dim(), cols);
    for (int s = 0; s < l.dim(); ++s) {
      int c = 0;
      for (const auto& [p, mat] : l.basis[s].comp)
        for (int i = 0; i < mat.rows(); ++i)
          for (int j = 0; j < mat.cols(); ++j) flat(s, c++) = mat(i, j);
    }
    if (rref(flat).rank != l.dim()) return false;
  }
  return true;
}

inline bool verify_transitive(const Tower& t) { return verify_transitive(t.layers()); }

// Prolongation layers up to degree K, stopping early at the first zero layer
// (all higher layers are then zero by transitivity).
inline Tower truncated_prolongation(const GradedLieAlgebra& m,
                                    std::optional<PseudoProduct> pp, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("truncated_prolongation: max_degree >= 0");
  Tower t(m, std::move(pp));
  while (t.top_layer() < max_degree && t.layer(t.top_layer()).dim() > 0) t.add_layer();
  return t;
}

}  // namespace glat

#endif
