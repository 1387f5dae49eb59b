#ifndef GLAT_CONSTRUCT_HPP
#define GLAT_CONSTRUCT_HPP

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glat/fgla.hpp"
#include "glat/hall.hpp"

namespace glat {

// ---------------------------------------------------------------------------
// Free fundamental graded Lie algebra of type (n, mu): the free Lie algebra
// on n generators, graded with generators in degree -1 and cut below -mu.

inline FreeFgla free_fgla(int n, int mu) {
  if (n < 2) throw std::invalid_argument("free_fgla: n >= 2 required (depth mu is unreachable otherwise)");
  if (mu < 2) throw std::invalid_argument("free_fgla: mu >= 2 required");
  auto hall = std::make_shared<HallBasis>(n, mu);
  std::map<int, int> dims;
  std::map<int, std::vector<std::string>> labels;
  for (int d = 1; d <= mu; ++d) {
    dims[-d] = hall->count(d);
    std::vector<std::string> names;
    for (int id : hall->degree_words(d)) names.push_back(hall->to_string(id));
    labels[-d] = std::move(names);
  }
  GradedLieAlgebra g(dims, labels);
  for (int a = 1; a <= mu; ++a)
    for (int b = a; a + b <= mu; ++b) {
      const auto& wa = hall->degree_words(a);
      const auto& wb = hall->degree_words(b);
      for (int i = 0; i < static_cast<int>(wa.size()); ++i)
        for (int j = (a == b ? i + 1 : 0); j < static_cast<int>(wb.size()); ++j)
          g.set_bracket(-a, i, -b, j, hall->coordinates(hall->bracket(wa[i], wb[j]), a + b));
    }
  return FreeFgla{std::move(g), FreeRealization{std::move(hall), {}}};
}

// ---------------------------------------------------------------------------
// Universal fundamental graded Lie algebra b(V, mu), built by the literal
// wedge-space recursion: b_-1 = V, b_-2 = Lambda^2 V, and for k <= -3
//
//   c_k = sum_{r+s=k} b_r ^ b_s,   b_k = c_k / A_k,
//
// where A_k is spanned by the cyclic sums  sum_cyc B(X ^ Y) ^ Z  over
// homogeneous triples of total degree k. The two constructions of the same
// algebra (this one and free_fgla) cross-audit each other in the tests.

namespace detail {

// Indexing of the wedge basis of c_k: pairs of basis slots ((r,i),(s,j)) with
// r+s = k and (r,i) < (s,j) lexicographically.
struct WedgeSpace {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> index;

  void add(int r, int i, int s, int j) {
    pairs.push_back({{r, i}, {s, j}});
    index[pairs.back()] = static_cast<int>(pairs.size()) - 1;
  }
  int dim() const { return static_cast<int>(pairs.size()); }

  // coordinate of x_(r,i) ^ x_(s,j), with sign; -1 when the slots coincide
  std::pair<int, int> slot(int r, int i, int s, int j) const {
    if (std::make_pair(r, i) == std::make_pair(s, j)) return {-1, 0};
    bool flip = std::make_pair(s, j) < std::make_pair(r, i);
    auto key = flip ? std::make_pair(std::make_pair(s, j), std::make_pair(r, i))
                    : std::make_pair(std::make_pair(r, i), std::make_pair(s, j));
    auto it = index.find(key);
    if (it == index.end()) return {-1, 0};
    return {it->second, flip ? -1 : 1};
  }
};

}  // namespace detail

inline GradedLieAlgebra universal_fgla(int n, int mu) {
  if (n < 2 || mu < 2) throw std::invalid_argument("universal_fgla: n, mu >= 2 required");
  std::map<int, int> dims;
  dims[-1] = n;
  // projection B_k : c_k -> b_k per degree, plus the wedge indexing of c_k
  std::map<int, detail::WedgeSpace> wedges;
  std::map<int, Matrix> proj;

  auto build_wedge = [&](int k) {
    detail::WedgeSpace w;
    // pairs ((r,i),(s,j)) with (r,i) < (s,j): r < s, or r == s and i < j
    for (int r = k + 1; r <= -1; ++r) {
      int s = k - r;
      if (!dims.count(r) || !dims.count(s)) continue;
      if (r < s) {
        for (int i = 0; i < dims[r]; ++i)
          for (int j = 0; j < dims[s]; ++j) w.add(r, i, s, j);
      } else if (r == s) {
        for (int i = 0; i < dims[r]; ++i)
          for (int j = i + 1; j < dims[s]; ++j) w.add(r, i, s, j);
      }
    }
    return w;
  };

  // b_-2 = Lambda^2 V with B_-2 the identity
  wedges.emplace(-2, build_wedge(-2));
  dims[-2] = wedges.at(-2).dim();
  proj.emplace(-2, Matrix::identity(dims[-2]));

  // bracket of basis vectors through the stored projections
  auto bracket_basis = [&](int r, int i, int s, int j) -> std::pair<int, Vec> {
    int k = r + s;
    if (k < -mu || !wedges.count(k)) return {k, Vec(dims.count(k) ? dims[k] : 0)};
    auto [slot, sign] = wedges.at(k).slot(r, i, s, j);
    Vec c(wedges.at(k).dim());
    if (slot >= 0) c[slot] = Rational(sign);
    return {k, proj.at(k) * c};
  };

  for (int k = -3; k >= -mu; --k) {
    detail::WedgeSpace w = build_wedge(k);
    // spanning set of A_k: cyclic Jacobi sums over homogeneous basis triples
    std::vector<Vec> span;
    for (int a = -1; a >= k + 2; --a)
      for (int b = a; a + b >= k + 1; --b) {
        int c = k - a - b;
        if (c > b || !dims.count(a) || !dims.count(b) || !dims.count(c)) continue;
        for (int ia = 0; ia < dims[a]; ++ia)
          for (int ib = (a == b ? ia + 1 : 0); ib < dims[b]; ++ib)
            for (int ic = ((b == c) ? ib + 1 : 0); ic < dims[c]; ++ic) {
              Vec v(w.dim());
              // sum_cyc B(x ^ y) ^ z over ((a,ia),(b,ib),(c,ic))
              struct Slot { int d, idx; };
              Slot xs[3] = {{a, ia}, {b, ib}, {c, ic}};
              for (int t = 0; t < 3; ++t) {
                const Slot& x = xs[t];
                const Slot& y = xs[(t + 1) % 3];
                const Slot& z = xs[(t + 2) % 3];
                auto [bd, bv] = bracket_basis(x.d, x.idx, y.d, y.idx);
                for (int u = 0; u < static_cast<int>(bv.size()); ++u) {
                  if (bv[u].is_zero()) continue;
                  auto [slot, sign] = w.slot(bd, u, z.d, z.idx);
                  if (slot >= 0) v[slot] += Rational(sign) * bv[u];
                }
              }
              if (!is_zero_vec(v)) span.push_back(std::move(v));
            }
      }
    Subspace a_k = Subspace::from_spanning(w.dim(), span);
    QuotientMap qm = quotient_map(w.dim(), a_k);
    wedges.emplace(k, std::move(w));
    dims[k] = qm.complement.dim();
    proj.emplace(k, std::move(qm.projection));
  }

  GradedLieAlgebra g(dims);
  for (int r = -1; r >= -mu; --r)
    for (int s = r; r + s >= -mu; --s) {
      if (!dims.count(s)) continue;
      for (int i = 0; i < dims[r]; ++i)
        for (int j = (r == s ? i + 1 : 0); j < dims[s]; ++j) {
          auto [k, v] = bracket_basis(r, i, s, j);
          if (static_cast<int>(v.size()) == g.dim(k)) g.set_bracket(r, i, s, j, v);
        }
    }
  return g;
}

// ---------------------------------------------------------------------------
// Free pseudo-product algebra of type (m, n, mu): quotient of the free
// algebra on e + f by the graded ideal generated by [e,e] + [f,f].

inline FreePseudoProductFgla free_pseudoproduct_fgla(int m, int n, int mu) {
  if (m < 1 || n < 1) throw std::invalid_argument("free_pseudoproduct_fgla: m, n >= 1 required");
  if (mu < 2) throw std::invalid_argument("free_pseudoproduct_fgla: mu >= 2 required");
  FreeFgla cover = free_fgla(m + n, mu);
  const GradedLieAlgebra& free_alg = cover.algebra;

  std::vector<Vec> gen_rows;
  auto push_plane_brackets = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j)
        gen_rows.push_back(free_alg.bracket_basis(-1, i, -1, j));
  };
  push_plane_brackets(0, m);
  push_plane_brackets(m, m + n);

  std::map<int, Subspace> gens;
  Subspace s2 = Subspace::from_spanning(free_alg.dim(-2), gen_rows);
  if (s2.dim() > 0) gens.emplace(-2, s2);
  std::map<int, Subspace> ideal = graded_ideal_generated_by(free_alg, gens);
  QuotientResult q = quotient(free_alg, ideal);

  // the ideal misses degree -1, so e and f are the coordinate blocks of g_-1
  std::vector<Vec> e_rows, f_rows;
  for (int i = 0; i < m; ++i) e_rows.push_back(q.projection.apply(-1, free_alg.unit(-1, i)));
  for (int i = 0; i < n; ++i) f_rows.push_back(q.projection.apply(-1, free_alg.unit(-1, m + i)));
  PseudoProduct pp{Subspace::from_spanning(m + n, e_rows), Subspace::from_spanning(m + n, f_rows)};

  if (q.algebra.depth() != mu)
    throw std::logic_error("free_pseudoproduct_fgla: depth collapsed below mu");

  FreeRealization real{cover.real.hall, q.section};
  return FreePseudoProductFgla{std::move(q.algebra), std::move(pp), std::move(real),
                               std::move(q.projection)};
}

// ---------------------------------------------------------------------------
// Contact algebra of order k and bidegree (n, m):
//   g_-1 = V + (W tensor S^k V*),  g_p = W tensor S^(k+p+1) V*  (p <= -2),
// with [w x s, v] = w x (d_v s). Symmetric powers are realized on monomials
// in the dual coordinates, and contraction by v_i acts as the partial
// derivative d_i, so all structure constants are integers.

namespace detail {

inline std::vector<std::vector<int>> monomials_of_degree(int vars, int total) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> cur(vars, 0);
  // lexicographic from high leading exponents down
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == vars - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, rest - e);
    }
  };
  if (vars == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, total);
  return out;
}

inline std::string monomial_label(const std::vector<int>& exp, const std::string& var) {
  std::string s;
  for (std::size_t i = 0; i < exp.size(); ++i)
    for (int rep = 0; rep < exp[i]; ++rep) s += var + std::to_string(i + 1);
  return s.empty() ? std::string("1") : s;
}

}  // namespace detail

inline FreePseudoProductFgla contact_algebra(int k, int n, int m) {
  if (k < 1 || n < 1 || m < 1) throw std::invalid_argument("contact_algebra: k, n, m >= 1 required");
  using detail::monomials_of_degree;

  // per degree: the W x S^r V* block is indexed by (a, monomial)
  std::map<int, std::vector<std::vector<int>>> mons;  // degree -> exponent list
  std::map<int, std::map<std::vector<int>, int>> mon_index;
  std::map<int, int> dims;
  std::map<int, std::vector<std::string>> labels;
  for (int p = -1; p >= -k - 1; --p) {
    int r = k + p + 1;
    auto ms = monomials_of_degree(n, r);
    int block = m * static_cast<int>(ms.size());
    dims[p] = (p == -1 ? n : 0) + block;
    std::vector<std::string> names;
    if (p == -1)
      for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    for (int a = 0; a < m; ++a)
      for (const auto& e : ms)
        names.push_back("w" + std::to_string(a + 1) + "." + detail::monomial_label(e, "s"));
    labels[p] = std::move(names);
    for (int t = 0; t < static_cast<int>(ms.size()); ++t) mon_index[p][ms[t]] = t;
    mons[p] = std::move(ms);
  }

  GradedLieAlgebra g(dims, labels);
  // [ (a, beta) at degree p , v_i ] = beta_i * (a, beta - e_i) at degree p-1
  for (int p = -1; p >= -k; --p) {
    int off_p = (p == -1 ? n : 0);
    int mcount = static_cast<int>(mons[p].size());
    for (int a = 0; a < m; ++a)
      for (int t = 0; t < mcount; ++t) {
        const auto& beta = mons[p][t];
        for (int i = 0; i < n; ++i) {
          if (beta[i] == 0) continue;
          std::vector<int> down = beta;
          --down[i];
          int off_q = (p - 1 == -1 ? n : 0);
          Vec out(g.dim(p - 1));
          out[off_q + a * static_cast<int>(mons[p - 1].size()) + mon_index[p - 1].at(down)] =
              Rational(beta[i]);
          g.set_bracket(p, off_p + a * mcount + t, -1, i, out);
        }
      }
  }

  std::vector<Vec> e_rows, f_rows;
  for (int i = 0; i < n; ++i) e_rows.push_back(g.unit(-1, i));
  for (int t = n; t < g.dim(-1); ++t) f_rows.push_back(g.unit(-1, t));
  PseudoProduct pp{Subspace::from_spanning(g.dim(-1), e_rows),
                   Subspace::from_spanning(g.dim(-1), f_rows)};
  return FreePseudoProductFgla{std::move(g), std::move(pp), FreeRealization{}, GradedMap{}};
}

// ---------------------------------------------------------------------------
// Explicit model of the free pseudo-product algebra of type (m, n, 3):
//   g_-1 = V + W, g_-2 = V x W, g_-3 = (S^2 V x W) + (V x S^2 W),
// with [v, w] = v x w, [v, v' x w] = (v o v') x w, [v x w, w'] = v x (w o w').
// The symmetric product o is the symmetrization without 1/2: on basis
// vectors, v_i o v_j is the basis monomial for i != j and twice it for i = j.

inline FreePseudoProductFgla model_mn3(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("model_mn3: m, n >= 1 required");
  auto sym_index = [](int dim, int i, int j) {
    // position of the unordered pair (i <= j) in row-major upper-triangular order
    if (i > j) std::swap(i, j);
    return i * dim - i * (i - 1) / 2 + (j - i);
  };
  int s2v = m * (m + 1) / 2, s2w = n * (n + 1) / 2;
  std::map<int, int> dims{{-1, m + n}, {-2, m * n}, {-3, s2v * n + m * s2w}};

  std::map<int, std::vector<std::string>> labels;
  {
    std::vector<std::string> l1;
    for (int i = 1; i <= m; ++i) l1.push_back("v" + std::to_string(i));
    for (int a = 1; a <= n; ++a) l1.push_back("w" + std::to_string(a));
    labels[-1] = l1;
    std::vector<std::string> l2;
    for (int i = 1; i <= m; ++i)
      for (int a = 1; a <= n; ++a) l2.push_back("v" + std::to_string(i) + "w" + std::to_string(a));
    labels[-2] = l2;
    std::vector<std::string> l3;
    for (int i = 1; i <= m; ++i)
      for (int j = i; j <= m; ++j)
        for (int a = 1; a <= n; ++a)
          l3.push_back("v" + std::to_string(i) + "v" + std::to_string(j) + "w" + std::to_string(a));
    for (int i = 1; i <= m; ++i)
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
          l3.push_back("v" + std::to_string(i) + "w" + std::to_string(a) + "w" + std::to_string(b));
    labels[-3] = l3;
  }

  GradedLieAlgebra g(dims, labels);
  auto vw = [&](int i, int a) { return i * n + a; };                      // V x W slot
  auto vvw = [&](int i, int j, int a) { return sym_index(m, i, j) * n + a; };  // S2V x W slot
  auto vww = [&](int i, int a, int b) { return s2v * n + i * s2w + sym_index(n, a, b); };

  // [v_i, w_a] = v_i x w_a
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < n; ++a) {
      Vec out(m * n);
      out[vw(i, a)] = Rational(1);
      g.set_bracket(-1, i, -1, m + a, out);
    }
  // [v_j, v_i x w_a] = (v_j o v_i) x w_a ; [v_i x w_a, w_b] = v_i x (w_a o w_b)
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < n; ++a) {
      for (int j = 0; j < m; ++j) {
        Vec out(g.dim(-3));
        out[vvw(j, i, a)] = Rational(i == j ? 2 : 1);
        g.set_bracket(-1, j, -2, vw(i, a), out);
      }
      for (int b = 0; b < n; ++b) {
        Vec out(g.dim(-3));
        out[vww(i, a, b)] = Rational(a == b ? 2 : 1);
        g.set_bracket(-2, vw(i, a), -1, m + b, out);
      }
    }

  std::vector<Vec> e_rows, f_rows;
  for (int i = 0; i < m; ++i) e_rows.push_back(g.unit(-1, i));
  for (int a = 0; a < n; ++a) f_rows.push_back(g.unit(-1, m + a));
  PseudoProduct pp{Subspace::from_spanning(m + n, e_rows), Subspace::from_spanning(m + n, f_rows)};
  return FreePseudoProductFgla{std::move(g), std::move(pp), FreeRealization{}, GradedMap{}};
}

}  // namespace glat

#endif
