#ifndef GLAT_FGLA_HPP
#define GLAT_FGLA_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glat/hall.hpp"
#include "glat/matrix.hpp"
#include "glat/subspace.hpp"

namespace glat {

struct BracketKey {
  int p, i, q, j;
  friend bool operator<(const BracketKey& a, const BracketKey& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.i != b.i) return a.i < b.i;
    if (a.q != b.q) return a.q < b.q;
    return a.j < b.j;
  }
};

// Finite graded Lie algebra presented by per-degree bases and exact structure
// constants. Only the triangle (p,i) < (q,j) is stored; the other half is
// derived by antisymmetry, and a bracket landing in an unstored degree is
// zero. Values are immutable once construction code has filled the table.
class GradedLieAlgebra {
public:
  GradedLieAlgebra() = default;
  explicit GradedLieAlgebra(std::map<int, int> dims,
                            std::map<int, std::vector<std::string>> labels = {}) {
    for (const auto& [p, d] : dims) {
      if (d < 0) throw std::invalid_argument("GradedLieAlgebra: negative dimension");
      if (d == 0) continue;
      dims_[p] = d;
      degrees_.push_back(p);
    }
    for (auto& [p, names] : labels) {
      if (!dims_.count(p)) continue;
      if (static_cast<int>(names.size()) != dims_.at(p))
        throw std::invalid_argument("GradedLieAlgebra: label count mismatch");
      labels_[p] = std::move(names);
    }
    for (const auto& [p, d] : dims_) {
      if (labels_.count(p)) continue;
      std::vector<std::string> names;
      names.reserve(d);
      for (int k = 0; k < d; ++k)
        names.push_back("b" + std::to_string(p) + "_" + std::to_string(k));
      labels_[p] = std::move(names);
    }
  }

  const std::vector<int>& degrees() const { return degrees_; }
  bool has_degree(int p) const { return dims_.count(p) != 0; }
  int dim(int p) const {
    auto it = dims_.find(p);
    return it == dims_.end() ? 0 : it->second;
  }
  int total_dim() const {
    int t = 0;
    for (const auto& [p, d] : dims_) t += d;
    return t;
  }
  int bottom_degree() const { return degrees_.empty() ? 0 : degrees_.front(); }
  int top_degree() const { return degrees_.empty() ? 0 : degrees_.back(); }
  // largest mu with a nonzero component of degree -mu
  int depth() const { return -bottom_degree(); }
  const std::vector<std::string>& labels(int p) const { return labels_.at(p); }

  void set_bracket(int p, int i, int q, int j, Vec out) {
    check_index(p, i);
    check_index(q, j);
    if (!has_degree(p + q)) {
      if (!is_zero_vec(out)) throw std::invalid_argument("set_bracket: target degree not stored");
      return;
    }
    if (static_cast<int>(out.size()) != dim(p + q))
      throw std::invalid_argument("set_bracket: wrong output length");
    if (is_zero_vec(out)) return;
    if (p == q && i == j) throw std::invalid_argument("set_bracket: [x,x] must be zero");
    BracketKey key{p, i, q, j};
    if (std::make_pair(q, j) < std::make_pair(p, i)) {
      key = BracketKey{q, j, p, i};
      for (auto& c : out) c = -c;
    }
    table_[key] = std::move(out);
  }

  // [b^p_i, b^q_j] as coordinates in degree p+q (all zero when that degree is
  // not stored).
  Vec bracket_basis(int p, int i, int q, int j) const {
    Vec out(dim(p + q));
    if ((p == q && i == j) || out.empty()) return out;
    bool flip = std::make_pair(q, j) < std::make_pair(p, i);
    auto it = table_.find(flip ? BracketKey{q, j, p, i} : BracketKey{p, i, q, j});
    if (it == table_.end()) return out;
    out = it->second;
    if (flip)
      for (auto& c : out) c = -c;
    return out;
  }

  Vec bracket(int p, const Vec& x, int q, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim(p) || static_cast<int>(y.size()) != dim(q))
      throw std::invalid_argument("bracket: coordinate length mismatch");
    Vec out(dim(p + q));
    if (out.empty()) return out;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < static_cast<int>(y.size()); ++j) {
        if (y[j].is_zero()) continue;
        Vec b = bracket_basis(p, i, q, j);
        axpy(out, x[i] * y[j], b);
      }
    }
    return out;
  }

  const std::map<BracketKey, Vec>& table() const { return table_; }

  Vec unit(int p, int i) const {
    check_index(p, i);
    Vec e(dim(p));
    e[i] = Rational(1);
    return e;
  }

private:
  void check_index(int p, int i) const {
    if (!has_degree(p) || i < 0 || i >= dim(p))
      throw std::invalid_argument("GradedLieAlgebra: basis index out of range");
  }

  std::vector<int> degrees_;  // ascending
  std::map<int, int> dims_;
  std::map<int, std::vector<std::string>> labels_;
  std::map<BracketKey, Vec> table_;
};

// ---------------------------------------------------------------------------
// Structural predicates

struct JacobiReport {
  bool pass = true;
  // witness triple (degree, index) when pass is false
  int p = 0, i = 0, q = 0, j = 0, r = 0, k = 0;
  Vec residual;
};

// Exact Jacobi check over all basis triples. For an algebra truncated above
// at `truncation_top`, triples whose intermediate brackets would land beyond
// the truncation are skipped (those brackets are cut off, not zero).
inline JacobiReport check_jacobi(const GradedLieAlgebra& g,
                                 std::optional<int> truncation_top = std::nullopt) {
  const auto& degs = g.degrees();
  auto in_range = [&](int d) { return !truncation_top || d <= *truncation_top; };
  for (std::size_t a = 0; a < degs.size(); ++a)
    for (std::size_t b = a; b < degs.size(); ++b)
      for (std::size_t c = b; c < degs.size(); ++c) {
        int dp = degs[a], dq = degs[b], dr = degs[c];
        if (!in_range(dp + dq) || !in_range(dq + dr) || !in_range(dp + dr) ||
            !in_range(dp + dq + dr))
          continue;
        int out_dim = g.dim(dp + dq + dr);
        if (out_dim == 0) continue;
        for (int i = 0; i < g.dim(dp); ++i)
          for (int j = (dp == dq ? i : 0); j < g.dim(dq); ++j)
            for (int k = (dq == dr ? j : 0); k < g.dim(dr); ++k) {
              Vec sum(out_dim);
              axpy(sum, Rational(1), g.bracket(dp + dq, g.bracket_basis(dp, i, dq, j), dr, g.unit(dr, k)));
              axpy(sum, Rational(1), g.bracket(dq + dr, g.bracket_basis(dq, j, dr, k), dp, g.unit(dp, i)));
              axpy(sum, Rational(1), g.bracket(dp + dr, g.bracket_basis(dr, k, dp, i), dq, g.unit(dq, j)));
              if (!is_zero_vec(sum))
                return JacobiReport{false, dp, i, dq, j, dr, k, std::move(sum)};
            }
      }
  return JacobiReport{};
}

// Fundamental: negatively graded, contiguous degrees -1..-mu, and
// [g_p, g_-1] spans g_(p-1) for every stored p <= -1.
inline bool is_fundamental(const GradedLieAlgebra& g) {
  if (g.degrees().empty() || g.top_degree() != -1) return false;
  for (int p = -1; p >= g.bottom_degree(); --p)
    if (!g.has_degree(p)) return false;
  int n = g.dim(-1);
  for (int p = -1; p > g.bottom_degree(); --p) {
    std::vector<Vec> rows;
    for (int i = 0; i < g.dim(p); ++i)
      for (int j = 0; j < n; ++j) rows.push_back(g.bracket_basis(p, i, -1, j));
    if (Subspace::from_spanning(g.dim(p - 1), rows).dim() != g.dim(p - 1)) return false;
  }
  return true;
}

// Kernel of x -> [x, .]|g_-1 on g_-1 is zero.
inline bool is_nondegenerate(const GradedLieAlgebra& g) {
  int n = g.dim(-1);
  int d2 = g.dim(-2);
  Matrix m(n * d2, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      Vec b = g.bracket_basis(-1, i, -1, j);
      for (int t = 0; t < d2; ++t) m(j * d2 + t, i) = b[t];
    }
  return kernel_basis(m).dim() == 0;
}

// {X in g_-1 : [X, g_-2] = 0}
inline Subspace centralizer_of_gm2_in_gm1(const GradedLieAlgebra& g) {
  if (g.depth() < 2) throw std::invalid_argument("centralizer: depth >= 2 required");
  int n = g.dim(-1), d2 = g.dim(-2), d3 = g.dim(-3);
  Matrix m(d2 * d3, n);
  for (int j = 0; j < d2; ++j)
    for (int i = 0; i < n; ++i) {
      Vec b = g.bracket_basis(-1, i, -2, j);
      for (int t = 0; t < d3; ++t) m(j * d3 + t, i) = b[t];
    }
  return kernel_basis(m);
}

// ---------------------------------------------------------------------------
// Ideals, quotients, subalgebras

// Smallest graded ideal containing the given homogeneous subspaces, computed
// by a worklist to fixpoint. Degrees absent from the result are zero.
inline std::map<int, Subspace> graded_ideal_generated_by(
    const GradedLieAlgebra& g, const std::map<int, Subspace>& generators) {
  std::map<int, Subspace> ideal;
  std::vector<std::pair<int, Vec>> work;
  for (const auto& [p, s] : generators) {
    if (!g.has_degree(p)) throw std::invalid_argument("ideal: generator degree not stored");
    if (s.ambient_dim() != g.dim(p)) throw std::invalid_argument("ideal: ambient mismatch");
  }
  auto insert = [&](int p, const Vec& v) {
    if (is_zero_vec(v)) return;
    auto it = ideal.find(p);
    if (it == ideal.end()) {
      ideal.emplace(p, Subspace::from_spanning(g.dim(p), {v}));
      work.emplace_back(p, v);
      return;
    }
    if (it->second.contains(v)) return;
    it->second = sum(it->second, Subspace::from_spanning(g.dim(p), {v}));
    work.emplace_back(p, v);
  };
  for (const auto& [p, s] : generators)
    for (int r = 0; r < s.dim(); ++r) insert(p, s.basis().row(r));
  while (!work.empty()) {
    auto [p, v] = work.back();
    work.pop_back();
    for (int q : g.degrees()) {
      if (!g.has_degree(p + q)) continue;
      for (int j = 0; j < g.dim(q); ++j) insert(p + q, g.bracket(p, v, q, g.unit(q, j)));
    }
  }
  return ideal;
}

// Degree-shifted graded linear map, stored as one matrix per source degree.
class GradedMap {
public:
  GradedMap() = default;
  GradedMap(int shift, std::map<int, Matrix> comps) : shift_(shift), comps_(std::move(comps)) {}

  int shift() const { return shift_; }
  bool has_component(int p) const { return comps_.count(p) != 0; }
  const Matrix& component(int p) const {
    auto it = comps_.find(p);
    if (it == comps_.end()) throw std::invalid_argument("GradedMap: no component at degree");
    return it->second;
  }
  const std::map<int, Matrix>& components() const { return comps_; }

  Vec apply(int p, const Vec& x) const { return component(p) * x; }

  // this(inner(.)): valid when the inner map's targets line up with this
  // map's sources.
  GradedMap compose(const GradedMap& inner) const {
    std::map<int, Matrix> comps;
    for (const auto& [p, m] : inner.comps_) comps.emplace(p, component(p + inner.shift_) * m);
    return GradedMap(shift_ + inner.shift_, std::move(comps));
  }

  bool bijective() const {
    for (const auto& [p, m] : comps_)
      if (m.rows() != m.cols() || !inverse(m)) return false;
    return true;
  }

  GradedMap inverse_map() const {
    if (shift_ != 0) throw std::invalid_argument("GradedMap: only degree-0 maps invert");
    std::map<int, Matrix> comps;
    for (const auto& [p, m] : comps_) {
      auto inv = inverse(m);
      if (!inv) throw std::invalid_argument("GradedMap: component not invertible");
      comps.emplace(p, std::move(*inv));
    }
    return GradedMap(0, std::move(comps));
  }

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.shift_ == b.shift_ && a.comps_ == b.comps_;
  }

private:
  int shift_ = 0;
  std::map<int, Matrix> comps_;
};

struct HomWitness {
  int p, i, q, j;
  Vec expected, actual;
};

// Exact bracket-compatibility check of a degree-0 map on all basis pairs.
inline std::optional<HomWitness> hom_defect(const GradedMap& f, const GradedLieAlgebra& src,
                                            const GradedLieAlgebra& tgt) {
  for (int p : src.degrees())
    for (int q : src.degrees()) {
      if (std::make_pair(q, 0) < std::make_pair(p, 0)) continue;
      for (int i = 0; i < src.dim(p); ++i)
        for (int j = (p == q ? i + 1 : 0); j < src.dim(q); ++j) {
          Vec lhs;
          if (src.has_degree(p + q)) {
            lhs = f.has_component(p + q) ? f.apply(p + q, src.bracket_basis(p, i, q, j))
                                         : Vec(tgt.dim(p + q));
          } else {
            lhs = Vec(tgt.dim(p + q));
          }
          Vec rhs = tgt.bracket(p, f.apply(p, src.unit(p, i)), q, f.apply(q, src.unit(q, j)));
          if (lhs != rhs) return HomWitness{p, i, q, j, std::move(rhs), std::move(lhs)};
        }
    }
  return std::nullopt;
}

struct QuotientResult {
  GradedLieAlgebra algebra;
  GradedMap projection;               // degree 0, surjective, kernel = ideal
  std::map<int, Matrix> section;      // rows: preimages of the quotient basis
  std::map<int, Subspace> ideal;
};

// Factor algebra by a graded ideal. Rejects input that is not bracket-closed.
inline QuotientResult quotient(const GradedLieAlgebra& g, const std::map<int, Subspace>& ideal) {
  for (const auto& [p, s] : ideal) {
    if (!g.has_degree(p) || s.ambient_dim() != g.dim(p))
      throw std::invalid_argument("quotient: ideal component shape mismatch");
    for (int r = 0; r < s.dim(); ++r)
      for (int q : g.degrees())
        for (int j = 0; j < g.dim(q); ++j) {
          Vec w = g.bracket(p, s.basis().row(r), q, g.unit(q, j));
          if (w.empty()) continue;
          auto it = ideal.find(p + q);
          bool ok = it == ideal.end() ? is_zero_vec(w) : it->second.contains(w);
          if (!ok) throw std::invalid_argument("quotient: input is not a graded ideal");
        }
  }

  std::map<int, QuotientMap> qmaps;
  std::map<int, int> new_dims;
  std::map<int, std::vector<std::string>> new_labels;
  for (int p : g.degrees()) {
    auto it = ideal.find(p);
    Subspace sub = it == ideal.end() ? Subspace::zero(g.dim(p)) : it->second;
    QuotientMap qm = quotient_map(g.dim(p), sub);
    new_dims[p] = qm.complement.dim();
    std::vector<std::string> names;
    for (int r = 0; r < qm.complement.dim(); ++r)
      names.push_back(g.labels(p)[qm.complement.pivots()[r]]);
    new_labels[p] = std::move(names);
    qmaps.emplace(p, std::move(qm));
  }

  GradedLieAlgebra out(new_dims, new_labels);
  for (int p : out.degrees())
    for (int q : out.degrees()) {
      if (std::make_pair(q, 0) < std::make_pair(p, 0)) continue;
      if (!out.has_degree(p + q)) continue;
      const QuotientMap& qp = qmaps.at(p);
      const QuotientMap& qq = qmaps.at(q);
      for (int i = 0; i < out.dim(p); ++i)
        for (int j = (p == q ? i + 1 : 0); j < out.dim(q); ++j) {
          Vec w = g.bracket(p, qp.complement.basis().row(i), q, qq.complement.basis().row(j));
          out.set_bracket(p, i, q, j, qmaps.at(p + q).projection * w);
        }
    }

  std::map<int, Matrix> proj_comps, sections;
  std::map<int, Subspace> full_ideal;
  for (int p : g.degrees()) {
    proj_comps.emplace(p, qmaps.at(p).projection);
    sections.emplace(p, qmaps.at(p).complement.basis());
    auto it = ideal.find(p);
    full_ideal.emplace(p, it == ideal.end() ? Subspace::zero(g.dim(p)) : it->second);
  }
  return QuotientResult{std::move(out), GradedMap(0, std::move(proj_comps)), std::move(sections),
                        std::move(full_ideal)};
}

struct SubalgebraResult {
  GradedLieAlgebra algebra;
  std::map<int, Subspace> embedding;  // component of the subalgebra in each degree
};

// Smallest graded subalgebra containing W (a subspace of g_-1), with the
// induced brackets in the canonical basis of each component.
inline SubalgebraResult subalgebra_generated_by(const GradedLieAlgebra& g, const Subspace& W) {
  if (W.ambient_dim() != g.dim(-1)) throw std::invalid_argument("subalgebra: W must sit in g_-1");
  std::map<int, Subspace> comp;
  comp.emplace(-1, W);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto it = comp.begin(); it != comp.end(); ++it)
      for (auto jt = comp.begin(); jt != comp.end(); ++jt) {
        int p = it->first, q = jt->first;
        if (!g.has_degree(p + q)) continue;
        for (int r = 0; r < it->second.dim(); ++r)
          for (int s = 0; s < jt->second.dim(); ++s) {
            Vec w = g.bracket(p, it->second.basis().row(r), q, jt->second.basis().row(s));
            if (is_zero_vec(w)) continue;
            auto slot = comp.find(p + q);
            if (slot == comp.end()) {
              comp.emplace(p + q, Subspace::from_spanning(g.dim(p + q), {w}));
              grew = true;
            } else if (!slot->second.contains(w)) {
              slot->second = sum(slot->second, Subspace::from_spanning(g.dim(p + q), {w}));
              grew = true;
            }
          }
      }
  }

  std::map<int, int> dims;
  for (const auto& [p, s] : comp) dims[p] = s.dim();
  GradedLieAlgebra out(dims);
  for (const auto& [p, sp] : comp)
    for (const auto& [q, sq] : comp) {
      if (std::make_pair(q, 0) < std::make_pair(p, 0)) continue;
      if (!out.has_degree(p + q)) continue;
      for (int i = 0; i < sp.dim(); ++i)
        for (int j = (p == q ? i + 1 : 0); j < sq.dim(); ++j) {
          Vec w = g.bracket(p, sp.basis().row(i), q, sq.basis().row(j));
          auto coords = comp.at(p + q).coordinates(w);
          if (!coords) throw std::logic_error("subalgebra: bracket escaped the closure");
          out.set_bracket(p, i, q, j, std::move(*coords));
        }
    }
  return SubalgebraResult{std::move(out), std::move(comp)};
}

// ---------------------------------------------------------------------------
// Pseudo-product structures

struct PseudoProduct {
  Subspace e, f;
};

inline bool check_pseudo_product(const GradedLieAlgebra& g, const PseudoProduct& pp) {
  int n = g.dim(-1);
  if (pp.e.ambient_dim() != n || pp.f.ambient_dim() != n) return false;
  if (pp.e.dim() == 0 || pp.f.dim() == 0) return false;
  if (pp.e.dim() + pp.f.dim() != n || intersect(pp.e, pp.f).dim() != 0) return false;
  auto abelian = [&](const Subspace& s) {
    for (int i = 0; i < s.dim(); ++i)
      for (int j = i + 1; j < s.dim(); ++j)
        if (!is_zero_vec(g.bracket(-1, s.basis().row(i), -1, s.basis().row(j)))) return false;
    return true;
  };
  return abelian(pp.e) && abelian(pp.f);
}

// ---------------------------------------------------------------------------
// Free realizations and homomorphism extension

// Links a free (or free pseudo-product) algebra to the Hall words realizing
// its basis: each basis vector of degree -d is a combination of degree-d Hall
// words (the identity combination for a plain free algebra), so a linear map
// on g_-1 extends by evaluating those bracket words in the target.
struct FreeRealization {
  std::shared_ptr<const HallBasis> hall;
  std::map<int, Matrix> section;  // per algebra degree; absent = identity
  bool plain_free() const { return section.empty(); }
};

struct FreeFgla {
  GradedLieAlgebra algebra;
  FreeRealization real;
};

struct FreePseudoProductFgla {
  GradedLieAlgebra algebra;
  PseudoProduct pp;
  FreeRealization real;
  GradedMap projection;  // from the covering free algebra
};

namespace detail {

inline Vec eval_word_in(const HallBasis& hall, int id, const Matrix& phi,
                        const GradedLieAlgebra& tgt, std::map<int, Vec>& memo) {
  auto it = memo.find(id);
  if (it != memo.end()) return it->second;
  const HallBasis::Word& w = hall.word(id);
  Vec v;
  if (w.generator >= 0) {
    v = phi.col(w.generator - 1);
  } else {
    int da = hall.word(w.left).degree, db = hall.word(w.right).degree;
    v = tgt.bracket(-da, eval_word_in(hall, w.left, phi, tgt, memo), -db,
                    eval_word_in(hall, w.right, phi, tgt, memo));
  }
  memo.emplace(id, v);
  return v;
}

}  // namespace detail

// Unique degree-0 extension of phi: g_-1 -> g'_-1 to a graded homomorphism
// from a free (or free pseudo-product) source into a target of depth at most
// the source depth. With verify set, bracket compatibility is re-checked on
// all basis pairs and a violation raises.
inline GradedMap extend_hom(const GradedLieAlgebra& src, const FreeRealization& real,
                            const Matrix& phi, const GradedLieAlgebra& tgt, bool verify = true) {
  if (!real.hall) throw std::invalid_argument("extend_hom: source carries no free realization");
  if (phi.cols() != src.dim(-1) || phi.rows() != tgt.dim(-1))
    throw std::invalid_argument("extend_hom: phi shape mismatch");
  if (tgt.depth() > src.depth())
    throw std::invalid_argument("extend_hom: target depth exceeds source depth");
  std::map<int, Vec> memo;
  std::map<int, Matrix> comps;
  for (int p : src.degrees()) {
    int d = -p;
    Matrix comp(tgt.dim(p), src.dim(p));
    const std::vector<int>& words = real.hall->degree_words(d);
    auto sec = real.section.find(p);
    for (int k = 0; k < src.dim(p); ++k) {
      Vec img(tgt.dim(p));
      if (sec == real.section.end()) {
        img = detail::eval_word_in(*real.hall, words[k], phi, tgt, memo);
      } else {
        for (int w = 0; w < static_cast<int>(words.size()); ++w) {
          const Rational& c = sec->second(k, w);
          if (c.is_zero()) continue;
          axpy(img, c, detail::eval_word_in(*real.hall, words[w], phi, tgt, memo));
        }
      }
      for (int t = 0; t < tgt.dim(p); ++t) comp(t, k) = img[t];
    }
    comps.emplace(p, std::move(comp));
  }
  GradedMap f(0, std::move(comps));
  if (verify) {
    if (auto defect = hom_defect(f, src, tgt))
      throw std::logic_error("extend_hom: target violates source relations at bracket (" +
                             std::to_string(defect->p) + "," + std::to_string(defect->i) + ")x(" +
                             std::to_string(defect->q) + "," + std::to_string(defect->j) + ")");
  }
  return f;
}

inline GradedMap extend_hom(const FreeFgla& src, const Matrix& phi, const GradedLieAlgebra& tgt,
                            bool verify = true) {
  return extend_hom(src.algebra, src.real, phi, tgt, verify);
}

inline GradedMap extend_hom(const FreePseudoProductFgla& src, const Matrix& phi,
                            const GradedLieAlgebra& tgt, const PseudoProduct& tgt_pp,
                            bool verify = true) {
  for (int r = 0; r < src.pp.e.dim(); ++r)
    if (!tgt_pp.e.contains(phi * src.pp.e.basis().row(r)))
      throw std::invalid_argument("extend_hom: phi does not map e into e'");
  for (int r = 0; r < src.pp.f.dim(); ++r)
    if (!tgt_pp.f.contains(phi * src.pp.f.basis().row(r)))
      throw std::invalid_argument("extend_hom: phi does not map f into f'");
  return extend_hom(src.algebra, src.real, phi, tgt, verify);
}

// Unique graded automorphism of a free source restricting to an invertible
// phi on the degree -1 component.
inline GradedMap extend_graded_automorphism(const FreeFgla& src, const Matrix& phi) {
  if (!inverse(phi)) throw std::invalid_argument("extend_graded_automorphism: phi not invertible");
  GradedMap f = extend_hom(src, phi, src.algebra);
  if (!f.bijective()) throw std::logic_error("extend_graded_automorphism: extension not bijective");
  return f;
}

// Pseudo-product variant: phi must preserve e and f (not merely map into
// them), otherwise there is no structure-preserving extension.
inline GradedMap extend_graded_automorphism(const FreePseudoProductFgla& src, const Matrix& phi) {
  if (!inverse(phi)) throw std::invalid_argument("extend_graded_automorphism: phi not invertible");
  auto preserves = [&](const Subspace& s) {
    for (int r = 0; r < s.dim(); ++r)
      if (!s.contains(phi * s.basis().row(r))) return false;
    return true;
  };
  if (!preserves(src.pp.e) || !preserves(src.pp.f))
    throw std::invalid_argument("extend_graded_automorphism: phi mixes e and f");
  GradedMap f = extend_hom(src, phi, src.algebra, src.pp);
  if (!f.bijective()) throw std::logic_error("extend_graded_automorphism: extension not bijective");
  return f;
}

}  // namespace glat

#endif
