#ifndef GLAT_HALL_HPP
#define GLAT_HALL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glat/matrix.hpp"

namespace glat {

// Witt formula: dimension of the degree-d component of the free Lie algebra
// on n generators, (1/d) * sum_{e | d} mobius(e) n^(d/e).
inline long long witt_dimension(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("witt_dimension: n, d >= 1 required");
  auto mobius = [](int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      result = -result;
    }
    if (m > 1) result = -result;
    return result;
  };
  auto ipow = [](long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
  };
  long long total = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) total += mobius(e) * ipow(n, d / e);
  return total / d;
}

// Hall basis of the free Lie algebra on generators 1..n, truncated at
// max_degree.
//
// The Hall family used here is the standard bracketing of Lyndon words: the
// basis word of a Lyndon word w (|w| >= 2) is [b(u), b(v)] where w = uv and v
// is the lexicographically least proper suffix of w. Within a degree, words
// are ordered by their underlying Lyndon word; a pair prints as nested
// brackets, e.g. "[[1,2],2]".
//
// Bracket coordinates are extracted through the embedding into the tensor
// algebra: the expansion of b(w) is w plus lexicographically larger terms
// with w's multidegree, so a Lie polynomial reduces against the basis by
// repeatedly cancelling its least word, which must be Lyndon. The reduction
// shrinks the least term at every step and therefore always terminates; a
// least term that is not Lyndon means the input was not a Lie element and
// raises.
class HallBasis {
public:
  struct Word {
    int left = -1;       // word id, -1 for generators
    int right = -1;      // word id, -1 for generators
    int generator = -1;  // 1..n for generators, -1 otherwise
    int degree = 0;
    int pos = 0;          // position within its degree list
    std::string foliage;  // underlying word, one byte per letter (1-based)
  };

  // Sparse element of the graded algebra: word id -> coefficient.
  using Sparse = std::map<int, Rational>;
  // Element of the tensor algebra: word (byte string) -> coefficient.
  using Poly = std::map<std::string, Rational>;

  HallBasis(int generator_count, int max_degree)
      : n_(generator_count), max_degree_(max_degree) {
    if (n_ < 1) throw std::invalid_argument("HallBasis: need at least one generator");
    if (n_ > 200) throw std::invalid_argument("HallBasis: generator count out of range");
    if (max_degree_ < 1) throw std::invalid_argument("HallBasis: max_degree >= 1 required");
    by_degree_.assign(max_degree_ + 1, {});
    for (const std::string& w : lyndon_words(n_, max_degree_)) {
      Word word;
      word.degree = static_cast<int>(w.size());
      word.foliage = w;
      word.pos = static_cast<int>(by_degree_[word.degree].size());
      if (word.degree == 1) {
        word.generator = static_cast<int>(static_cast<unsigned char>(w[0]));
      } else {
        // standard factorization: split before the least proper suffix
        std::size_t cut = 1;
        for (std::size_t i = 2; i < w.size(); ++i)
          if (w.compare(i, std::string::npos, w, cut, std::string::npos) < 0) cut = i;
        word.left = id_of(w.substr(0, cut));
        word.right = id_of(w.substr(cut));
      }
      int id = static_cast<int>(words_.size());
      words_.push_back(word);
      foliage_to_id_[word.foliage] = id;
      by_degree_[word.degree].push_back(id);
    }
  }

  int generator_count() const { return n_; }
  int max_degree() const { return max_degree_; }
  const Word& word(int id) const { return words_[id]; }
  const std::vector<int>& degree_words(int d) const { return by_degree_.at(d); }
  int count(int d) const {
    return d >= 1 && d <= max_degree_ ? static_cast<int>(by_degree_[d].size()) : 0;
  }
  int generator_id(int g) const {
    if (g < 1 || g > n_) throw std::invalid_argument("HallBasis: no such generator");
    return by_degree_[1][g - 1];
  }

  std::string to_string(int id) const {
    const Word& w = words_[id];
    if (w.generator >= 0) return std::to_string(w.generator);
    return "[" + to_string(w.left) + "," + to_string(w.right) + "]";
  }

  // Expansion of a basis word in the tensor algebra.
  const Poly& expansion(int id) const {
    if (id < static_cast<int>(rho_.size()) && !rho_[id].empty()) return rho_[id];
    if (id >= static_cast<int>(rho_.size())) rho_.resize(words_.size());
    const Word& w = words_[id];
    Poly p;
    if (w.generator >= 0) {
      p[w.foliage] = Rational(1);
    } else {
      p = commutator(expansion(w.left), expansion(w.right));
    }
    rho_[id] = std::move(p);
    return rho_[id];
  }

  // Bracket of two basis words as a Hall-coordinate combination in degree
  // deg(u) + deg(v). Memoized per ordered pair.
  const Sparse& bracket(int u, int v) const {
    if (u == v) return zero_;
    bool flip = u > v;
    if (flip) std::swap(u, v);
    int d = words_[u].degree + words_[v].degree;
    if (d > max_degree_) throw std::logic_error("HallBasis::bracket: degree above truncation");
    auto& memo = flip ? memo_neg_ : memo_;
    auto key = std::make_pair(u, v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Sparse s = to_coordinates(commutator(expansion(u), expansion(v)));
    if (flip)
      for (auto& [id, c] : s) c = -c;
    return memo.emplace(std::move(key), std::move(s)).first->second;
  }

  Sparse bracket_elements(const Sparse& x, const Sparse& y) const {
    Sparse out;
    for (const auto& [u, cu] : x)
      for (const auto& [v, cv] : y) {
        if (u == v) continue;
        Rational c = cu * cv;
        for (const auto& [w, cw] : bracket(u, v)) {
          Rational& slot = out[w];
          slot += c * cw;
          if (slot.is_zero()) out.erase(w);
        }
      }
    return out;
  }

  // Hall coordinates of a homogeneous Lie polynomial.
  Sparse to_coordinates(Poly p) const {
    Sparse out;
    while (!p.empty()) {
      auto least = p.begin();
      auto found = foliage_to_id_.find(least->first);
      if (found == foliage_to_id_.end())
        throw std::logic_error("HallBasis: polynomial is not a Lie element");
      int id = found->second;
      Rational c = least->second;
      out[id] = c;
      for (const auto& [word, coeff] : expansion(id)) {
        auto slot = p.find(word);
        if (slot == p.end()) {
          Rational val = -(c * coeff);
          if (!val.is_zero()) p.emplace(word, std::move(val));
        } else {
          slot->second -= c * coeff;
          if (slot->second.is_zero()) p.erase(slot);
        }
      }
    }
    return out;
  }

  // Dense coordinates of the degree-d part of a sparse element.
  Vec coordinates(const Sparse& x, int d) const {
    Vec v(count(d));
    for (const auto& [id, c] : x)
      if (words_[id].degree == d) v[words_[id].pos] = c;
    return v;
  }

  static Poly commutator(const Poly& a, const Poly& b) {
    Poly out;
    auto add_products = [&out](const Poly& x, const Poly& y, bool negate) {
      for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) {
          Rational c = cx * cy;
          if (negate) c = -c;
          Rational& slot = out[wx + wy];
          slot += c;
          if (slot.is_zero()) out.erase(wx + wy);
        }
    };
    add_products(a, b, false);
    add_products(b, a, true);
    return out;
  }

  // All Lyndon words of length <= max over letters 1..n (as raw bytes), in
  // lexicographic order. Duval's generation.
  static std::vector<std::string> lyndon_words(int n, int max) {
    std::vector<std::string> out;
    std::vector<int> w{0};
    while (!w.empty()) {
      std::string s(w.size(), '\0');
      for (std::size_t i = 0; i < w.size(); ++i) s[i] = static_cast<char>(w[i] + 1);
      out.push_back(std::move(s));
      int m = static_cast<int>(w.size());
      w.resize(max);
      for (int i = m; i < max; ++i) w[i] = w[i - m];
      while (!w.empty() && w.back() == n - 1) w.pop_back();
      if (!w.empty()) ++w.back();
    }
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  }

private:
  int id_of(const std::string& foliage) const {
    auto it = foliage_to_id_.find(foliage);
    if (it == foliage_to_id_.end())
      throw std::logic_error("HallBasis: factor of a Lyndon word is missing");
    return it->second;
  }

  int n_, max_degree_;
  std::vector<Word> words_;
  std::vector<std::vector<int>> by_degree_;
  std::map<std::string, int> foliage_to_id_;
  // Memo tables behave as pure caches: a key always maps to the same value.
  mutable std::vector<Poly> rho_;
  mutable std::map<std::pair<int, int>, Sparse> memo_;
  mutable std::map<std::pair<int, int>, Sparse> memo_neg_;
  Sparse zero_;
};

// Formal bracket expression over generators, for normal-form computation.
class BracketExpr {
public:
  static BracketExpr gen(int g) {
    if (g < 1) throw std::invalid_argument("BracketExpr: generators are 1-based");
    BracketExpr e;
    e.node_ = std::make_shared<Node>(Node{g, nullptr, nullptr});
    return e;
  }
  static BracketExpr bracket(const BracketExpr& a, const BracketExpr& b) {
    BracketExpr e;
    e.node_ = std::make_shared<Node>(Node{-1, a.node_, b.node_});
    return e;
  }
  int degree() const { return degree_of(node_.get()); }

  // Hall coordinates of the expression; linear and bracket-compatible.
  HallBasis::Sparse normal_form(const HallBasis& basis) const {
    return basis.to_coordinates(eval(node_.get(), basis));
  }

private:
  struct Node {
    int generator;
    std::shared_ptr<const Node> left, right;
  };

  static int degree_of(const Node* n) {
    if (n->generator >= 0) return 1;
    return degree_of(n->left.get()) + degree_of(n->right.get());
  }
  static HallBasis::Poly eval(const Node* n, const HallBasis& basis) {
    if (n->generator >= 0) {
      if (n->generator > basis.generator_count())
        throw std::invalid_argument("BracketExpr: generator out of range");
      HallBasis::Poly p;
      p[std::string(1, static_cast<char>(n->generator))] = Rational(1);
      return p;
    }
    return HallBasis::commutator(eval(n->left.get(), basis), eval(n->right.get(), basis));
  }

  std::shared_ptr<const Node> node_;
};

inline HallBasis::Sparse normal_form(const std::vector<std::pair<Rational, BracketExpr>>& sum,
                                     const HallBasis& basis) {
  HallBasis::Sparse out;
  for (const auto& [coeff, expr] : sum) {
    for (const auto& [id, c] : expr.normal_form(basis)) {
      Rational& slot = out[id];
      slot += coeff * c;
      if (slot.is_zero()) out.erase(id);
    }
  }
  return out;
}

}  // namespace glat

#endif
