#ifndef GLAT_ROOTGRADE_HPP
#define GLAT_ROOTGRADE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace glat {

enum class SimpleType { A, B, C, D, G2 };

inline std::string type_name(SimpleType t) {
  switch (t) {
    case SimpleType::A: return "A";
    case SimpleType::B: return "B";
    case SimpleType::C: return "C";
    case SimpleType::D: return "D";
    case SimpleType::G2: return "G";
  }
  return "?";
}

inline SimpleType type_from_name(const std::string& s) {
  if (s == "A") return SimpleType::A;
  if (s == "B") return SimpleType::B;
  if (s == "C") return SimpleType::C;
  if (s == "D") return SimpleType::D;
  if (s == "G") return SimpleType::G2;
  throw std::invalid_argument("unknown simple type '" + s + "'");
}

// cartan[i][j] = <alpha_j, alpha_i^v>, 0-based, Bourbaki numbering.
inline std::vector<std::vector<int>> cartan_matrix(SimpleType type, int l) {
  auto valid = [&] {
    switch (type) {
      case SimpleType::A: return l >= 1;
      case SimpleType::B: return l >= 2;
      case SimpleType::C: return l >= 3;  // ranks 1, 2 coincide with A_1, B_2
      case SimpleType::D: return l >= 4;
      case SimpleType::G2: return l == 2;
    }
    return false;
  }();
  if (!valid) throw std::invalid_argument("cartan_matrix: invalid rank for type");

  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto chain = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (type) {
    case SimpleType::A:
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case SimpleType::B:
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      c[l - 1][l - 2] = -2;  // alpha_l is short
      break;
    case SimpleType::C:
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      c[l - 2][l - 1] = -2;  // alpha_l is long
      break;
    case SimpleType::D:
      for (int i = 0; i + 1 < l - 1; ++i) chain(i, i + 1);
      chain(l - 3, l - 1);
      break;
    case SimpleType::G2:
      c[0][1] = -3;  // alpha_1 is short
      c[1][0] = -1;
      break;
  }
  return c;
}

// Positive roots in simple-root coordinates from an arbitrary Cartan matrix,
// built height by height through root strings: q = p - <beta, alpha_i^v>
// extends beta by alpha_i as long as q > 0.
inline std::vector<std::vector<int>> positive_roots_from_cartan(
    const std::vector<std::vector<int>>& cartan) {
  int l = static_cast<int>(cartan.size());
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<int> simple(l, 0);
    simple[i] = 1;
    known.insert(simple);
    frontier.push_back(simple);
  }
  auto pairing = [&](const std::vector<int>& beta, int i) {
    int v = 0;
    for (int j = 0; j < l; ++j) v += cartan[i][j] * beta[j];
    return v;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier)
      for (int i = 0; i < l; ++i) {
        int down = 0;
        std::vector<int> probe = beta;
        while (true) {
          probe[i] -= 1;
          bool nonneg = std::all_of(probe.begin(), probe.end(), [](int x) { return x >= 0; });
          if (!nonneg || !known.count(probe)) break;
          ++down;
        }
        if (down - pairing(beta, i) > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    frontier = std::move(next);
  }
  return std::vector<std::vector<int>>(known.begin(), known.end());
}

struct RootSystem {
  SimpleType type;
  int rank;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> positive;  // simple-root coordinates
  std::vector<int> theta;                  // highest root

  int pairing_with_coroot(const std::vector<int>& root, int i) const {
    int v = 0;
    for (int j = 0; j < rank; ++j) v += cartan[i][j] * root[j];
    return v;
  }
};

inline RootSystem root_system(SimpleType type, int l) {
  RootSystem rs;
  rs.type = type;
  rs.rank = l;
  rs.cartan = cartan_matrix(type, l);
  rs.positive = positive_roots_from_cartan(rs.cartan);

  long long expected = 0;
  switch (type) {
    case SimpleType::A: expected = static_cast<long long>(l) * (l + 1) / 2; break;
    case SimpleType::B:
    case SimpleType::C: expected = static_cast<long long>(l) * l; break;
    case SimpleType::D: expected = static_cast<long long>(l) * (l - 1); break;
    case SimpleType::G2: expected = 6; break;
  }
  if (static_cast<long long>(rs.positive.size()) != expected)
    throw std::logic_error("root_system: enumeration does not match the root count");

  // the highest root dominates every root coordinatewise
  auto height = [](const std::vector<int>& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  rs.theta = *std::max_element(rs.positive.begin(), rs.positive.end(),
                               [&](const auto& a, const auto& b) { return height(a) < height(b); });
  for (const auto& r : rs.positive)
    for (int j = 0; j < l; ++j)
      if (r[j] > rs.theta[j]) throw std::logic_error("root_system: highest root is not dominant");
  return rs;
}

// Gradation of a simple Lie algebra by marks: s_i = 1 exactly on the crossed
// nodes, the degree of a root is its s-length, and degree 0 adds the Cartan
// subalgebra. Dimensions at +-p agree by construction.
struct RootGradation {
  SimpleType type;
  int rank;
  std::vector<int> pi1;  // crossed nodes, 1-based, sorted
  RootSystem roots;
  std::vector<int> s;
  int depth = 0;                // s-length of the highest root
  std::map<int, int> dims;      // degree -> dimension
  bool fundamental = false;     // negative part generated by degree -1

  int s_length(const std::vector<int>& root) const {
    int v = 0;
    for (int j = 0; j < rank; ++j) v += s[j] * root[j];
    return v;
  }
  int dim(int p) const {
    auto it = dims.find(p);
    return it == dims.end() ? 0 : it->second;
  }
  int dim_g0() const { return dim(0); }
  int total_dim() const {
    int t = 0;
    for (const auto& [p, d] : dims) t += d;
    return t;
  }
  std::vector<int> dim_vector() const {  // degrees -depth..depth
    std::vector<int> v;
    for (int p = -depth; p <= depth; ++p) v.push_back(dim(p));
    return v;
  }
};

inline RootGradation grade_by_marks(SimpleType type, int l, std::vector<int> pi1) {
  std::sort(pi1.begin(), pi1.end());
  pi1.erase(std::unique(pi1.begin(), pi1.end()), pi1.end());
  if (pi1.empty()) throw std::invalid_argument("grade_by_marks: Pi_1 must be nonempty");
  for (int i : pi1)
    if (i < 1 || i > l) throw std::invalid_argument("grade_by_marks: crossed node out of range");

  RootGradation rg;
  rg.type = type;
  rg.rank = l;
  rg.pi1 = pi1;
  rg.roots = root_system(type, l);
  rg.s.assign(l, 0);
  for (int i : pi1) rg.s[i - 1] = 1;
  rg.depth = rg.s_length(rg.roots.theta);

  std::map<int, std::vector<std::vector<int>>> delta;  // positive roots by s-length
  for (const auto& r : rg.roots.positive) delta[rg.s_length(r)].push_back(r);
  rg.dims[0] = l + 2 * static_cast<int>(delta.count(0) ? delta[0].size() : 0);
  for (const auto& [p, set] : delta) {
    if (p == 0) continue;
    rg.dims[p] = static_cast<int>(set.size());
    rg.dims[-p] = static_cast<int>(set.size());
  }

  // root-level restatement of "generated by g_-1": every root of s-length
  // q >= 2 splits off a length-1 root
  rg.fundamental = true;
  std::set<std::vector<int>> positive_set(rg.roots.positive.begin(), rg.roots.positive.end());
  for (const auto& [q, set] : delta) {
    if (q < 2) continue;
    for (const auto& alpha : set) {
      bool splits = false;
      for (const auto& gamma : delta.count(1) ? delta[1] : std::vector<std::vector<int>>{}) {
        std::vector<int> beta(l);
        bool nonneg = true;
        for (int j = 0; j < l; ++j) {
          beta[j] = alpha[j] - gamma[j];
          if (beta[j] < 0) nonneg = false;
        }
        if (nonneg && positive_set.count(beta)) {
          splits = true;
          break;
        }
      }
      if (!splits) {
        rg.fundamental = false;
        break;
      }
    }
    if (!rg.fundamental) break;
  }
  return rg;
}

// Evaluates both sides of the one-dimensional-top criterion: the root count
// of the top degree, and the vanishing of <theta, alpha_i^v> on all uncrossed
// nodes. Passes when the two verdicts agree.
struct TopDimReport {
  int top_dim = 0;
  bool criterion = false;
  bool pass = false;
};

inline TopDimReport dim_top_is_one(const RootGradation& rg) {
  TopDimReport rep;
  rep.top_dim = rg.dim(-rg.depth);
  rep.criterion = true;
  std::set<int> crossed(rg.pi1.begin(), rg.pi1.end());
  for (int i = 1; i <= rg.rank; ++i) {
    if (crossed.count(i)) continue;
    if (rg.roots.pairing_with_coroot(rg.roots.theta, i - 1) != 0) {
      rep.criterion = false;
      break;
    }
  }
  rep.pass = (rep.top_dim == 1) == rep.criterion;
  return rep;
}

// Highest root of the Dynkin subdiagram component through crossed node i over
// the nodes (complement of Pi_1) + {i}; the coefficient of alpha_i there
// decides whether the corresponding g_-1 block is abelian.
struct ComponentHighestRoot {
  std::vector<int> component;  // nodes (1-based) of the subdiagram component
  std::map<int, int> theta;    // node -> coefficient
  int m_i = 0;
  bool abelian = false;
};

inline ComponentHighestRoot component_highest_root(const RootGradation& rg, int i) {
  std::set<int> crossed(rg.pi1.begin(), rg.pi1.end());
  if (!crossed.count(i)) throw std::invalid_argument("component_highest_root: i must be crossed");
  std::set<int> nodes;
  for (int j = 1; j <= rg.rank; ++j)
    if (!crossed.count(j) || j == i) nodes.insert(j);

  // connected component of i in the induced subdiagram
  std::vector<int> comp{i};
  std::set<int> seen{i};
  for (std::size_t head = 0; head < comp.size(); ++head) {
    int a = comp[head];
    for (int b : nodes) {
      if (seen.count(b) || rg.roots.cartan[a - 1][b - 1] == 0) continue;
      seen.insert(b);
      comp.push_back(b);
    }
  }
  std::sort(comp.begin(), comp.end());

  std::vector<std::vector<int>> sub(comp.size(), std::vector<int>(comp.size()));
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = 0; b < comp.size(); ++b)
      sub[a][b] = rg.roots.cartan[comp[a] - 1][comp[b] - 1];

  auto roots = positive_roots_from_cartan(sub);
  auto height = [](const std::vector<int>& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  std::vector<int> theta = *std::max_element(
      roots.begin(), roots.end(),
      [&](const auto& a, const auto& b) { return height(a) < height(b); });

  ComponentHighestRoot out;
  out.component = comp;
  for (std::size_t a = 0; a < comp.size(); ++a) out.theta[comp[a]] = theta[a];
  out.m_i = out.theta.at(i);
  out.abelian = out.m_i == 1;
  return out;
}

enum class Theorem51Result { is_prolongation, exception_first_kind, exception_second_kind_dim1 };

// Decides whether the graded simple algebra is the prolongation of its
// negative part, in the irreducible case #(Pi_1) = 1.
inline Theorem51Result theorem51_exceptions(const RootGradation& rg) {
  if (rg.pi1.size() != 1)
    throw std::invalid_argument("theorem51_exceptions: requires #(Pi_1) = 1");
  if (rg.depth == 1) return Theorem51Result::exception_first_kind;
  if (rg.depth == 2 && rg.dim(-2) == 1) return Theorem51Result::exception_second_kind_dim1;
  return Theorem51Result::is_prolongation;
}

// Orbit representative of Pi_1 under the diagram automorphism group, so that
// gradations equivalent under a diagram flip compare equal.
inline std::vector<int> canonicalize_pi1(SimpleType type, int l, std::vector<int> pi1) {
  std::sort(pi1.begin(), pi1.end());
  std::vector<std::vector<int>> images{pi1};
  auto apply = [&](auto&& node_map) {
    std::vector<int> img;
    for (int i : pi1) img.push_back(node_map(i));
    std::sort(img.begin(), img.end());
    images.push_back(img);
  };
  if (type == SimpleType::A && l >= 2) apply([&](int i) { return l + 1 - i; });
  if (type == SimpleType::D) {
    apply([&](int i) { return i == l ? l - 1 : (i == l - 1 ? l : i); });
    if (l == 4) {
      // full S3 on the outer nodes {1, 3, 4}
      const int perms[5][3] = {{3, 1, 4}, {4, 3, 1}, {1, 4, 3}, {3, 4, 1}, {4, 1, 3}};
      for (const auto& p : perms)
        apply([&](int i) { return i == 1 ? p[0] : (i == 3 ? p[1] : (i == 4 ? p[2] : i)); });
    }
  }
  return *std::min_element(images.begin(), images.end());
}

}  // namespace glat

#endif
