#include <catch2/catch_amalgamated.hpp>

#include "glat/rootgrade.hpp"

using namespace glat;

TEST_CASE("positive root enumeration") {
  SECTION("A2") {
    RootSystem rs = root_system(SimpleType::A, 2);
    REQUIRE(rs.positive.size() == 3);
    REQUIRE(std::count(rs.positive.begin(), rs.positive.end(), std::vector<int>{1, 1}) == 1);
    REQUIRE(rs.theta == std::vector<int>{1, 1});
  }
  SECTION("B3") {
    RootSystem rs = root_system(SimpleType::B, 3);
    REQUIRE(rs.positive.size() == 9);
    REQUIRE(rs.theta == std::vector<int>{1, 2, 2});
  }
  SECTION("C3") {
    RootSystem rs = root_system(SimpleType::C, 3);
    REQUIRE(rs.positive.size() == 9);
    REQUIRE(rs.theta == std::vector<int>{2, 2, 1});
  }
  SECTION("D4") {
    RootSystem rs = root_system(SimpleType::D, 4);
    REQUIRE(rs.positive.size() == 12);
    REQUIRE(rs.theta == std::vector<int>{1, 2, 1, 1});
  }
  SECTION("G2") {
    RootSystem rs = root_system(SimpleType::G2, 2);
    REQUIRE(rs.positive.size() == 6);
    REQUIRE(rs.theta == std::vector<int>{3, 2});
  }
  SECTION("invalid ranks are rejected") {
    REQUIRE_THROWS_AS(root_system(SimpleType::D, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(root_system(SimpleType::G2, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(root_system(SimpleType::C, 2), std::invalid_argument);
  }
}

TEST_CASE("gradations by marks") {
  SECTION("(B3, {a3})") {
    RootGradation rg = grade_by_marks(SimpleType::B, 3, {3});
    REQUIRE(rg.depth == 2);
    REQUIRE(rg.dim_vector() == std::vector<int>{3, 3, 9, 3, 3});
    REQUIRE(rg.fundamental);
  }
  SECTION("(G2, {a1})") {
    RootGradation rg = grade_by_marks(SimpleType::G2, 2, {1});
    REQUIRE(rg.depth == 3);
    REQUIRE(rg.dim_vector() == std::vector<int>{2, 1, 2, 4, 2, 1, 2});
    REQUIRE(rg.fundamental);
  }
  SECTION("(A4, {a2, a3})") {
    RootGradation rg = grade_by_marks(SimpleType::A, 4, {2, 3});
    REQUIRE(rg.depth == 2);
    REQUIRE(rg.dim_vector() == std::vector<int>{4, 4, 8, 4, 4});
    REQUIRE(rg.fundamental);
  }
  SECTION("dimension symmetry and totals") {
    for (auto [type, l, total] : {std::tuple{SimpleType::A, 4, 24},
                                  {SimpleType::B, 3, 21},
                                  {SimpleType::C, 3, 21},
                                  {SimpleType::D, 4, 28},
                                  {SimpleType::G2, 2, 14}}) {
      RootGradation rg = grade_by_marks(type, l, {1});
      REQUIRE(rg.total_dim() == total);
      for (int p = 1; p <= rg.depth; ++p) REQUIRE(rg.dim(p) == rg.dim(-p));
    }
  }
  SECTION("(B_l, {a_l}) matches the free (l,2) start") {
    for (int l : {3, 4}) {
      RootGradation rg = grade_by_marks(SimpleType::B, l, {l});
      REQUIRE(rg.dim(-1) == l);
      REQUIRE(rg.dim(-2) == l * (l - 1) / 2);
    }
  }
  SECTION("(A_{m+n}, {a_m, a_{m+1}}) matches the pseudo-product profile") {
    int m = 2, n = 3;
    RootGradation rg = grade_by_marks(SimpleType::A, m + n, {m, m + 1});
    REQUIRE(rg.dim_g0() == m * m + n * n);
    REQUIRE(rg.dim(-1) == m + n);
    REQUIRE(rg.dim(-2) == m * n);
  }
}

TEST_CASE("one-dimensional top criterion") {
  SECTION("(A2, {a1, a2}): top is one and the pairing condition is vacuous") {
    TopDimReport rep = dim_top_is_one(grade_by_marks(SimpleType::A, 2, {1, 2}));
    REQUIRE(rep.top_dim == 1);
    REQUIRE(rep.criterion);
    REQUIRE(rep.pass);
  }
  SECTION("(B3, {a3}): both sides say no") {
    TopDimReport rep = dim_top_is_one(grade_by_marks(SimpleType::B, 3, {3}));
    REQUIRE(rep.top_dim == 3);
    REQUIRE_FALSE(rep.criterion);
    REQUIRE(rep.pass);
  }
  SECTION("(G2, {a1})") {
    TopDimReport rep = dim_top_is_one(grade_by_marks(SimpleType::G2, 2, {1}));
    REQUIRE(rep.top_dim == 2);
    REQUIRE(rep.pass);
  }
}

TEST_CASE("component highest roots") {
  SECTION("(A4, {a2,a3}), i = 2: abelian block") {
    ComponentHighestRoot c = component_highest_root(grade_by_marks(SimpleType::A, 4, {2, 3}), 2);
    REQUIRE(c.component == std::vector<int>{1, 2});
    REQUIRE(c.m_i == 1);
    REQUIRE(c.abelian);
  }
  SECTION("(B3, {a3}), i = 3: coefficient 2") {
    ComponentHighestRoot c = component_highest_root(grade_by_marks(SimpleType::B, 3, {3}), 3);
    REQUIRE(c.component == std::vector<int>{1, 2, 3});
    REQUIRE(c.m_i == 2);
    REQUIRE_FALSE(c.abelian);
  }
  SECTION("(G2, {a1}), i = 1: coefficient 3") {
    ComponentHighestRoot c = component_highest_root(grade_by_marks(SimpleType::G2, 2, {1}), 1);
    REQUIRE(c.m_i == 3);
    REQUIRE_FALSE(c.abelian);
  }
  SECTION("rejects uncrossed nodes") {
    REQUIRE_THROWS_AS(component_highest_root(grade_by_marks(SimpleType::B, 3, {3}), 1),
                      std::invalid_argument);
  }
}

TEST_CASE("prolongation exceptions") {
  REQUIRE(theorem51_exceptions(grade_by_marks(SimpleType::B, 3, {3})) ==
          Theorem51Result::is_prolongation);
  REQUIRE(theorem51_exceptions(grade_by_marks(SimpleType::A, 3, {2})) ==
          Theorem51Result::exception_first_kind);
  REQUIRE(theorem51_exceptions(grade_by_marks(SimpleType::C, 3, {1})) ==
          Theorem51Result::exception_second_kind_dim1);
  REQUIRE_THROWS_AS(theorem51_exceptions(grade_by_marks(SimpleType::A, 4, {1, 2})),
                    std::invalid_argument);
}

TEST_CASE("diagram automorphism canonicalization") {
  REQUIRE(canonicalize_pi1(SimpleType::A, 4, {4}) == std::vector<int>{1});
  REQUIRE(canonicalize_pi1(SimpleType::A, 4, {1}) == std::vector<int>{1});
  REQUIRE(canonicalize_pi1(SimpleType::A, 5, {2, 3}) == canonicalize_pi1(SimpleType::A, 5, {3, 4}));
  REQUIRE(canonicalize_pi1(SimpleType::D, 5, {5}) == std::vector<int>{4});
  REQUIRE(canonicalize_pi1(SimpleType::D, 4, {4}) == std::vector<int>{1});
  REQUIRE(canonicalize_pi1(SimpleType::B, 3, {3}) == std::vector<int>{3});
}
