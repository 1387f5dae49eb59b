#include <catch2/catch_amalgamated.hpp>

#include "glat/construct.hpp"
#include "oracles.hpp"

using namespace glat;

TEST_CASE("free fgla dimensions follow the Witt formula") {
  auto dims_of = [](const GradedLieAlgebra& g) {
    std::vector<int> out;
    for (int p = -1; p >= g.bottom_degree(); --p) out.push_back(g.dim(p));
    return out;
  };
  REQUIRE(dims_of(free_fgla(2, 2).algebra) == std::vector<int>{2, 1});
  REQUIRE(dims_of(free_fgla(2, 3).algebra) == std::vector<int>{2, 1, 2});
  REQUIRE(dims_of(free_fgla(3, 2).algebra) == std::vector<int>{3, 3});
  for (int n = 2; n <= 3; ++n) {
    FreeFgla f = free_fgla(n, 4);
    for (int d = 1; d <= 4; ++d) REQUIRE(f.algebra.dim(-d) == witt_dimension(n, d));
    REQUIRE(is_fundamental(f.algebra));
    REQUIRE(check_jacobi(f.algebra).pass);
  }
  REQUIRE_THROWS_AS(free_fgla(1, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(free_fgla(2, 1), std::invalid_argument);
}

TEST_CASE("Lemma-style ad identities on free (2,mu)") {
  for (int mu : {3, 4}) {
    FreeFgla f = free_fgla(2, mu);
    const GradedLieAlgebra& g = f.algebra;
    Vec x = g.unit(-1, 0), y = g.unit(-1, 1);
    // ad(X)^k (Y)
    std::vector<Vec> ad_powers{y};
    for (int k = 1; k <= mu; ++k)
      ad_powers.push_back(g.bracket(-1, x, -k, ad_powers.back()));
    REQUIRE(is_zero_vec(ad_powers[mu]));
    REQUIRE_FALSE(is_zero_vec(ad_powers[mu - 1]));
    REQUIRE(is_zero_vec(g.bracket(-1, y, -mu, ad_powers[mu - 1])));
    REQUIRE_FALSE(is_zero_vec(g.bracket(-1, y, -(mu - 1), ad_powers[mu - 2])));
  }
}

TEST_CASE("universal construction") {
  SECTION("dimensions of the wedge recursion") {
    GradedLieAlgebra b22 = universal_fgla(2, 2);
    REQUIRE(b22.dim(-1) == 2);
    REQUIRE(b22.dim(-2) == 1);
    REQUIRE(universal_fgla(2, 3).dim(-3) == 2);   // Lambda^2 V x V / Lambda^3 V at n=2
    REQUIRE(universal_fgla(3, 3).dim(-3) == 8);   // 3*3 - 1
  }
  SECTION("the recursion output is a fundamental graded Lie algebra") {
    for (int n = 2; n <= 3; ++n)
      for (int mu = 2; mu <= 4; ++mu) {
        GradedLieAlgebra b = universal_fgla(n, mu);
        REQUIRE(check_jacobi(b).pass);
        REQUIRE(is_fundamental(b));
        REQUIRE(b.depth() == mu);
      }
  }
  SECTION("isomorphic to the Hall-basis free algebra via the identity on g_-1") {
    for (int n = 2; n <= 3; ++n)
      for (int mu = 2; mu <= 3; ++mu) {
        FreeFgla f = free_fgla(n, mu);
        GradedLieAlgebra b = universal_fgla(n, mu);
        for (int d = 1; d <= mu; ++d) REQUIRE(f.algebra.dim(-d) == b.dim(-d));
        GradedMap h = extend_hom(f, Matrix::identity(n), b);
        REQUIRE(h.bijective());
      }
  }
}

TEST_CASE("free pseudo-product algebras") {
  SECTION("degree dimensions") {
    REQUIRE(free_pseudoproduct_fgla(2, 3, 2).algebra.dim(-2) == 6);
    REQUIRE(free_pseudoproduct_fgla(2, 3, 3).algebra.dim(-3) == 21);
    FreePseudoProductFgla pp113 = free_pseudoproduct_fgla(1, 1, 3);
    REQUIRE(pp113.algebra.dim(-1) == 2);
    REQUIRE(pp113.algebra.dim(-2) == 1);
    REQUIRE(pp113.algebra.dim(-3) == 2);
  }
  SECTION("pseudo-product invariants hold") {
    for (auto [m, n] : {std::pair{1, 2}, {2, 2}, {3, 1}}) {
      FreePseudoProductFgla pp = free_pseudoproduct_fgla(m, n, 3);
      REQUIRE(check_pseudo_product(pp.algebra, pp.pp));
      REQUIRE(is_fundamental(pp.algebra));
      REQUIRE(check_jacobi(pp.algebra).pass);
      REQUIRE(pp.algebra.dim(-1) == m + n);
      REQUIRE(pp.algebra.dim(-2) == m * n);
      REQUIRE(pp.algebra.dim(-3) == m * n * (m + n + 2) / 2);
      REQUIRE(centralizer_of_gm2_in_gm1(pp.algebra).dim() == 0);
    }
  }
  SECTION("the only free pseudo-product algebra that is free is (1,1)") {
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        if (m == 1 && n == 1) continue;
        int s = m + n;
        REQUIRE(m * n < s * (s - 1) / 2);
        REQUIRE(free_pseudoproduct_fgla(m, n, 2).algebra.dim(-2) <
                free_fgla(s, 2).algebra.dim(-2));
      }
  }
}

TEST_CASE("contact algebras") {
  SECTION("dimension formulas") {
    FreePseudoProductFgla c221 = contact_algebra(2, 2, 1);
    REQUIRE(c221.algebra.dim(-1) == 2 + 3);
    REQUIRE(c221.algebra.dim(-2) == 2);
    REQUIRE(c221.algebra.dim(-3) == 1);
    FreePseudoProductFgla c111 = contact_algebra(1, 1, 1);
    REQUIRE(c111.algebra.dim(-1) == 2);
    REQUIRE(c111.algebra.dim(-2) == 1);
    REQUIRE(c111.algebra.depth() == 2);
    FreePseudoProductFgla c211 = contact_algebra(2, 1, 1);
    REQUIRE(c211.algebra.dim(-1) == 2);
    REQUIRE(c211.algebra.dim(-2) == 1);
    REQUIRE(c211.algebra.dim(-3) == 1);
  }
  SECTION("graded Lie algebra and pseudo-product checks") {
    for (auto [k, n, m] : {std::tuple{1, 2, 2}, {2, 2, 1}, {3, 1, 2}}) {
      FreePseudoProductFgla c = contact_algebra(k, n, m);
      REQUIRE(c.algebra.depth() == k + 1);
      REQUIRE(check_jacobi(c.algebra).pass);
      REQUIRE(is_fundamental(c.algebra));
      REQUIRE(check_pseudo_product(c.algebra, c.pp));
    }
  }
}

TEST_CASE("explicit (m,n,3) model") {
  SECTION("dimensions") {
    auto dims_of = [](const GradedLieAlgebra& g) {
      return std::vector<int>{g.dim(-1), g.dim(-2), g.dim(-3)};
    };
    REQUIRE(dims_of(model_mn3(1, 1).algebra) == std::vector<int>{2, 1, 2});
    REQUIRE(dims_of(model_mn3(2, 2).algebra) == std::vector<int>{4, 4, 12});
    REQUIRE(dims_of(model_mn3(2, 1).algebra) == std::vector<int>{3, 2, 5});
  }
  SECTION("is a pseudo-product fundamental graded Lie algebra") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
      FreePseudoProductFgla md = model_mn3(m, n);
      REQUIRE(check_jacobi(md.algebra).pass);
      REQUIRE(is_fundamental(md.algebra));
      REQUIRE(check_pseudo_product(md.algebra, md.pp));
    }
  }
  SECTION("isomorphic to the free pseudo-product algebra of type (m,n,3)") {
    for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
      FreePseudoProductFgla pp = free_pseudoproduct_fgla(m, n, 3);
      FreePseudoProductFgla md = model_mn3(m, n);
      GradedMap h = extend_hom(pp, Matrix::identity(m + n), md.algebra, md.pp);
      REQUIRE(h.bijective());
    }
  }
}
