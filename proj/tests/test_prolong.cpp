#include <catch2/catch_amalgamated.hpp>

#include "glat/construct.hpp"
#include "glat/prolong.hpp"

using namespace glat;

TEST_CASE("degree-0 derivations of free algebras are gl(g_-1)") {
  for (auto [n, mu] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    Layer d = derivations_degree0(free_fgla(n, mu).algebra);
    REQUIRE(d.dim() == n * n);
  }
  // Heisenberg = free (2,2)
  REQUIRE(derivations_degree0(free_fgla(2, 2).algebra).dim() == 4);
}

TEST_CASE("degree-0 derivations of the (2,1,2) pseudo-product algebra") {
  // gl(e) + gl(f) + Hom(f,e) here
  FreePseudoProductFgla pp = free_pseudoproduct_fgla(2, 1, 2);
  REQUIRE(derivations_degree0(pp.algebra).dim() == 7);
}

TEST_CASE("restricted degree-0 derivations are gl(e) x gl(f)") {
  for (auto [m, n, mu] : {std::tuple{2, 2, 2}, {1, 1, 3}, {2, 1, 2}, {3, 2, 2}}) {
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(m, n, mu);
    Layer d = restricted_derivations_degree0(pp.algebra, pp.pp);
    REQUIRE(d.dim() == m * m + n * n);
  }
}

TEST_CASE("prolongation layers of free algebras") {
  SECTION("free (2,2) starts like the rank-1 contact algebra") {
    Tower t = truncated_prolongation(free_fgla(2, 2).algebra, std::nullopt, 3);
    REQUIRE(t.layer_dims() == std::vector<int>{4, 6, 9, 12});
    REQUIRE(t.status() == ProlongationStatus::truncated);
  }
  SECTION("free (3,2) terminates after three layers") {
    Tower t = truncated_prolongation(free_fgla(3, 2).algebra, std::nullopt, 5);
    REQUIRE(t.layer_dims() == std::vector<int>{9, 3, 3, 0});
    REQUIRE(t.status() == ProlongationStatus::terminated);
  }
  SECTION("a layer after a zero layer is zero as well") {
    Tower manual(free_fgla(3, 2).algebra, std::nullopt);
    for (int k = 0; k < 4; ++k) manual.add_layer();
    REQUIRE(manual.layer_dims() == std::vector<int>{9, 3, 3, 0, 0});
  }
  SECTION("free (2,3) terminates with total dimension 14") {
    Tower t = truncated_prolongation(free_fgla(2, 3).algebra, std::nullopt, 5);
    REQUIRE(t.layer_dims() == std::vector<int>{4, 2, 1, 2, 0});
    REQUIRE(t.status() == ProlongationStatus::terminated);
    int total = t.base().total_dim();
    for (int d : t.layer_dims()) total += d;
    REQUIRE(total == 14);
  }
  SECTION("free (3,3) has no first layer") {
    Tower t = truncated_prolongation(free_fgla(3, 3).algebra, std::nullopt, 1);
    REQUIRE(t.layer_dims() == std::vector<int>{9, 0});
  }
}

TEST_CASE("restricted prolongation of free pseudo-product algebras") {
  SECTION("(2,2,2)") {
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(2, 2, 2);
    Tower t = truncated_prolongation(pp.algebra, pp.pp, 5);
    REQUIRE(t.layer_dims() == std::vector<int>{8, 4, 4, 0});
  }
  SECTION("(1,2,2)") {
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(1, 2, 2);
    Tower t = truncated_prolongation(pp.algebra, pp.pp, 5);
    REQUIRE(t.layer_dims() == std::vector<int>{5, 3, 2, 0});
  }
  SECTION("(1,1,3) stops at degree zero") {
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(1, 1, 3);
    Tower t = truncated_prolongation(pp.algebra, pp.pp, 1);
    REQUIRE(t.layer_dims() == std::vector<int>{2, 0});
  }
  SECTION("restricted layers never exceed the unrestricted ones") {
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(2, 2, 2);
    Tower restricted = truncated_prolongation(pp.algebra, pp.pp, 2);
    Tower full = truncated_prolongation(pp.algebra, std::nullopt, 2);
    for (int k = 0; k <= 2; ++k) REQUIRE(restricted.space_dim(k) <= full.space_dim(k));
  }
}

TEST_CASE("unrestricted prolongation of the (2,1,2) pseudo-product algebra") {
  FreePseudoProductFgla pp = free_pseudoproduct_fgla(2, 1, 2);
  Tower t = truncated_prolongation(pp.algebra, std::nullopt, 1);
  REQUIRE(t.layer_dims() == std::vector<int>{7, 9});
  REQUIRE(t.status() == ProlongationStatus::truncated);
}

TEST_CASE("restriction of the zeroth layer to g_-1 is injective on free bases") {
  FreeFgla f = free_fgla(3, 2);
  Layer d = derivations_degree0(f.algebra);
  Matrix stacked(d.dim(), 9);
  for (int s = 0; s < d.dim(); ++s) {
    const Matrix& phi = d.basis[s].comp.at(-1);
    int c = 0;
    for (int i = 0; i < phi.rows(); ++i)
      for (int j = 0; j < phi.cols(); ++j) stacked(s, c++) = phi(i, j);
  }
  REQUIRE(rref(stacked).rank == d.dim());
}

TEST_CASE("transitivity") {
  Tower t = truncated_prolongation(free_fgla(2, 3).algebra, std::nullopt, 3);
  REQUIRE(verify_transitive(t));

  SECTION("a hand-built central element fails the check") {
    Layer fake;
    fake.k = 0;
    LayerElement zero;
    zero.comp.emplace(-1, Matrix(2, 2));
    fake.basis.push_back(zero);
    REQUIRE_FALSE(verify_transitive(std::vector<Layer>{fake}));
  }
  SECTION("abelian base with full gl as layer zero passes") {
    GradedLieAlgebra ab(std::map<int, int>{{-1, 2}});
    Tower t0(ab, std::nullopt);
    REQUIRE(t0.layer(0).dim() == 4);
    REQUIRE(verify_transitive(t0));
  }
}

TEST_CASE("tower brackets satisfy antisymmetry and Jacobi") {
  SECTION("terminated towers export as honest graded Lie algebras") {
    Tower t = truncated_prolongation(free_fgla(2, 3).algebra, std::nullopt, 5);
    GradedLieAlgebra g = t.to_algebra();
    REQUIRE(g.degrees() == std::vector<int>{-3, -2, -1, 0, 1, 2, 3});
    REQUIRE_FALSE(t.truncation_top());
    REQUIRE(check_jacobi(g).pass);
  }
  SECTION("truncated towers pass Jacobi within range") {
    Tower t = truncated_prolongation(free_fgla(2, 2).algebra, std::nullopt, 3);
    GradedLieAlgebra g = t.to_algebra();
    REQUIRE(t.truncation_top() == 3);
    REQUIRE(check_jacobi(g, t.truncation_top()).pass);
  }
  SECTION("restricted towers pass Jacobi as well") {
    FreePseudoProductFgla pp = free_pseudoproduct_fgla(1, 2, 2);
    Tower t = truncated_prolongation(pp.algebra, pp.pp, 5);
    REQUIRE(check_jacobi(t.to_algebra()).pass);
  }
}
