#include <catch2/catch_amalgamated.hpp>

#include "glat/cartantype.hpp"

using namespace glat;

TEST_CASE("weighted monomial counts") {
  REQUIRE(weighted_poly_dim(3, {1, 2, 2}, 2) == 3);  // x1^2, x2, x3
  REQUIRE(weighted_poly_dim(2, {1, 1}, 3) == 4);
  REQUIRE(weighted_poly_dim(4, {1, 1, 1, 2}, 0) == 1);
  REQUIRE(weighted_poly_dim(2, {1, 2}, -1) == 0);
}

TEST_CASE("W(m;s) layer dimensions") {
  SECTION("W(3;(1,2,2))") {
    std::vector<int> dims;
    for (int p = -2; p <= 1; ++p) dims.push_back(w_layer(3, {1, 2, 2}, p).dim());
    REQUIRE(dims == std::vector<int>{2, 3, 7, 9});
  }
  SECTION("W(2;(1,1))") {
    REQUIRE(w_layer(2, {1, 1}, 0).dim() == 4);  // gl(2)
    REQUIRE(w_layer(2, {1, 1}, 1).dim() == 6);
  }
  SECTION("W(1;(1))") {
    for (int p = -1; p <= 3; ++p) REQUIRE(w_layer(1, {1}, p).dim() == 1);
  }
  SECTION("basis size always matches the counting formula") {
    for (int p = -2; p <= 2; ++p) {
      long long expected = 0;
      std::vector<int> s{1, 2, 2};
      for (int w : s) expected += weighted_poly_dim(3, s, p + w);
      REQUIRE(w_layer(3, s, p).dim() == expected);
    }
  }
}

TEST_CASE("field brackets are graded and Jacobi-exact") {
  std::vector<int> s{1, 2};
  SECTION("bracket of degrees p and q lands in degree p+q") {
    for (int p = -2; p <= 2; ++p)
      for (int q = p; q <= 2; ++q) {
        if (p + q < -2) continue;
        CartanLayer lp = w_layer(2, s, p);
        CartanLayer lq = w_layer(2, s, q);
        CartanLayer target = w_layer(2, s, p + q);
        for (const auto& f : lp.basis)
          for (const auto& g : lq.basis) {
            VectorField br = field_bracket(f, g);
            REQUIRE_NOTHROW(field_coordinates(target, br));  // membership is exact
          }
      }
  }
  SECTION("Jacobi on sampled triples") {
    CartanLayer l0 = w_layer(2, {1, 1}, 0);
    CartanLayer l1 = w_layer(2, {1, 1}, 1);
    auto triple = [](const VectorField& a, const VectorField& b, const VectorField& c) {
      VectorField j = field_bracket(field_bracket(a, b), c);
      VectorField t2 = field_bracket(field_bracket(b, c), a);
      VectorField t3 = field_bracket(field_bracket(c, a), b);
      for (int i = 0; i < static_cast<int>(j.comp.size()); ++i) {
        poly_add(j.comp[i], t2.comp[i]);
        poly_add(j.comp[i], t3.comp[i]);
      }
      return j;
    };
    for (const auto& a : l0.basis)
      for (const auto& b : l0.basis)
        for (const auto& c : l1.basis) REQUIRE(triple(a, b, c).is_zero());
  }
}

TEST_CASE("K(n) layers") {
  SECTION("K(1) dimensions -2..3") {
    std::vector<int> dims;
    for (int p = -2; p <= 3; ++p) dims.push_back(k_layer(1, p).dim());
    REQUIRE(dims == std::vector<int>{1, 2, 4, 6, 9, 12});
  }
  SECTION("K(n)_0 is csp(n)") {
    REQUIRE(k_layer(1, 0).dim() == 4);
    REQUIRE(k_layer(2, 0).dim() == 11);
  }
  SECTION("solver dimension equals the weighted monomial count") {
    for (int n = 1; n <= 2; ++n) {
      std::vector<int> s(2 * n + 1, 1);
      s[2 * n] = 2;
      for (int p = -2; p <= 3; ++p)
        REQUIRE(k_layer(n, p).dim() == weighted_poly_dim(2 * n + 1, s, p + 2));
    }
  }
  SECTION("K layers are closed under bracket with the deep layer") {
    CartanLayer km2 = k_layer(1, -2);
    CartanLayer k1 = k_layer(1, 1);
    CartanLayer km1 = k_layer(1, -1);
    for (const auto& f : k1.basis)
      for (const auto& g : km2.basis) {
        VectorField br = field_bracket(f, g);
        // must be expressible in K(1)_-1 = W_-1 here
        REQUIRE_NOTHROW(field_coordinates(km1, br));
      }
  }
}

TEST_CASE("transitivity of Cartan-type layers") {
  SECTION("W(2;(1,1)) up to degree 2") {
    std::vector<CartanLayer> layers;
    for (int p = -1; p <= 2; ++p) layers.push_back(w_layer(2, {1, 1}, p));
    REQUIRE(check_transitive_cartan(layers));
  }
  SECTION("K(1) up to degree 2") {
    std::vector<CartanLayer> layers;
    for (int p = -2; p <= 2; ++p) layers.push_back(k_layer(1, p));
    REQUIRE(check_transitive_cartan(layers));
  }
  SECTION("subspace faithfulness survives dropping a basis field") {
    std::vector<CartanLayer> layers;
    for (int p = -1; p <= 1; ++p) layers.push_back(w_layer(2, {1, 1}, p));
    layers.back().basis.pop_back();
    REQUIRE(check_transitive_cartan(layers));
  }
}
