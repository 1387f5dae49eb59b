#ifndef GLAT_TESTS_ORACLES_HPP
#define GLAT_TESTS_ORACLES_HPP

// Test-only oracles, independent of the library's implementation paths.

#include <random>
#include <string>
#include <vector>

#include "glat/matrix.hpp"
#include "glat/subspace.hpp"

namespace oracles {

// Brute-force Lyndon word count: enumerate all strings of length d over an
// n-letter alphabet and keep those strictly smaller than every proper
// rotation. Independent dimension oracle for the free Lie algebra.
inline long long lyndon_count(int n, int d) {
  std::vector<int> w(d, 0);
  long long count = 0;
  while (true) {
    bool lyndon = true;
    for (int r = 1; r < d && lyndon; ++r) {
      // compare w with its rotation by r
      for (int i = 0; i < d; ++i) {
        int a = w[i], b = w[(i + r) % d];
        if (a != b) {
          lyndon = a < b;
          break;
        }
        if (i == d - 1) lyndon = false;  // equal to a proper rotation
      }
    }
    if (lyndon) ++count;
    int pos = d - 1;
    while (pos >= 0 && w[pos] == n - 1) w[pos--] = 0;
    if (pos < 0) break;
    ++w[pos];
  }
  return count;
}

inline glat::Rational random_rational(std::mt19937& rng, int num_range = 5, int den_range = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return glat::Rational(num(rng), den(rng));
}

inline glat::Matrix random_matrix(std::mt19937& rng, int rows, int cols, int range = 4) {
  glat::Matrix m(rows, cols);
  std::uniform_int_distribution<int> dist(-range, range);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = glat::Rational(dist(rng));
  return m;
}

inline glat::Matrix random_invertible(std::mt19937& rng, int n, int range = 3) {
  while (true) {
    glat::Matrix m = random_matrix(rng, n, n, range);
    if (glat::inverse(m)) return m;
  }
}

inline glat::Subspace random_subspace(std::mt19937& rng, int ambient, int spanning_rows) {
  std::vector<glat::Vec> rows;
  for (int r = 0; r < spanning_rows; ++r) {
    glat::Vec v(ambient);
    for (int j = 0; j < ambient; ++j) v[j] = random_rational(rng, 3, 2);
    rows.push_back(std::move(v));
  }
  return glat::Subspace::from_spanning(ambient, rows);
}

}  // namespace oracles

#endif
