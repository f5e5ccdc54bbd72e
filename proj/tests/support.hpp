#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "bures/euler.hpp"
#include "bures/linalg.hpp"

namespace bures::test {

inline double max_abs_diff(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) {
  double d = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

// Random Hermitian matrix with Frobenius norm at most 10.
inline ComplexSquareMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double scale = 10.0 / std::sqrt(n == 2 ? 6.0 : 15.0);
  ComplexSquareMatrix h(n);
  for (int r = 0; r < n; ++r) {
    h(r, r) = scale * u(rng);
    for (int c = r + 1; c < n; ++c) {
      h(r, c) = scale * complex(u(rng), u(rng)) / std::sqrt(2.0);
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

// Uniform point of the closed coordinate box, flat order.
inline std::vector<double> random_coordinates(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x;
  for (double hi : coordinate_upper_bounds(n)) x.push_back(hi * u(rng));
  return x;
}

// Interior point, bounded away from every face by margin (as a fraction of the range).
inline std::vector<double> interior_coordinates(int n, std::mt19937_64& rng, double margin = 0.02) {
  std::uniform_real_distribution<double> u(margin, 1.0 - margin);
  std::vector<double> x;
  for (double hi : coordinate_upper_bounds(n)) x.push_back(hi * u(rng));
  return x;
}

}  // namespace bures::test
