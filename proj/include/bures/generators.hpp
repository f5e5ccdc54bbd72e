#pragma once

// Pauli (n = 2) and Gell-Mann (n = 3) generator sets.
//
// Indices are 1-based, matching the conventional subscripts sigma_1..sigma_3 and
// lambda_1..lambda_8. Every generator is Hermitian, traceless and normalized so that
// Tr(T_a T_b) = 2 delta_ab.

#include <vector>

#include "bures/linalg.hpp"

namespace bures {

// Throws std::out_of_range unless 1 <= k <= 3.
const ComplexSquareMatrix& pauli(int k);
// Throws std::out_of_range unless 1 <= k <= 8.
const ComplexSquareMatrix& gell_mann(int k);

struct GeneratorSet {
  int n = 2;
  // generators[k - 1] is T_k.
  std::vector<ComplexSquareMatrix> generators;
  // Diagonal generators: {3} for n = 2, {3, 8} for n = 3.
  std::vector<int> cartan_indices;
  // Complement of cartan_indices, ascending.
  std::vector<int> coset_indices;

  const ComplexSquareMatrix& operator[](int k) const { return generators.at(k - 1); }
  int size() const noexcept { return static_cast<int>(generators.size()); }
};

// Throws DimensionError unless n is 2 or 3.
const GeneratorSet& generator_set(int n);

}  // namespace bures
