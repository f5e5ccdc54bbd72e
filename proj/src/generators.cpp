#include "bures/generators.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "bures/errors.hpp"

namespace bures {

namespace {

constexpr complex I{0.0, 1.0};
// 1/sqrt(3) to the last double bit; the only irrational entry.
constexpr double inv_sqrt3 = 0.57735026918962576450914878050195745564760175127013;

std::array<ComplexSquareMatrix, 3> make_pauli() {
  return {
      ComplexSquareMatrix(2, {0.0, 1.0,  //
                              1.0, 0.0}),
      ComplexSquareMatrix(2, {0.0, -I,  //
                              I, 0.0}),
      ComplexSquareMatrix(2, {1.0, 0.0,  //
                              0.0, -1.0}),
  };
}

std::array<ComplexSquareMatrix, 8> make_gell_mann() {
  return {
      ComplexSquareMatrix(3, {0.0, 1.0, 0.0,  //
                              1.0, 0.0, 0.0,  //
                              0.0, 0.0, 0.0}),
      ComplexSquareMatrix(3, {0.0, -I, 0.0,  //
                              I, 0.0, 0.0,   //
                              0.0, 0.0, 0.0}),
      ComplexSquareMatrix(3, {1.0, 0.0, 0.0,   //
                              0.0, -1.0, 0.0,  //
                              0.0, 0.0, 0.0}),
      ComplexSquareMatrix(3, {0.0, 0.0, 1.0,  //
                              0.0, 0.0, 0.0,  //
                              1.0, 0.0, 0.0}),
      ComplexSquareMatrix(3, {0.0, 0.0, -I,   //
                              0.0, 0.0, 0.0,  //
                              I, 0.0, 0.0}),
      ComplexSquareMatrix(3, {0.0, 0.0, 0.0,  //
                              0.0, 0.0, 1.0,  //
                              0.0, 1.0, 0.0}),
      ComplexSquareMatrix(3, {0.0, 0.0, 0.0,  //
                              0.0, 0.0, -I,   //
                              0.0, I, 0.0}),
      ComplexSquareMatrix(3, {inv_sqrt3, 0.0, 0.0,  //
                              0.0, inv_sqrt3, 0.0,  //
                              0.0, 0.0, -2.0 * inv_sqrt3}),
  };
}

}  // namespace

const ComplexSquareMatrix& pauli(int k) {
  static const auto table = make_pauli();
  if (k < 1 || k > 3) throw std::out_of_range("pauli index must be in 1..3, got " + std::to_string(k));
  return table[k - 1];
}

const ComplexSquareMatrix& gell_mann(int k) {
  static const auto table = make_gell_mann();
  if (k < 1 || k > 8) {
    throw std::out_of_range("gell_mann index must be in 1..8, got " + std::to_string(k));
  }
  return table[k - 1];
}

const GeneratorSet& generator_set(int n) {
  static const GeneratorSet two = [] {
    GeneratorSet s;
    s.n = 2;
    for (int k = 1; k <= 3; ++k) s.generators.push_back(pauli(k));
    s.cartan_indices = {3};
    s.coset_indices = {1, 2};
    return s;
  }();
  static const GeneratorSet three = [] {
    GeneratorSet s;
    s.n = 3;
    for (int k = 1; k <= 8; ++k) s.generators.push_back(gell_mann(k));
    s.cartan_indices = {3, 8};
    s.coset_indices = {1, 2, 4, 5, 6, 7};
    return s;
  }();
  if (n == 2) return two;
  if (n == 3) return three;
  throw DimensionError("generator_set: n must be 2 or 3, got " + std::to_string(n));
}

}  // namespace bures
