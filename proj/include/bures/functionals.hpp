#pragma once

// Spectral functionals of density matrices.

#include <string>
#include <string_view>

#include "bures/linalg.hpp"

namespace bures {

// -sum lambda_i ln lambda_i with 0 ln 0 = 0 (natural log).
// Throws DomainError unless rho is a density matrix to 1e-10.
double von_neumann_entropy(const ComplexSquareMatrix& rho);

// Tr(rho^2). Throws DomainError unless rho is a density matrix.
double purity(const ComplexSquareMatrix& rho);

// Tr(rho^k) = sum lambda_i^k, k >= 1. Throws DomainError unless rho is a density matrix.
double eigenvalue_moment(const ComplexSquareMatrix& rho, int k);

enum class FunctionalKind { constant, von_neumann_entropy, purity, eigenvalue_moment };

struct FunctionalId {
  FunctionalKind kind = FunctionalKind::constant;
  int k = 1;  // only for eigenvalue_moment

  // "entropy", "purity", "moment:k" (k >= 1), "moment:0" or "constant" for the constant 1.
  // Throws std::invalid_argument on anything else.
  static FunctionalId parse(std::string_view text);
  std::string name() const;

  double evaluate(const ComplexSquareMatrix& rho) const;
};

}  // namespace bures
