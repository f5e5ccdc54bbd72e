#pragma once

// Fixed small-dimension complex matrix arithmetic (n = 2 or 3).

#include <array>
#include <complex>
#include <initializer_list>
#include <span>

namespace bures {

using complex = std::complex<double>;

// Dense dim x dim complex matrix, dim in {2, 3}. Storage is inline and row-major.
class ComplexSquareMatrix {
 public:
  static constexpr int max_dim = 3;

  // Zero matrix.
  explicit ComplexSquareMatrix(int dim);
  // Row-major entries; exactly dim*dim values required.
  ComplexSquareMatrix(int dim, std::initializer_list<complex> row_major);

  static ComplexSquareMatrix identity(int dim);
  static ComplexSquareMatrix diagonal(std::span<const double> values);

  int dim() const noexcept { return dim_; }

  complex operator()(int row, int col) const noexcept { return entries_[row * max_dim + col]; }
  complex& operator()(int row, int col) noexcept { return entries_[row * max_dim + col]; }

  ComplexSquareMatrix& operator+=(const ComplexSquareMatrix& other);
  ComplexSquareMatrix& operator-=(const ComplexSquareMatrix& other);
  ComplexSquareMatrix& operator*=(complex scale) noexcept;

  friend bool operator==(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) noexcept;

 private:
  int dim_;
  std::array<complex, max_dim * max_dim> entries_{};
};

ComplexSquareMatrix operator+(ComplexSquareMatrix a, const ComplexSquareMatrix& b);
ComplexSquareMatrix operator-(ComplexSquareMatrix a, const ComplexSquareMatrix& b);
ComplexSquareMatrix operator*(complex scale, ComplexSquareMatrix a) noexcept;
ComplexSquareMatrix operator*(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b);

// Throws DimensionError if a.dim() != b.dim().
ComplexSquareMatrix matmul(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b);
ComplexSquareMatrix dagger(const ComplexSquareMatrix& a);
complex trace(const ComplexSquareMatrix& a) noexcept;
complex determinant(const ComplexSquareMatrix& a) noexcept;
double frobenius_norm(const ComplexSquareMatrix& a) noexcept;
ComplexSquareMatrix commutator(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b);

// Relative Hermiticity tolerance used by every operation that requires a Hermitian input.
inline constexpr double hermitian_tolerance = 1e-10;

// ||a - a^dagger||_F <= hermitian_tolerance * max(1, ||a||_F)
bool is_hermitian(const ComplexSquareMatrix& a) noexcept;

struct HermitianEigenResult {
  // Descending.
  std::array<double, ComplexSquareMatrix::max_dim> eigenvalues{};
  // Columns are orthonormal eigenvectors, in the same order as eigenvalues.
  ComplexSquareMatrix eigenvectors{2};

  int dim() const noexcept { return eigenvectors.dim(); }
  std::span<const double> values() const noexcept {
    return {eigenvalues.data(), static_cast<std::size_t>(dim())};
  }
};

// Cyclic complex Jacobi. For dim 2 a single rotation diagonalizes exactly, which is the
// closed-form solution. Degenerate eigenvalues keep their index order (stable sort), so
// the eigenvectors of an already-diagonal input are the unit vectors.
// Throws DomainError on non-Hermitian input.
HermitianEigenResult eig_hermitian(const ComplexSquareMatrix& a);

// exp(i * angle * generator) = sum_k e^{i mu_k angle} P_k over the spectral projectors P_k
// of a Hermitian generator, computed once. When the distinct eigenvalues are well
// separated the projectors come from Sylvester's formula prod_{j != k} (g - mu_j)/(mu_k - mu_j),
// which is exact for generators with small integer spectra (Pauli, Gell-Mann); otherwise
// they are built from the eigenvectors.
class HermitianExponential {
 public:
  explicit HermitianExponential(const ComplexSquareMatrix& generator);

  const ComplexSquareMatrix& generator() const noexcept { return generator_; }
  int dim() const noexcept { return generator_.dim(); }

  ComplexSquareMatrix at(double angle) const;
  // d/d(angle) exp(i angle g) = i g exp(i angle g)
  ComplexSquareMatrix derivative_at(double angle) const;

 private:
  ComplexSquareMatrix generator_;
  int terms_ = 0;
  std::array<double, ComplexSquareMatrix::max_dim> frequencies_{};
  std::array<ComplexSquareMatrix, ComplexSquareMatrix::max_dim> projectors_{
      ComplexSquareMatrix(2), ComplexSquareMatrix(2), ComplexSquareMatrix(2)};
};

// exp(i * angle * g). Throws DomainError if g is not Hermitian.
ComplexSquareMatrix expm_i_generator(const ComplexSquareMatrix& g, double angle);

}  // namespace bures
