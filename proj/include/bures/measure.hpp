#pragma once

// Bures measure density in Euler-angle coordinates.
//
// The density is a product of three factors:
//   hall_density        eigenvalue factor on the simplex, w.r.t. d lambda_1 .. d lambda_{n-1}
//   eigenvalue_jacobian change of variables lambda -> eigenvalue angles
//   haar_coset_density  truncated Haar density on SU(n)/U(1)^{n-1}, obtained numerically
//                       from the Maurer-Cartan form U^dagger dU
// RAW values keep every constant of the eigenvalue factor (including the 4 in each
// pair term) and use the angle box as is. NORMALIZED divides by the integral of RAW
// over the box.

#include <span>
#include <string_view>
#include <vector>

#include "bures/euler.hpp"
#include "bures/quadrature.hpp"

namespace bures {

enum class NormalizationMode { raw, normalized };

NormalizationMode parse_mode(std::string_view name);
std::string_view mode_name(NormalizationMode mode);

// Rectangular coordinate box [lower, upper] in flat coordinate order.
struct AngleBox {
  int n = 2;
  std::vector<double> lower;
  std::vector<double> upper;

  // All n^2 - 1 coordinates.
  static AngleBox full(int n);
  // Eigenvalue angles only.
  static AngleBox eigen(int n);
  // Coset angles only.
  static AngleBox coset(int n);

  int dimension() const noexcept { return static_cast<int>(lower.size()); }
  double volume() const;
};

struct HallValue {
  double value = 0.0;
  // An eigenvalue is exactly zero: value is +infinity.
  bool boundary_singular = false;
};

// (lambda_1 ... lambda_n)^{-1/2} prod_{j<k} 4 (lambda_j - lambda_k)^2 / (lambda_j + lambda_k).
// Throws DomainError on negative entries or a sum off 1 by more than 1e-12.
HallValue hall_density(std::span<const double> lambdas);

// |det d(lambda_1..lambda_{n-1}) / d(angles)|: sin 2t (n = 2),
// sin 2t1 sin^2 t2 sin 2t2 (n = 3).
double eigenvalue_jacobian(const EigenvalueAngles& eigen);

// hall_density(diag_eigenvalues(eigen)) * eigenvalue_jacobian(eigen), composed analytically
// so that it stays finite where an eigenvalue vanishes: the jacobian contains
// sqrt(lambda_1 ... lambda_n) as a factor (ratio 2 for n = 2, 4 sin t2 for n = 3).
double eigenvalue_density(const EigenvalueAngles& eigen);

// Real (2x2 or 6x6) row-major coefficient matrix c_{k,a} = (1/2) Tr(-i U^dagger dU/dx_k T_a),
// rows over coset angles, columns over coset generators. dU/dx_k replaces the single
// factor holding x_k by its exact derivative.
std::vector<double> maurer_cartan_coefficients(const CosetAngles& coset);

// Determinant of a dense row-major square matrix (LU with partial pivoting).
double real_determinant(std::vector<double> matrix, int size);

// |det maurer_cartan_coefficients(coset)|
double haar_coset_density(const CosetAngles& coset);

struct MeasureValue {
  double value = 0.0;
  NormalizationMode mode = NormalizationMode::raw;
  int n = 2;
  // hall_density was singular at this point; value is the analytic limit.
  bool boundary_singular = false;
};

MeasureValue bures_joint_density(const DensityMatrixParams& p,
                                 NormalizationMode mode = NormalizationMode::raw);

// Resolution at which the cached normalization constants are computed.
QuadratureSpec normalization_spec(int n);

// Integral of the RAW joint density over AngleBox::full(n); cached after first use.
double normalization_constant(int n);
// Integral of haar_coset_density over AngleBox::coset(n); cached after first use.
double coset_normalization_constant(int n);
// Integral of eigenvalue_density over AngleBox::eigen(n); cached after first use.
double eigen_normalization_constant(int n);

// The same integrals at an arbitrary resolution (not cached). For n = 3 the joint
// integral is the product of the eigen and coset integrals over the same tensor grid.
double eigen_volume(int n, const QuadratureSpec& spec, int workers = 1);
double coset_volume(int n, const QuadratureSpec& spec, int workers = 1);
double joint_volume(int n, const QuadratureSpec& spec, int workers = 1);
// Unfactored tensor sum of the RAW joint density over all n^2 - 1 axes.
double joint_volume_full_tensor(int n, const QuadratureSpec& spec, int workers = 1);

// Normalized coset density: haar_coset_density / coset_normalization_constant.
double normalized_coset_density(const CosetAngles& coset);

}  // namespace bures
