#pragma once

// Euler-angle coordinates for 2- and 3-state density matrices.
//
// A density matrix is rho' = U diag(lambda) U^dagger with the eigenvalues written as
// squared components of a point on a sphere,
//   n = 2: (cos^2 t, sin^2 t)
//   n = 3: (cos^2 t1 sin^2 t2, sin^2 t1 sin^2 t2, cos^2 t2)
// and U an Euler-angle product of one-parameter subgroups,
//   n = 2: e^{i s3 alpha} e^{i s2 beta} e^{i s3 gamma}
//   n = 3: e^{i l3 alpha} e^{i l2 beta} e^{i l3 gamma} e^{i l5 theta} e^{i l3 a} e^{i l2 b}
//          e^{i l3 c} e^{i l8 phi/sqrt(3)}
// The rightmost Cartan factors commute with the diagonal matrix, so only the coset
// angles ((alpha, beta) or (alpha, beta, gamma, theta, a, b)) reach rho'.
//
// Flat coordinate order used throughout (box, sampler, CLI):
//   n = 2: theta, alpha, beta
//   n = 3: theta1, theta2, alpha, beta, gamma, theta_big, a, b

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "bures/linalg.hpp"

namespace bures {

inline constexpr double pi = 3.14159265358979323846264338327950288;
// arccos(1/sqrt(3)), the upper end of the theta2 range.
inline constexpr double theta2_max = 0.95531661812450927816385710251575775424341469501000;

// Closed-range upper bounds (lower bounds are all 0) in flat coordinate order.
std::span<const double> coordinate_upper_bounds(int n);
std::span<const std::string_view> coordinate_names(int n);
// n^2 - 1
int coordinate_count(int n);

// Fixed-capacity list of n reals.
struct RealList {
  int n = 0;
  std::array<double, 3> values{};

  double operator[](int i) const noexcept { return values[i]; }
  std::span<const double> span() const noexcept {
    return {values.data(), static_cast<std::size_t>(n)};
  }
};

// The n - 1 eigenvalue angles: theta (n = 2) or (theta1, theta2) (n = 3).
// Construction checks every angle against its closed range and throws RangeError.
class EigenvalueAngles {
 public:
  EigenvalueAngles(int n, std::span<const double> angles);

  int n() const noexcept { return n_; }
  double operator[](int i) const noexcept { return angles_[i]; }
  std::span<const double> angles() const noexcept {
    return {angles_.data(), static_cast<std::size_t>(n_ - 1)};
  }

 private:
  int n_;
  std::array<double, 2> angles_{};
};

// The coset angles: (alpha, beta) for n = 2, (alpha, beta, gamma, theta, a, b) for n = 3.
// Construction checks ranges and throws RangeError naming the coordinate.
class CosetAngles {
 public:
  CosetAngles(int n, std::span<const double> angles);

  int n() const noexcept { return n_; }
  int size() const noexcept { return n_ == 2 ? 2 : 6; }
  double operator[](int i) const noexcept { return angles_[i]; }
  std::span<const double> angles() const noexcept {
    return {angles_.data(), static_cast<std::size_t>(size())};
  }

 private:
  int n_;
  std::array<double, 6> angles_{};
};

struct DensityMatrixParams {
  EigenvalueAngles eigen;
  CosetAngles coset;

  int n() const noexcept { return eigen.n(); }

  // Flat order documented at the top of this header. Throws DimensionError on a wrong
  // count and RangeError on an out-of-range coordinate.
  static DensityMatrixParams from_coordinates(int n, std::span<const double> coordinates);
  std::vector<double> coordinates() const;
};

// n = 2: (cos^2 t, sin^2 t); n = 3: (cos^2 t1 sin^2 t2, sin^2 t1 sin^2 t2, cos^2 t2).
RealList diag_eigenvalues(const EigenvalueAngles& eigen);

// One exponential factor of the Euler product: exp(i * angle_scale * angle * T_generator).
struct EulerFactor {
  int generator;
  double angle_scale;
};

// Factor layout in left-to-right order: 3 factors for n = 2, 8 for n = 3.
std::span<const EulerFactor> euler_factor_layout(int n);
// Cached exponential of generator T_k of the n-dimensional set.
const HermitianExponential& generator_exponential(int n, int k);

// Full Euler product. n = 2 takes (alpha, beta, gamma), n = 3 takes
// (alpha, beta, gamma, theta, a, b, c, phi). Angles are not range checked here.
// Throws DimensionError on a wrong angle count.
ComplexSquareMatrix euler_unitary(int n, std::span<const double> full_angles);

// euler_unitary with the Cartan angles on the right pinned to zero.
ComplexSquareMatrix coset_unitary(const CosetAngles& coset);

// U diag(lambda) U^dagger with U = coset_unitary(p.coset).
ComplexSquareMatrix density_from_params(const DensityMatrixParams& p);

struct InverseResult {
  DensityMatrixParams params;
  // Set when |lambda_1 - lambda_2| <= density_tolerance; coset angles are then zero.
  bool gauge_degenerate = false;
};

inline constexpr double density_tolerance = 1e-10;

// Throws DomainError unless rho is Hermitian, unit trace and PSD (each to 1e-10).
void require_density_matrix(const ComplexSquareMatrix& rho);

// Inverse of density_from_params for n = 2. alpha is folded into [0, pi).
// Throws DomainError if rho is not a 2x2 density matrix.
InverseResult params_from_density_2(const ComplexSquareMatrix& rho);

}  // namespace bures
