#include "bures/euler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "bures/errors.hpp"
#include "bures/generators.hpp"

namespace bures {

namespace {

constexpr std::array<double, 3> upper_2{pi / 4, pi, pi / 2};
constexpr std::array<double, 8> upper_3{pi / 4, theta2_max, pi, pi / 2, pi, pi / 2, pi, pi / 2};
constexpr std::array<std::string_view, 3> names_2{"theta", "alpha", "beta"};
constexpr std::array<std::string_view, 8> names_3{"theta1", "theta2", "alpha", "beta",
                                                  "gamma",  "theta_big", "a", "b"};

constexpr double inv_sqrt3 = 0.57735026918962576450914878050195745564760175127013;
constexpr std::array<EulerFactor, 3> layout_2{{{3, 1.0}, {2, 1.0}, {3, 1.0}}};
constexpr std::array<EulerFactor, 8> layout_3{
    {{3, 1.0}, {2, 1.0}, {3, 1.0}, {5, 1.0}, {3, 1.0}, {2, 1.0}, {3, 1.0}, {8, inv_sqrt3}}};

void require_n(int n, const char* where) {
  if (n != 2 && n != 3) {
    throw DimensionError(std::string(where) + ": n must be 2 or 3, got " + std::to_string(n));
  }
}

void check_range(std::string_view name, double value, double upper) {
  if (!(value >= 0.0 && value <= upper)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "coordinate '" << name << "' = " << value << " outside [0, " << upper << "]";
    throw RangeError(std::string(name), msg.str());
  }
}

}  // namespace

std::span<const double> coordinate_upper_bounds(int n) {
  require_n(n, "coordinate_upper_bounds");
  if (n == 2) return upper_2;
  return upper_3;
}

std::span<const std::string_view> coordinate_names(int n) {
  require_n(n, "coordinate_names");
  if (n == 2) return names_2;
  return names_3;
}

int coordinate_count(int n) {
  require_n(n, "coordinate_count");
  return n * n - 1;
}

EigenvalueAngles::EigenvalueAngles(int n, std::span<const double> angles) : n_(n) {
  require_n(n, "EigenvalueAngles");
  if (angles.size() != static_cast<std::size_t>(n - 1)) {
    throw DimensionError("EigenvalueAngles: expected " + std::to_string(n - 1) + " angles");
  }
  const auto upper = coordinate_upper_bounds(n);
  const auto names = coordinate_names(n);
  for (int i = 0; i < n - 1; ++i) {
    check_range(names[i], angles[i], upper[i]);
    angles_[i] = angles[i];
  }
}

CosetAngles::CosetAngles(int n, std::span<const double> angles) : n_(n) {
  require_n(n, "CosetAngles");
  if (angles.size() != static_cast<std::size_t>(size())) {
    throw DimensionError("CosetAngles: expected " + std::to_string(size()) + " angles");
  }
  const auto upper = coordinate_upper_bounds(n);
  const auto names = coordinate_names(n);
  for (int i = 0; i < size(); ++i) {
    check_range(names[n - 1 + i], angles[i], upper[n - 1 + i]);
    angles_[i] = angles[i];
  }
}

DensityMatrixParams DensityMatrixParams::from_coordinates(int n,
                                                          std::span<const double> coordinates) {
  if (coordinates.size() != static_cast<std::size_t>(coordinate_count(n))) {
    throw DimensionError("expected " + std::to_string(coordinate_count(n)) +
                         " coordinates, got " + std::to_string(coordinates.size()));
  }
  return {EigenvalueAngles(n, coordinates.first(n - 1)),
          CosetAngles(n, coordinates.subspan(n - 1))};
}

std::vector<double> DensityMatrixParams::coordinates() const {
  std::vector<double> out(eigen.angles().begin(), eigen.angles().end());
  out.insert(out.end(), coset.angles().begin(), coset.angles().end());
  return out;
}

RealList diag_eigenvalues(const EigenvalueAngles& eigen) {
  RealList out;
  out.n = eigen.n();
  if (eigen.n() == 2) {
    const double c = std::cos(eigen[0]);
    const double s = std::sin(eigen[0]);
    out.values = {c * c, s * s, 0.0};
  } else {
    const double c1 = std::cos(eigen[0]), s1 = std::sin(eigen[0]);
    const double c2 = std::cos(eigen[1]), s2 = std::sin(eigen[1]);
    out.values = {c1 * c1 * s2 * s2, s1 * s1 * s2 * s2, c2 * c2};
  }
  return out;
}

std::span<const EulerFactor> euler_factor_layout(int n) {
  require_n(n, "euler_factor_layout");
  if (n == 2) return layout_2;
  return layout_3;
}

const HermitianExponential& generator_exponential(int n, int k) {
  static const std::vector<HermitianExponential> two = [] {
    std::vector<HermitianExponential> v;
    for (int i = 1; i <= 3; ++i) v.emplace_back(pauli(i));
    return v;
  }();
  static const std::vector<HermitianExponential> three = [] {
    std::vector<HermitianExponential> v;
    for (int i = 1; i <= 8; ++i) v.emplace_back(gell_mann(i));
    return v;
  }();
  require_n(n, "generator_exponential");
  return (n == 2 ? two : three).at(k - 1);
}

ComplexSquareMatrix euler_unitary(int n, std::span<const double> full_angles) {
  const auto layout = euler_factor_layout(n);
  if (full_angles.size() != layout.size()) {
    throw DimensionError("euler_unitary: n = " + std::to_string(n) + " takes " +
                         std::to_string(layout.size()) + " angles, got " +
                         std::to_string(full_angles.size()));
  }
  ComplexSquareMatrix u = ComplexSquareMatrix::identity(n);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto& f = layout[i];
    u = matmul(u, generator_exponential(n, f.generator).at(f.angle_scale * full_angles[i]));
  }
  return u;
}

ComplexSquareMatrix coset_unitary(const CosetAngles& coset) {
  std::array<double, 8> full{};
  std::copy(coset.angles().begin(), coset.angles().end(), full.begin());
  return euler_unitary(coset.n(), std::span<const double>(full.data(), coset.n() == 2 ? 3 : 8));
}

ComplexSquareMatrix density_from_params(const DensityMatrixParams& p) {
  const ComplexSquareMatrix u = coset_unitary(p.coset);
  const RealList lambda = diag_eigenvalues(p.eigen);
  const int n = p.n();
  // U diag(lambda) U^dagger, accumulated directly and made exactly Hermitian.
  ComplexSquareMatrix rho(n);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      complex sum = 0.0;
      for (int k = 0; k < n; ++k) sum += u(r, k) * lambda[k] * std::conj(u(c, k));
      rho(r, c) = sum;
      rho(c, r) = std::conj(sum);
    }
  for (int i = 0; i < n; ++i) rho(i, i) = rho(i, i).real();
  return rho;
}

void require_density_matrix(const ComplexSquareMatrix& rho) {
  if (!is_hermitian(rho)) throw DomainError("not a density matrix: not Hermitian");
  if (std::abs(trace(rho) - 1.0) > density_tolerance) {
    throw DomainError("not a density matrix: trace differs from 1");
  }
  const auto eig = eig_hermitian(rho);
  if (eig.eigenvalues[eig.dim() - 1] < -density_tolerance) {
    throw DomainError("not a density matrix: negative eigenvalue");
  }
}

InverseResult params_from_density_2(const ComplexSquareMatrix& rho) {
  if (rho.dim() != 2) throw DomainError("params_from_density_2: expected a 2x2 matrix");
  require_density_matrix(rho);

  const auto eig = eig_hermitian(rho);
  const double top = eig.eigenvalues[0];
  const double bottom = eig.eigenvalues[1];
  const double gap = top - bottom;

  const std::array<double, 2> zeros{0.0, 0.0};
  if (gap <= density_tolerance) {
    const double theta = pi / 4;
    return {{EigenvalueAngles(2, std::span(&theta, 1)), CosetAngles(2, zeros)}, true};
  }

  const double theta =
      std::clamp(std::acos(std::sqrt(std::clamp(top, 0.0, 1.0))), 0.0, pi / 4);

  // Spectral projector onto the leading eigenvector u1 = (e^{i alpha} cos b, -e^{-i alpha} sin b):
  // P00 = cos^2 b, P11 = sin^2 b, P01 = -e^{2 i alpha} cos b sin b.
  const ComplexSquareMatrix projector =
      (1.0 / gap) * (rho - complex(bottom) * ComplexSquareMatrix::identity(2));
  const double p00 = std::max(projector(0, 0).real(), 0.0);
  const double p11 = std::max(projector(1, 1).real(), 0.0);
  const double beta = std::clamp(std::atan2(std::sqrt(p11), std::sqrt(p00)), 0.0, pi / 2);

  double alpha = 0.0;
  const complex p01 = projector(0, 1);
  if (std::abs(p01) > 0.0) {
    alpha = 0.5 * std::arg(-p01);  // (-pi/2, pi/2]
    if (alpha < 0.0) alpha += pi;
    if (alpha >= pi) alpha -= pi;
  }

  const std::array<double, 2> coset{alpha, beta};
  return {{EigenvalueAngles(2, std::span(&theta, 1)), CosetAngles(2, coset)}, false};
}

}  // namespace bures
