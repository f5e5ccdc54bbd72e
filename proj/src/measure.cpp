#include "bures/measure.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bures/errors.hpp"
#include "bures/generators.hpp"

namespace bures {

namespace {

constexpr double boundary_band = 1e-12;

void require_n(int n) {
  if (n != 2 && n != 3) throw DimensionError("n must be 2 or 3, got " + std::to_string(n));
}

// prod_{j<k} 4 (l_j - l_k)^2 / (l_j + l_k); a pair with l_j + l_k = 0 contributes its limit 0.
double pair_product(std::span<const double> lambdas) {
  double product = 1.0;
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    for (std::size_t k = j + 1; k < lambdas.size(); ++k) {
      const double sum = lambdas[j] + lambdas[k];
      if (sum <= 0.0) return 0.0;
      const double diff = lambdas[j] - lambdas[k];
      product *= 4.0 * diff * diff / sum;
    }
  return product;
}

complex trace_of_product(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) {
  complex sum = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) sum += a(r, c) * b(c, r);
  return sum;
}

struct CachedConstant {
  std::once_flag once;
  double value = 0.0;
};

template <class Compute>
double cached(CachedConstant& slot, Compute&& compute) {
  std::call_once(slot.once, [&] { slot.value = compute(); });
  return slot.value;
}

}  // namespace

NormalizationMode parse_mode(std::string_view name) {
  if (name == "raw") return NormalizationMode::raw;
  if (name == "normalized") return NormalizationMode::normalized;
  throw std::invalid_argument("unknown normalization mode '" + std::string(name) + "'");
}

std::string_view mode_name(NormalizationMode mode) {
  return mode == NormalizationMode::raw ? "raw" : "normalized";
}

AngleBox AngleBox::full(int n) {
  const auto upper = coordinate_upper_bounds(n);
  return {n, std::vector<double>(upper.size(), 0.0), {upper.begin(), upper.end()}};
}

AngleBox AngleBox::eigen(int n) {
  const auto upper = coordinate_upper_bounds(n).first(n - 1);
  return {n, std::vector<double>(upper.size(), 0.0), {upper.begin(), upper.end()}};
}

AngleBox AngleBox::coset(int n) {
  const auto upper = coordinate_upper_bounds(n).subspan(n - 1);
  return {n, std::vector<double>(upper.size(), 0.0), {upper.begin(), upper.end()}};
}

double AngleBox::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i];
  return v;
}

HallValue hall_density(std::span<const double> lambdas) {
  if (lambdas.size() != 2 && lambdas.size() != 3) {
    throw DimensionError("hall_density: expected 2 or 3 eigenvalues");
  }
  double total = 0.0;
  double product = 1.0;
  for (double l : lambdas) {
    if (!(l >= 0.0)) throw DomainError("hall_density: negative eigenvalue");
    total += l;
    product *= l;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("hall_density: eigenvalues must sum to 1");
  if (product == 0.0) return {std::numeric_limits<double>::infinity(), true};
  return {pair_product(lambdas) / std::sqrt(product), false};
}

double eigenvalue_jacobian(const EigenvalueAngles& eigen) {
  if (eigen.n() == 2) return std::abs(std::sin(2.0 * eigen[0]));
  const double s2 = std::sin(eigen[1]);
  return std::abs(std::sin(2.0 * eigen[0]) * s2 * s2 * std::sin(2.0 * eigen[1]));
}

double eigenvalue_density(const EigenvalueAngles& eigen) {
  const RealList lambda = diag_eigenvalues(eigen);
  // jacobian / sqrt(prod lambda); cos t2 >= 1/sqrt(3) on the theta2 range.
  const double ratio = eigen.n() == 2 ? 2.0 : 4.0 * std::sin(eigen[1]);
  return ratio * pair_product(lambda.span());
}

std::vector<double> maurer_cartan_coefficients(const CosetAngles& coset) {
  const int n = coset.n();
  const int m = coset.size();
  const auto layout = euler_factor_layout(n);
  const GeneratorSet& set = generator_set(n);

  std::array<ComplexSquareMatrix, 6> factors{ComplexSquareMatrix(n), ComplexSquareMatrix(n),
                                             ComplexSquareMatrix(n), ComplexSquareMatrix(n),
                                             ComplexSquareMatrix(n), ComplexSquareMatrix(n)};
  for (int i = 0; i < m; ++i) {
    factors[i] = generator_exponential(n, layout[i].generator).at(layout[i].angle_scale * coset[i]);
  }

  // prefix[i] = F_0 ... F_{i-1}, suffix[i] = F_i ... F_{m-1}
  const ComplexSquareMatrix id = ComplexSquareMatrix::identity(n);
  std::array<ComplexSquareMatrix, 7> prefix{id, id, id, id, id, id, id};
  std::array<ComplexSquareMatrix, 7> suffix{id, id, id, id, id, id, id};
  for (int i = 0; i < m; ++i) prefix[i + 1] = matmul(prefix[i], factors[i]);
  for (int i = m - 1; i >= 0; --i) suffix[i] = matmul(factors[i], suffix[i + 1]);
  const ComplexSquareMatrix u_dagger = dagger(prefix[m]);

  std::vector<double> coefficients(static_cast<std::size_t>(m * m));
  for (int k = 0; k < m; ++k) {
    const auto& f = layout[k];
    const ComplexSquareMatrix d_factor =
        f.angle_scale * generator_exponential(n, f.generator).derivative_at(f.angle_scale * coset[k]);
    const ComplexSquareMatrix d_u = matmul(matmul(prefix[k], d_factor), suffix[k + 1]);
    const ComplexSquareMatrix form = complex(0.0, -1.0) * matmul(u_dagger, d_u);
    for (int j = 0; j < m; ++j) {
      coefficients[k * m + j] = 0.5 * trace_of_product(form, set[set.coset_indices[j]]).real();
    }
  }
  return coefficients;
}

double real_determinant(std::vector<double> a, int size) {
  if (a.size() != static_cast<std::size_t>(size * size)) {
    throw DimensionError("real_determinant: matrix size mismatch");
  }
  double det = 1.0;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    for (int r = col + 1; r < size; ++r)
      if (std::abs(a[r * size + col]) > std::abs(a[pivot * size + col])) pivot = r;
    if (a[pivot * size + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < size; ++c) std::swap(a[pivot * size + c], a[col * size + c]);
      det = -det;
    }
    const double diag = a[col * size + col];
    det *= diag;
    for (int r = col + 1; r < size; ++r) {
      const double factor = a[r * size + col] / diag;
      if (factor == 0.0) continue;
      for (int c = col + 1; c < size; ++c) a[r * size + c] -= factor * a[col * size + c];
    }
  }
  return det;
}

double haar_coset_density(const CosetAngles& coset) {
  return std::abs(real_determinant(maurer_cartan_coefficients(coset), coset.size()));
}

MeasureValue bures_joint_density(const DensityMatrixParams& p, NormalizationMode mode) {
  const RealList lambda = diag_eigenvalues(p.eigen);
  bool singular = false;
  for (double l : lambda.span()) singular = singular || l <= boundary_band;

  double value = eigenvalue_density(p.eigen) * haar_coset_density(p.coset);
  if (mode == NormalizationMode::normalized) value /= normalization_constant(p.n());
  return {value, mode, p.n(), singular};
}

QuadratureSpec normalization_spec(int n) {
  require_n(n);
  return {n == 2 ? 64 : 12, QuadratureRule::gauss_legendre};
}

double eigen_volume(int n, const QuadratureSpec& spec, int workers) {
  const AngleBox box = AngleBox::eigen(n);
  return tensor_integrate(
      box.lower, box.upper, spec,
      [n](std::span<const double> x) { return eigenvalue_density(EigenvalueAngles(n, x)); },
      workers);
}

double coset_volume(int n, const QuadratureSpec& spec, int workers) {
  const AngleBox box = AngleBox::coset(n);
  return tensor_integrate(
      box.lower, box.upper, spec,
      [n](std::span<const double> x) { return haar_coset_density(CosetAngles(n, x)); }, workers);
}

double joint_volume_full_tensor(int n, const QuadratureSpec& spec, int workers) {
  const AngleBox box = AngleBox::full(n);
  return tensor_integrate(
      box.lower, box.upper, spec,
      [n](std::span<const double> x) {
        return bures_joint_density(DensityMatrixParams::from_coordinates(n, x)).value;
      },
      workers);
}

double joint_volume(int n, const QuadratureSpec& spec, int workers) {
  require_n(n);
  if (n == 2) return joint_volume_full_tensor(n, spec, workers);
  return eigen_volume(n, spec, workers) * coset_volume(n, spec, workers);
}

double normalization_constant(int n) {
  require_n(n);
  static std::array<CachedConstant, 2> slots;
  return cached(slots[n - 2], [n] {
    if (n == 2) return joint_volume(2, normalization_spec(2));
    return eigen_normalization_constant(3) * coset_normalization_constant(3);
  });
}

double coset_normalization_constant(int n) {
  require_n(n);
  static std::array<CachedConstant, 2> slots;
  return cached(slots[n - 2], [n] { return coset_volume(n, normalization_spec(n)); });
}

double eigen_normalization_constant(int n) {
  require_n(n);
  static std::array<CachedConstant, 2> slots;
  return cached(slots[n - 2], [n] { return eigen_volume(n, normalization_spec(n)); });
}

double normalized_coset_density(const CosetAngles& coset) {
  return haar_coset_density(coset) / coset_normalization_constant(coset.n());
}

}  // namespace bures
