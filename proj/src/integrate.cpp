#include "bures/integrate.hpp"

#include <array>
#include <cmath>
#include <map>
#include <tuple>
#include <mutex>
#include <stdexcept>
#include <string>

#include "bures/errors.hpp"
#include "bures/measure.hpp"

namespace bures {

namespace {

// Coset volumes are reused across functionals and resolutions.
double cached_coset_volume(int n, const QuadratureSpec& spec, int workers) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, double> cache;
  const auto key = std::make_tuple(n, spec.points_per_axis, static_cast<int>(spec.rule));
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double value = coset_volume(n, spec, workers);
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

double weighted_functional(int n, const DensityFunction& f, std::span<const double> x) {
  const auto p = DensityMatrixParams::from_coordinates(n, x);
  const double density = bures_joint_density(p, NormalizationMode::normalized).value;
  // Degenerate and boundary nodes carry zero weight.
  if (!(density > 0.0)) return 0.0;
  return f(density_from_params(p)) * density;
}

}  // namespace

double integrate_at(int n, const FunctionalId& f, const QuadratureSpec& spec,
                    const IntegrateOptions& options) {
  return integrate_at(
      n, DensityFunction([f](const ComplexSquareMatrix& rho) { return f.evaluate(rho); }), spec,
      options);
}

double integrate_at(int n, const DensityFunction& f, const QuadratureSpec& spec,
                    const IntegrateOptions& options) {
  if (n != 2 && n != 3) throw DimensionError("integrate: n must be 2 or 3");
  validate(spec);

  if (n == 2 || options.full_tensor) {
    const AngleBox box = AngleBox::full(n);
    return tensor_integrate(
        box.lower, box.upper, spec,
        [n, &f](std::span<const double> x) { return weighted_functional(n, f, x); },
        options.workers);
  }

  const AngleBox eigen_box = AngleBox::eigen(n);
  const std::array<double, 6> coset_origin{};
  const CosetAngles origin(n, coset_origin);
  const double eigen_part = tensor_integrate(
      eigen_box.lower, eigen_box.upper, spec,
      [n, &f, &origin](std::span<const double> x) {
        const EigenvalueAngles eigen(n, x);
        const double weight = eigenvalue_density(eigen);
        if (!(weight > 0.0)) return 0.0;
        return f(density_from_params({eigen, origin})) * weight;
      },
      options.workers);
  const double coset_part = cached_coset_volume(n, spec, options.workers);
  return eigen_part * coset_part / normalization_constant(n);
}

IntegralResult integrate(int n, const FunctionalId& f, const QuadratureSpec& spec,
                         const IntegrateOptions& options) {
  const QuadratureSpec reference = reference_spec(spec);
  IntegralResult result;
  result.method = "quadrature";
  result.value = integrate_at(n, f, spec, options);
  result.error_estimate = std::abs(result.value - integrate_at(n, f, reference, options));
  result.points_per_axis = spec.points_per_axis;
  result.reference_points_per_axis = reference.points_per_axis;
  return result;
}

IntegralResult integrate_mc(int n, const FunctionalId& f, std::size_t samples,
                            const SamplerSpec& spec, int workers) {
  if (samples < 2) throw std::invalid_argument("integrate_mc: need at least 2 samples");
  // Welford running mean/variance in stream order.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t seen = 0;
  const SamplerReport report = sample_stream(
      n, SampleTarget::joint, samples, spec, workers, [&](std::span<const double> x) {
        const double value = f.evaluate(density_from_params(DensityMatrixParams::from_coordinates(n, x)));
        ++seen;
        const double delta = value - mean;
        mean += delta / static_cast<double>(seen);
        m2 += delta * (value - mean);
      });

  IntegralResult result;
  result.method = "mc";
  result.value = mean;
  result.error_estimate = std::sqrt(m2 / static_cast<double>(seen - 1) / static_cast<double>(seen));
  result.samples = seen;
  result.acceptance_rate = report.acceptance_rate();
  return result;
}

}  // namespace bures
