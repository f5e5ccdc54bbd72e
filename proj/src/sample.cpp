#include "bures/sample.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bures/errors.hpp"
#include "bures/measure.hpp"
#include "bures/parallel.hpp"
#include "bures/rng.hpp"

namespace bures {

namespace {

AngleBox target_box(int n, SampleTarget target) {
  return target == SampleTarget::joint ? AngleBox::full(n) : AngleBox::coset(n);
}

// Maximum of f over a uniform grid (endpoints included) on the box.
template <class F>
double grid_max(const AngleBox& box, int grid_points, int workers, F&& f) {
  const int dim = box.dimension();
  std::uint64_t count = 1;
  for (int d = 0; d < dim; ++d) count *= static_cast<std::uint64_t>(grid_points);
  constexpr std::size_t chunk = 4096;
  const std::size_t chunks = (count + chunk - 1) / chunk;
  std::vector<double> partial(chunks, 0.0);
  for_each_chunk(chunks, workers, [&](std::size_t c) {
    std::array<double, 8> x{};
    double best = 0.0;
    const std::uint64_t end = std::min<std::uint64_t>(count, (c + 1) * chunk);
    for (std::uint64_t index = c * chunk; index < end; ++index) {
      std::uint64_t rest = index;
      for (int d = dim - 1; d >= 0; --d) {
        const auto i = rest % static_cast<std::uint64_t>(grid_points);
        rest /= static_cast<std::uint64_t>(grid_points);
        x[d] = i + 1 == static_cast<std::uint64_t>(grid_points)
                   ? box.upper[d]
                   : box.lower[d] + (box.upper[d] - box.lower[d]) * static_cast<double>(i) /
                                        (grid_points - 1);
      }
      best = std::max(best, f(std::span<const double>(x.data(), dim)));
    }
    partial[c] = best;
  });
  return partial.empty() ? 0.0 : *std::max_element(partial.begin(), partial.end());
}

struct Violation {
  std::uint64_t index;
  double density;
  std::vector<double> point;
};

struct BlockResult {
  std::vector<std::uint64_t> indices;
  std::vector<double> points;  // accepted coordinates, flattened
  std::optional<Violation> violation;
};

[[noreturn]] void report_violation(const Violation& v, double envelope) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "rejection envelope violated at proposal " << v.index << ": density " << v.density
      << " > envelope " << envelope << " at (";
  for (std::size_t i = 0; i < v.point.size(); ++i) msg << (i ? ", " : "") << v.point[i];
  msg << ")";
  throw EnvelopeViolation(msg.str());
}

}  // namespace

double target_density(int n, SampleTarget target, std::span<const double> coordinates) {
  if (target == SampleTarget::joint) {
    return bures_joint_density(DensityMatrixParams::from_coordinates(n, coordinates),
                               NormalizationMode::normalized)
        .value;
  }
  return normalized_coset_density(CosetAngles(n, coordinates));
}

double estimate_envelope(int n, int grid_points, SampleTarget target, int workers) {
  if (grid_points < 8) throw std::invalid_argument("estimate_envelope: grid_points must be >= 8");
  const double coset_max = grid_max(AngleBox::coset(n), grid_points, workers,
                                    [n](std::span<const double> x) {
                                      return haar_coset_density(CosetAngles(n, x));
                                    });
  constexpr double safety = 1.5;
  if (target == SampleTarget::coset) return safety * coset_max / coset_normalization_constant(n);

  // The joint density is eigen(x_eigen) * coset(x_coset), both nonnegative, so its maximum
  // over the product grid factorizes.
  const double eigen_max = grid_max(AngleBox::eigen(n), grid_points, workers,
                                    [n](std::span<const double> x) {
                                      return eigenvalue_density(EigenvalueAngles(n, x));
                                    });
  return safety * eigen_max * coset_max / normalization_constant(n);
}

SamplerReport sample_stream(int n, SampleTarget target, std::size_t count, const SamplerSpec& spec,
                            int workers,
                            const std::function<void(std::span<const double>)>& sink) {
  if (!(spec.envelope_constant > 0.0) || !std::isfinite(spec.envelope_constant)) {
    throw std::invalid_argument("sampler envelope_constant must be positive and finite");
  }
  if (spec.batch_size == 0) throw std::invalid_argument("sampler batch_size must be positive");

  const AngleBox box = target_box(n, target);
  const int dim = box.dimension();
  const double envelope = spec.envelope_constant;
  const std::size_t round_blocks = static_cast<std::size_t>(std::max(1, workers));

  SamplerReport report;
  std::uint64_t next_block = 0;
  while (report.accepted < count) {
    std::vector<BlockResult> blocks(round_blocks);
    for_each_chunk(round_blocks, workers, [&](std::size_t b) {
      BlockResult& out = blocks[b];
      const std::uint64_t begin = (next_block + b) * spec.batch_size;
      std::array<double, 8> x{};
      for (std::uint64_t index = begin; index < begin + spec.batch_size; ++index) {
        CounterRng rng(spec.seed, index);
        for (int d = 0; d < dim; ++d) {
          x[d] = box.lower[d] + (box.upper[d] - box.lower[d]) * rng.uniform();
        }
        const std::span<const double> point(x.data(), dim);
        const double density = target_density(n, target, point);
        if (density > envelope) {
          out.violation = Violation{index, density, {point.begin(), point.end()}};
          return;
        }
        if (rng.uniform() * envelope < density) {
          out.indices.push_back(index);
          out.points.insert(out.points.end(), point.begin(), point.end());
        }
      }
    });
    next_block += round_blocks;

    for (const BlockResult& block : blocks) {
      for (std::size_t i = 0; i < block.indices.size(); ++i) {
        sink(std::span<const double>(block.points.data() + i * dim, dim));
        report.proposals = block.indices[i] + 1;
        if (++report.accepted == count) return report;
      }
      if (block.violation) report_violation(*block.violation, envelope);
    }
  }
  return report;
}

std::vector<DensityMatrixParams> sample(int n, std::size_t count, const SamplerSpec& spec,
                                        int workers, SamplerReport* report) {
  std::vector<DensityMatrixParams> out;
  out.reserve(count);
  const SamplerReport r =
      sample_stream(n, SampleTarget::joint, count, spec, workers, [&](std::span<const double> x) {
        out.push_back(DensityMatrixParams::from_coordinates(n, x));
      });
  if (report) *report = r;
  return out;
}

std::vector<CosetAngles> sample_coset(int n, std::size_t count, const SamplerSpec& spec,
                                      int workers, SamplerReport* report) {
  std::vector<CosetAngles> out;
  out.reserve(count);
  const SamplerReport r =
      sample_stream(n, SampleTarget::coset, count, spec, workers,
                    [&](std::span<const double> x) { out.emplace_back(n, x); });
  if (report) *report = r;
  return out;
}

}  // namespace bures
