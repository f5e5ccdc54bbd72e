#pragma once

// Rejection sampling of Bures-distributed density matrices (and of the truncated Haar
// measure on the coset alone), with a uniform proposal on the angle box.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "bures/euler.hpp"

namespace bures {

enum class SampleTarget {
  joint,  // normalized Bures density on all n^2 - 1 coordinates
  coset,  // normalized truncated Haar density on the coset angles
};

struct SamplerSpec {
  std::uint64_t seed = 0;
  // Rejection bound M: a proposal x is accepted when u * M < density(x).
  double envelope_constant = 0.0;
  // Proposals per work unit. Part of the stream definition: changing it does not change
  // the accepted sequence, only how work is split.
  std::size_t batch_size = 4096;
};

struct SamplerReport {
  std::size_t accepted = 0;
  // Proposals consumed up to and including the last accepted one.
  std::uint64_t proposals = 0;
  double acceptance_rate() const noexcept {
    return proposals == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(proposals);
  }
};

// Normalized target density at a flat coordinate point of the target's box.
double target_density(int n, SampleTarget target, std::span<const double> coordinates);

// 1.5 x the maximum of the normalized target density over a uniform grid with
// grid_points per axis (endpoints included). For n = 3 the grid maximum over the joint
// box is the product of the eigen-grid and coset-grid maxima. grid_points >= 8.
double estimate_envelope(int n, int grid_points, SampleTarget target = SampleTarget::joint,
                         int workers = 1);

// Calls sink(coordinates) for each accepted point, in stream order. Throws
// EnvelopeViolation if a proposal before the last accepted one exceeds the envelope.
SamplerReport sample_stream(int n, SampleTarget target, std::size_t count, const SamplerSpec& spec,
                            int workers, const std::function<void(std::span<const double>)>& sink);

// count i.i.d. draws from the normalized Bures density.
std::vector<DensityMatrixParams> sample(int n, std::size_t count, const SamplerSpec& spec,
                                        int workers = 1, SamplerReport* report = nullptr);

// count i.i.d. draws from the normalized truncated Haar density on the coset.
std::vector<CosetAngles> sample_coset(int n, std::size_t count, const SamplerSpec& spec,
                                      int workers = 1, SamplerReport* report = nullptr);

}  // namespace bures
