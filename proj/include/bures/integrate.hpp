#pragma once

// Expectations of spectral functionals under the normalized Bures measure.

#include <cstdint>
#include <functional>
#include <string>

#include "bures/functionals.hpp"
#include "bures/quadrature.hpp"
#include "bures/sample.hpp"

namespace bures {

struct IntegralResult {
  double value = 0.0;
  // Quadrature: |I(spec) - I(reference_spec(spec))|. Monte Carlo: standard error of the mean.
  double error_estimate = 0.0;
  std::string method;
  int points_per_axis = 0;
  int reference_points_per_axis = 0;
  std::uint64_t samples = 0;
  double acceptance_rate = 0.0;
};

struct IntegrateOptions {
  int workers = 1;
  // n = 3 only: sum the full 8-axis tensor grid instead of the eigen x coset factorization.
  bool full_tensor = false;
};

// Integral of f(rho'(x)) * normalized Bures density over the angle box at one resolution.
//
// n = 2 always sums the full 3-axis grid. For n = 3 the measure is a product of an eigen
// factor and a coset factor, and every functional here depends only on the spectrum, so
// by default the 8-axis tensor sum is evaluated as (2-axis sum) x (6-axis sum) over the
// same nodes; full_tensor forces the unfactored sum.
double integrate_at(int n, const FunctionalId& f, const QuadratureSpec& spec,
                    const IntegrateOptions& options = {});

// As above for an arbitrary function of rho'. For n = 3 without full_tensor the function
// must be unitarily invariant (depend on the spectrum only).
using DensityFunction = std::function<double(const ComplexSquareMatrix&)>;
double integrate_at(int n, const DensityFunction& f, const QuadratureSpec& spec,
                    const IntegrateOptions& options = {});

// integrate_at at spec, with the error estimated against reference_spec(spec).
IntegralResult integrate(int n, const FunctionalId& f, const QuadratureSpec& spec,
                         const IntegrateOptions& options = {});

// Monte Carlo mean over `samples` draws of the rejection sampler.
IntegralResult integrate_mc(int n, const FunctionalId& f, std::size_t samples,
                            const SamplerSpec& spec, int workers = 1);

}  // namespace bures
