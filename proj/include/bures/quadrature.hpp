#pragma once

// Tensor-product quadrature over rectangular boxes, streamed: nodes are generated from
// a flat index on the fly and never materialized as a full grid.

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace bures {

enum class QuadratureRule { gauss_legendre, composite_simpson };

struct QuadratureSpec {
  int points_per_axis = 32;  // >= 2; composite Simpson needs an odd count >= 3
  QuadratureRule rule = QuadratureRule::gauss_legendre;
};

// Throws std::invalid_argument on an unusable spec.
void validate(const QuadratureSpec& spec);

// Resolution used for the two-resolution error estimate: roughly half the points.
QuadratureSpec reference_spec(const QuadratureSpec& spec);

QuadratureRule parse_rule(std::string_view name);
std::string_view rule_name(QuadratureRule rule);

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and weights on [-1, 1] (Newton iteration on the Legendre recurrence).
Rule1D gauss_legendre(int points);
// Nodes and weights on [-1, 1]; points must be odd and >= 3.
Rule1D composite_simpson(int points);
// Rule for spec, mapped onto [lower, upper].
Rule1D make_rule(const QuadratureSpec& spec, double lower, double upper);

using Integrand = std::function<double(std::span<const double>)>;

// Sum over the tensor grid of (product of weights) * f(node). The box dimension is
// lower.size(). Bit-identical for every worker count.
double tensor_integrate(std::span<const double> lower, std::span<const double> upper,
                        const QuadratureSpec& spec, const Integrand& f, int workers = 1);

// Number of nodes in the tensor grid; throws std::overflow_error past 2^63.
std::uint64_t tensor_node_count(int points_per_axis, int dimension);

}  // namespace bures
