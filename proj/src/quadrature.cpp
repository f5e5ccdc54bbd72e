#include "bures/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bures/parallel.hpp"

namespace bures {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;
constexpr std::size_t chunk_size = 2048;
constexpr int max_dimension = 8;

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (spec.points_per_axis < 2) throw std::invalid_argument("points_per_axis must be >= 2");
  if (spec.rule == QuadratureRule::composite_simpson &&
      (spec.points_per_axis < 3 || spec.points_per_axis % 2 == 0)) {
    throw std::invalid_argument("composite Simpson needs an odd points_per_axis >= 3");
  }
}

QuadratureSpec reference_spec(const QuadratureSpec& spec) {
  QuadratureSpec ref = spec;
  if (spec.rule == QuadratureRule::gauss_legendre) {
    ref.points_per_axis = std::max(2, spec.points_per_axis / 2);
  } else {
    const int intervals = spec.points_per_axis - 1;
    ref.points_per_axis = std::max(2, (intervals / 2) & ~1) + 1;
  }
  return ref;
}

QuadratureRule parse_rule(std::string_view name) {
  if (name == "gauss-legendre" || name == "gauss_legendre") return QuadratureRule::gauss_legendre;
  if (name == "simpson" || name == "composite-simpson" || name == "composite_simpson") {
    return QuadratureRule::composite_simpson;
  }
  throw std::invalid_argument("unknown quadrature rule '" + std::string(name) + "'");
}

std::string_view rule_name(QuadratureRule rule) {
  return rule == QuadratureRule::gauss_legendre ? "gauss-legendre" : "composite-simpson";
}

Rule1D gauss_legendre(int points) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: points must be >= 1");
  Rule1D rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= points; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = points * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  if (points % 2 == 1) rule.nodes[points / 2] = 0.0;
  return rule;
}

Rule1D composite_simpson(int points) {
  if (points < 3 || points % 2 == 0) {
    throw std::invalid_argument("composite_simpson: points must be odd and >= 3");
  }
  Rule1D rule;
  const int intervals = points - 1;
  const double h = 2.0 / intervals;
  for (int i = 0; i < points; ++i) {
    rule.nodes.push_back(i == intervals ? 1.0 : -1.0 + i * h);
    const double factor = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    rule.weights.push_back(factor * h / 3.0);
  }
  return rule;
}

Rule1D make_rule(const QuadratureSpec& spec, double lower, double upper) {
  validate(spec);
  Rule1D rule = spec.rule == QuadratureRule::gauss_legendre ? gauss_legendre(spec.points_per_axis)
                                                            : composite_simpson(spec.points_per_axis);
  const double half = 0.5 * (upper - lower);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    // Endpoints map exactly onto the box faces.
    if (rule.nodes[i] == -1.0) {
      rule.nodes[i] = lower;
    } else if (rule.nodes[i] == 1.0) {
      rule.nodes[i] = upper;
    } else {
      rule.nodes[i] = lower + half * (rule.nodes[i] + 1.0);
    }
    rule.weights[i] *= half;
  }
  return rule;
}

std::uint64_t tensor_node_count(int points_per_axis, int dimension) {
  std::uint64_t count = 1;
  for (int d = 0; d < dimension; ++d) {
    if (count > std::numeric_limits<std::uint64_t>::max() / 2 / points_per_axis) {
      throw std::overflow_error("tensor grid too large");
    }
    count *= static_cast<std::uint64_t>(points_per_axis);
  }
  return count;
}

double tensor_integrate(std::span<const double> lower, std::span<const double> upper,
                        const QuadratureSpec& spec, const Integrand& f, int workers) {
  validate(spec);
  if (lower.size() != upper.size() || lower.empty() || lower.size() > max_dimension) {
    throw std::invalid_argument("tensor_integrate: bad box dimension");
  }
  const int dim = static_cast<int>(lower.size());
  std::vector<Rule1D> rules;
  for (int d = 0; d < dim; ++d) rules.push_back(make_rule(spec, lower[d], upper[d]));

  const int p = spec.points_per_axis;
  const std::uint64_t count = tensor_node_count(p, dim);
  return ordered_sum(count, chunk_size, workers, [&](std::size_t begin, std::size_t end) {
    std::array<double, max_dimension> x{};
    double sum = 0.0;
    for (std::size_t index = begin; index < end; ++index) {
      // Last axis varies fastest.
      std::size_t rest = index;
      double weight = 1.0;
      for (int d = dim - 1; d >= 0; --d) {
        const auto i = rest % static_cast<std::size_t>(p);
        rest /= static_cast<std::size_t>(p);
        x[d] = rules[d].nodes[i];
        weight *= rules[d].weights[i];
      }
      const double value = f(std::span<const double>(x.data(), dim));
      if (value != 0.0) sum += weight * value;
    }
    return sum;
  });
}

}  // namespace bures
