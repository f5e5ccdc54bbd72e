#include <doctest.h>

#include <Eigen/Dense>

#include "bures/errors.hpp"
#include "bures/generators.hpp"
#include "bures/measure.hpp"
#include "support.hpp"

using namespace bures;
using bures::test::interior_coordinates;
using bures::test::random_coordinates;

namespace {

DensityMatrixParams params(int n, std::vector<double> x) {
  return DensityMatrixParams::from_coordinates(n, x);
}

// Finite-difference Maurer-Cartan determinant: central differences of the full unitary.
double haar_fd(int n, std::vector<double> coset, double h = 1e-6) {
  const int m = static_cast<int>(coset.size());
  auto unitary = [&](const std::vector<double>& x) {
    std::vector<double> full(x);
    full.resize(n == 2 ? 3 : 8, 0.0);
    return euler_unitary(n, full);
  };
  const auto u_dagger = dagger(unitary(coset));
  const auto& set = generator_set(n);
  Eigen::MatrixXd c(m, m);
  for (int k = 0; k < m; ++k) {
    auto plus = coset, minus = coset;
    plus[k] += h;
    minus[k] -= h;
    const auto d = (1.0 / (2.0 * h)) * (unitary(plus) - unitary(minus));
    const auto form = complex(0, -1) * matmul(u_dagger, d);
    for (int a = 0; a < m; ++a) c(k, a) = 0.5 * trace(matmul(form, set[set.coset_indices[a]])).real();
  }
  return std::abs(c.determinant());
}

}  // namespace

TEST_CASE("hall density examples") {
  const double half[] = {0.5, 0.5};
  CHECK(hall_density(half).value == 0.0);
  const double q[] = {0.75, 0.25};
  CHECK(hall_density(q).value == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-14));
  const double three[] = {0.5, 1.0 / 3.0, 1.0 / 6.0};
  CHECK(hall_density(three).value == doctest::Approx(16.0 / 135.0).epsilon(1e-14));
  const double equal[] = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  CHECK(hall_density(equal).value == doctest::Approx(0.0));

  const double pure[] = {1.0, 0.0};
  const auto singular = hall_density(pure);
  CHECK(singular.boundary_singular);
  CHECK(std::isinf(singular.value));
}

TEST_CASE("hall density rejects points off the simplex") {
  const double negative[] = {1.1, -0.1};
  CHECK_THROWS_AS(hall_density(negative), DomainError);
  const double bad_sum[] = {0.5, 0.4};
  CHECK_THROWS_AS(hall_density(bad_sum), DomainError);
  const double four[] = {0.25, 0.25, 0.25, 0.25};
  CHECK_THROWS_AS(hall_density(std::span<const double>(four, 4)), DimensionError);
}

TEST_CASE("eigenvalue jacobian examples") {
  const double t4[] = {pi / 4};
  CHECK(eigenvalue_jacobian(EigenvalueAngles(2, t4)) == doctest::Approx(1.0));
  const double t0[] = {0.0};
  CHECK(eigenvalue_jacobian(EigenvalueAngles(2, t0)) == 0.0);
}

TEST_CASE("eigenvalue jacobian matches finite differences") {
  std::mt19937_64 rng(31);
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = interior_coordinates(3, rng);
    auto lam = [&](double t1, double t2) {
      const double a[] = {t1, t2};
      return diag_eigenvalues(EigenvalueAngles(3, a));
    };
    const auto p1 = lam(x[0] + h, x[1]), m1 = lam(x[0] - h, x[1]);
    const auto p2 = lam(x[0], x[1] + h), m2 = lam(x[0], x[1] - h);
    const double d11 = (p1[0] - m1[0]) / (2 * h), d21 = (p1[1] - m1[1]) / (2 * h);
    const double d12 = (p2[0] - m2[0]) / (2 * h), d22 = (p2[1] - m2[1]) / (2 * h);
    const double fd = std::abs(d11 * d22 - d12 * d21);
    const double angles[] = {x[0], x[1]};
    CHECK(std::abs(eigenvalue_jacobian(EigenvalueAngles(3, angles)) - fd) < 1e-8);

    const double t[] = {x[0]};
    const double fd2 = std::abs((std::cos(x[0] + h) * std::cos(x[0] + h) -
                                 std::cos(x[0] - h) * std::cos(x[0] - h)) / (2 * h));
    CHECK(std::abs(eigenvalue_jacobian(EigenvalueAngles(2, t)) - fd2) < 1e-8);
  }
}

TEST_CASE("eigenvalue density is hall times jacobian in the interior") {
  std::mt19937_64 rng(32);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = interior_coordinates(n, rng);
      const EigenvalueAngles e(n, std::span<const double>(x.data(), n - 1));
      const double product = hall_density(diag_eigenvalues(e).span()).value * eigenvalue_jacobian(e);
      CHECK(eigenvalue_density(e) == doctest::Approx(product).epsilon(1e-12));
    }
  }
}

TEST_CASE("eigenvalue density is finite on the pure-state boundary") {
  const double t0[] = {0.0};
  CHECK(eigenvalue_density(EigenvalueAngles(2, t0)) == doctest::Approx(8.0).epsilon(1e-15));
  const double corner[] = {0.0, theta2_max};
  CHECK(std::isfinite(eigenvalue_density(EigenvalueAngles(3, corner))));
}

TEST_CASE("n = 2 haar coset density") {
  const double quarter[] = {0.0, pi / 4};
  CHECK(haar_coset_density(CosetAngles(2, quarter)) == doctest::Approx(1.0).epsilon(1e-14));
  const double zero[] = {0.0, 0.0};
  CHECK(haar_coset_density(CosetAngles(2, zero)) == doctest::Approx(0.0));
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      const double a = pi * i / 40, b = pi / 2 * j / 40;
      const double x[] = {a, b};
      CHECK(std::abs(haar_coset_density(CosetAngles(2, x)) - std::abs(std::sin(2 * b))) < 1e-12);
    }
}

TEST_CASE("n = 3 haar coset density matches finite differences") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_coordinates(3, rng);
    const std::vector<double> coset(x.begin() + 2, x.end());
    const CosetAngles c(3, coset);
    CHECK(std::abs(haar_coset_density(c) - haar_fd(3, coset)) < 1e-7);
  }
}

TEST_CASE("n = 3 haar coset density closed form") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_coordinates(3, rng);
    const CosetAngles c(3, std::span<const double>(x.data() + 2, 6));
    const double beta = c[1], theta = c[3], b = c[5];
    const double st = std::sin(theta);
    const double expected =
        0.5 * std::abs(std::sin(2 * beta) * std::sin(2 * b) * std::sin(2 * theta)) * st * st;
    CHECK(std::abs(haar_coset_density(c) - expected) < 1e-12);
  }
}

TEST_CASE("haar density does not depend on the leading angle") {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(0.0, pi);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_coordinates(n, rng);
      std::vector<double> coset(x.begin() + (n - 1), x.end());
      const double base = haar_coset_density(CosetAngles(n, coset));
      coset[0] = u(rng);
      CHECK(std::abs(haar_coset_density(CosetAngles(n, coset)) - base) < 1e-12);
    }
  }
}

TEST_CASE("n = 2 joint density closed form") {
  CHECK(bures_joint_density(params(2, {pi / 4, 0.3, 0.7})).value == doctest::Approx(0.0));
  CHECK(bures_joint_density(params(2, {0.0, 0.0, pi / 4})).value == doctest::Approx(8.0));
  CHECK(bures_joint_density(params(2, {0.0, 0.0, pi / 4})).boundary_singular);
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_coordinates(2, rng);
    const double c = std::cos(2 * x[0]);
    const double expected = 8.0 * c * c * std::sin(2 * x[2]);
    const auto v = bures_joint_density(params(2, x));
    CHECK(v.value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(v.mode == NormalizationMode::raw);
    CHECK(v.n == 2);
  }
}

TEST_CASE("n = 3 joint density reference point") {
  // Independent reference: scipy expm with finite-difference Maurer-Cartan determinant.
  const auto v = bures_joint_density(params(3, {0.3, 0.5, 1.0, 0.4, 2.0, 0.7, 0.1, 1.2}));
  CHECK(v.value == doctest::Approx(0.43440810121227286).epsilon(1e-8));
  CHECK_FALSE(v.boundary_singular);
}

TEST_CASE("joint density is nonnegative and finite on the closed box") {
  std::mt19937_64 rng(37);
  for (int n : {2, 3}) {
    const auto hi = coordinate_upper_bounds(n);
    for (int trial = 0; trial < 300; ++trial) {
      auto x = random_coordinates(n, rng);
      // Push some coordinates onto faces.
      for (std::size_t d = 0; d < x.size(); ++d) {
        if (rng() % 4 == 0) x[d] = 0.0;
        if (rng() % 4 == 0) x[d] = hi[d];
      }
      const double v = bures_joint_density(params(n, x)).value;
      CHECK(v >= 0.0);
      CHECK(std::isfinite(v));
    }
  }
}

TEST_CASE("n = 2 normalization is pi squared") {
  CHECK(std::abs(normalization_constant(2) - pi * pi) < 1e-8);
  const double v32 = joint_volume(2, {32, QuadratureRule::gauss_legendre});
  const double v64 = joint_volume(2, {64, QuadratureRule::gauss_legendre});
  CHECK(std::abs(v32 - v64) < 1e-6);
  CHECK(coset_normalization_constant(2) == doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("n = 3 normalization") {
  // Reference: 2-D adaptive quadrature of the eigen factor times pi^3/4.
  const double reference = 7.959681468268046;
  CHECK(std::abs(normalization_constant(3) / reference - 1.0) < 1e-4);
  CHECK(coset_normalization_constant(3) == doctest::Approx(pi * pi * pi / 4).epsilon(1e-10));
  CHECK(eigen_normalization_constant(3) == doctest::Approx(1.0268477638045872).epsilon(1e-10));
}

TEST_CASE("normalized mode divides by the constant") {
  const auto p = params(3, {0.3, 0.5, 1.0, 0.4, 2.0, 0.7, 0.1, 1.2});
  const double raw = bures_joint_density(p).value;
  const auto norm = bures_joint_density(p, NormalizationMode::normalized);
  CHECK(norm.value == doctest::Approx(raw / normalization_constant(3)).epsilon(1e-15));
  CHECK(norm.mode == NormalizationMode::normalized);
  CHECK(parse_mode("raw") == NormalizationMode::raw);
  CHECK_THROWS_AS(parse_mode("bogus"), std::invalid_argument);
}

TEST_CASE("n = 3 factored volume equals the full tensor sum") {
  const QuadratureSpec spec{4, QuadratureRule::gauss_legendre};
  CHECK(joint_volume(3, spec) == doctest::Approx(joint_volume_full_tensor(3, spec)).epsilon(1e-12));
}

TEST_CASE("angle boxes") {
  CHECK(AngleBox::full(2).volume() == doctest::Approx(pi / 4 * pi * pi / 2));
  CHECK(AngleBox::eigen(3).dimension() == 2);
  CHECK(AngleBox::coset(3).dimension() == 6);
  CHECK(AngleBox::eigen(3).upper[1] == theta2_max);
}

TEST_CASE("real determinant") {
  CHECK(real_determinant({2.0, 0.0, 0.0, 3.0}, 2) == 6.0);
  CHECK(real_determinant({0.0, 1.0, 1.0, 0.0}, 2) == -1.0);
  CHECK(real_determinant({1.0, 2.0, 2.0, 4.0}, 2) == 0.0);
  CHECK_THROWS_AS(real_determinant({1.0, 2.0, 3.0}, 2), DimensionError);
}
