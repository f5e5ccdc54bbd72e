#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "bures/errors.hpp"
#include "bures/euler.hpp"
#include "bures/generators.hpp"
#include "support.hpp"

using namespace bures;
using bures::test::interior_coordinates;
using bures::test::max_abs_diff;
using bures::test::random_coordinates;

namespace {

DensityMatrixParams params(int n, std::vector<double> x) {
  return DensityMatrixParams::from_coordinates(n, x);
}

// Product of exponentials by Pade exponentiation of each factor.
ComplexSquareMatrix oracle_unitary(int n, std::span<const double> angles) {
  const auto layout = euler_factor_layout(n);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto& g = generator_set(n)[layout[i].generator];
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = g(r, c);
    u = u * (complex(0, layout[i].angle_scale * angles[i]) * m).exp();
  }
  ComplexSquareMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = u(r, c);
  return out;
}

}  // namespace

TEST_CASE("diag eigenvalues examples") {
  const double t0[] = {0.0};
  CHECK(diag_eigenvalues(EigenvalueAngles(2, t0))[0] == 1.0);
  CHECK(diag_eigenvalues(EigenvalueAngles(2, t0))[1] == 0.0);

  const double t6[] = {pi / 6};
  const auto l6 = diag_eigenvalues(EigenvalueAngles(2, t6));
  CHECK(l6[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(l6[1] == doctest::Approx(0.25).epsilon(1e-15));

  const double t4[] = {pi / 4};
  const auto l4 = diag_eigenvalues(EigenvalueAngles(2, t4));
  CHECK(std::abs(l4[0] - 0.5) < 1e-15);
  CHECK(std::abs(l4[1] - 0.5) < 1e-15);

  const double mixed[] = {pi / 4, theta2_max};
  const auto l3 = diag_eigenvalues(EigenvalueAngles(3, mixed));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(l3[i] - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("eigenvalue angles outside their range name the coordinate") {
  const double bad2[] = {1.0};
  CHECK_THROWS_AS(EigenvalueAngles(2, bad2), RangeError);
  try {
    (void)EigenvalueAngles(2, bad2);
  } catch (const RangeError& e) {
    CHECK(e.coordinate() == "theta");
  }
  const double bad3[] = {0.1, 1.0};
  try {
    (void)EigenvalueAngles(3, bad3);
    FAIL("expected RangeError");
  } catch (const RangeError& e) {
    CHECK(e.coordinate() == "theta2");
    CHECK(std::string(e.what()).find("theta2") != std::string::npos);
  }
  const double neg[] = {-1e-3, 0.1};
  CHECK_THROWS_AS(CosetAngles(2, neg), RangeError);
  const double coset_bad[] = {0.1, 0.1, 0.1, 0.1, 0.1, 2.0};
  try {
    (void)CosetAngles(3, coset_bad);
    FAIL("expected RangeError");
  } catch (const RangeError& e) {
    CHECK(e.coordinate() == "b");
  }
}

TEST_CASE("range endpoints are accepted") {
  for (int n : {2, 3}) {
    const auto hi = coordinate_upper_bounds(n);
    CHECK_NOTHROW(params(n, {hi.begin(), hi.end()}));
    CHECK_NOTHROW(params(n, std::vector<double>(hi.size(), 0.0)));
  }
  CHECK_THROWS_AS(params(2, {0.1, 0.2}), DimensionError);
}

TEST_CASE("euler unitary examples") {
  const double zero3[] = {0.0, 0.0, 0.0};
  CHECK(euler_unitary(2, zero3) == ComplexSquareMatrix::identity(2));
  const double zero8[8] = {};
  CHECK(euler_unitary(3, zero8) == ComplexSquareMatrix::identity(3));

  const double beta[] = {0.0, pi / 2, 0.0};
  CHECK(max_abs_diff(euler_unitary(2, beta), ComplexSquareMatrix(2, {0.0, 1.0, -1.0, 0.0})) < 1e-15);

  const double two[] = {0.1, 0.2};
  CHECK_THROWS_AS(euler_unitary(2, two), DimensionError);
}

TEST_CASE("n = 2 euler unitary matches the closed form") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = u(rng), b = u(rng), g = u(rng);
    const ComplexSquareMatrix expected(
        2, {std::polar(std::cos(b), a + g), std::polar(std::sin(b), a - g),
            -std::polar(std::sin(b), g - a), std::polar(std::cos(b), -a - g)});
    const double angles[] = {a, b, g};
    CHECK(max_abs_diff(euler_unitary(2, angles), expected) < 1e-14);
  }
}

TEST_CASE("n = 3 euler unitary matches a product of Pade exponentials") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 8> angles{};
    for (double& a : angles) a = u(rng);
    const auto v = euler_unitary(3, angles);
    CHECK(max_abs_diff(v, oracle_unitary(3, angles)) < 1e-12);
    CHECK(std::abs(determinant(v) - 1.0) < 1e-12);
  }
}

TEST_CASE("density examples") {
  CHECK(density_from_params(params(2, {0.0, 0.0, 0.0})) ==
        ComplexSquareMatrix(2, {1.0, 0.0, 0.0, 0.0}));

  // e^{i s2 pi/4} sends (1, 0) to (1, -1)/sqrt(2).
  const auto rotated = density_from_params(params(2, {0.0, 0.0, pi / 4}));
  CHECK(max_abs_diff(rotated, ComplexSquareMatrix(2, {0.5, -0.5, -0.5, 0.5})) < 1e-15);

  const auto mixed = density_from_params(params(2, {pi / 4, 1.0, 0.4}));
  CHECK(max_abs_diff(mixed, 0.5 * ComplexSquareMatrix::identity(2)) < 1e-15);

  // Independent reference: scipy expm of the Euler product.
  const auto rho3 = density_from_params(params(3, {0.3, 0.5, 1.0, 0.4, 2.0, 0.7, 0.1, 1.2}));
  CHECK(std::abs(rho3(0, 0) - 0.33874664579277525) < 1e-12);
  CHECK(std::abs(rho3(0, 1) - complex(-0.02175866, -0.05508661)) < 1e-8);
  CHECK(std::abs(rho3(1, 2) - complex(-0.11313022, -0.11486538)) < 1e-8);
  CHECK(std::abs(rho3(2, 2) - 0.46919393) < 1e-8);
}

TEST_CASE("random parameters give valid density matrices") {
  std::mt19937_64 rng(23);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto p = params(n, random_coordinates(n, rng));
      const auto rho = density_from_params(p);
      CHECK(dagger(rho) == rho);
      CHECK(std::abs(trace(rho) - 1.0) < 1e-12);
      const auto e = eig_hermitian(rho);
      auto expected = diag_eigenvalues(p.eigen);
      std::sort(expected.values.begin(), expected.values.begin() + n, std::greater<>());
      for (int k = 0; k < n; ++k) {
        CHECK(e.eigenvalues[k] >= -1e-12);
        CHECK(std::abs(e.eigenvalues[k] - expected[k]) < 1e-12);
      }
      CHECK(std::abs(determinant(coset_unitary(p.coset)) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("dropped Cartan angles do not change rho") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = params(n, random_coordinates(n, rng));
      const auto rho = density_from_params(p);
      std::vector<double> full(p.coset.angles().begin(), p.coset.angles().end());
      full.push_back(u(rng));
      if (n == 3) full.push_back(u(rng));
      const auto v = euler_unitary(n, full);
      const auto d = ComplexSquareMatrix::diagonal(diag_eigenvalues(p.eigen).span());
      CHECK(max_abs_diff(matmul(matmul(v, d), dagger(v)), rho) < 1e-12);
    }
  }
}

TEST_CASE("coordinate round trip through the flat vector") {
  const std::vector<double> x{0.3, 0.5, 1.0, 0.4, 2.0, 0.7, 0.1, 1.2};
  CHECK(params(3, x).coordinates() == x);
  CHECK(coordinate_names(3)[5] == "theta_big");
  CHECK(coordinate_count(3) == 8);
  CHECK(coordinate_count(2) == 3);
}

TEST_CASE("inverse examples") {
  const auto pure = params_from_density_2(ComplexSquareMatrix(2, {1.0, 0.0, 0.0, 0.0}));
  CHECK(pure.params.eigen[0] == 0.0);
  CHECK(pure.params.coset[1] == 0.0);
  CHECK_FALSE(pure.gauge_degenerate);

  const auto quarter = params_from_density_2(ComplexSquareMatrix(2, {0.75, 0.0, 0.0, 0.25}));
  CHECK(quarter.params.eigen[0] == doctest::Approx(pi / 6).epsilon(1e-14));
  CHECK(quarter.params.coset[0] == 0.0);
  CHECK(quarter.params.coset[1] == 0.0);
  CHECK_FALSE(quarter.gauge_degenerate);

  const auto mixed = params_from_density_2(0.5 * ComplexSquareMatrix::identity(2));
  CHECK(mixed.gauge_degenerate);
  CHECK(mixed.params.eigen[0] == doctest::Approx(pi / 4));

  const auto rotated = params_from_density_2(ComplexSquareMatrix(2, {0.5, -0.5, -0.5, 0.5}));
  CHECK(rotated.params.eigen[0] == doctest::Approx(0.0));
  CHECK(rotated.params.coset[1] == doctest::Approx(pi / 4));

  CHECK_THROWS_AS(params_from_density_2(ComplexSquareMatrix(2, {0.5, 1.0, 0.0, 0.5})), DomainError);
  CHECK_THROWS_AS(params_from_density_2(ComplexSquareMatrix(2, {2.0, 0.0, 0.0, -1.0})),
                  DomainError);
  CHECK_THROWS_AS(params_from_density_2((1.0 / 3) * ComplexSquareMatrix::identity(3)), DomainError);
}

TEST_CASE("inverse round trip on random n = 2 states") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rho = density_from_params(params(2, random_coordinates(2, rng)));
    const auto inv = params_from_density_2(rho);
    CHECK(max_abs_diff(density_from_params(inv.params), rho) < 1e-10);
  }
}

TEST_CASE("inverse recovers interior angles") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = interior_coordinates(2, rng);
    x[1] = std::min(x[1], 0.98 * pi);  // alpha folded into [0, pi)
    const auto inv = params_from_density_2(density_from_params(params(2, x)));
    CHECK(inv.params.eigen[0] == doctest::Approx(x[0]).epsilon(1e-8));
    CHECK(inv.params.coset[0] == doctest::Approx(x[1]).epsilon(1e-8));
    CHECK(inv.params.coset[1] == doctest::Approx(x[2]).epsilon(1e-8));
  }
}
