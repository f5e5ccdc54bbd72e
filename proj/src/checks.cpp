#include "bures/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bures/euler.hpp"
#include "bures/integrate.hpp"
#include "bures/measure.hpp"
#include "bures/rng.hpp"
#include "bures/sample.hpp"
#include "bures/stats.hpp"

namespace bures {

namespace {

constexpr std::uint64_t check_seed = 20240611;

class Recorder {
 public:
  explicit Recorder(CheckReport& report) : report_(report) {}
  void add(std::string name, double deviation, double tolerance) {
    report_.results.push_back(
        {std::move(name), deviation, tolerance, std::isfinite(deviation) && deviation <= tolerance});
  }

 private:
  CheckReport& report_;
};

std::vector<double> random_point(CounterRng& rng, std::span<const double> upper) {
  std::vector<double> x(upper.size());
  for (std::size_t i = 0; i < upper.size(); ++i) x[i] = upper[i] * rng.uniform();
  return x;
}

DensityMatrixParams random_params(int n, CounterRng& rng) {
  return DensityMatrixParams::from_coordinates(n, random_point(rng, coordinate_upper_bounds(n)));
}

ComplexSquareMatrix random_hermitian(int n, CounterRng& rng, double scale) {
  ComplexSquareMatrix a(n);
  for (int r = 0; r < n; ++r) {
    a(r, r) = scale * (2.0 * rng.uniform() - 1.0);
    for (int c = r + 1; c < n; ++c) {
      a(r, c) = complex(scale * (2.0 * rng.uniform() - 1.0), scale * (2.0 * rng.uniform() - 1.0));
      a(c, r) = std::conj(a(r, c));
    }
  }
  return a;
}

double identity_deviation(const ComplexSquareMatrix& m) {
  return frobenius_norm(m - ComplexSquareMatrix::identity(m.dim()));
}

void check_generators(Recorder& rec, const CheckContext& ctx) {
  double herm = 0.0, traceless = 0.0, ortho = 0.0, cartan = 0.0, diagonal = 0.0;
  bool indices_ok = true;
  for (const GeneratorSet* set : {&ctx.pauli_set, &ctx.gell_mann_set}) {
    for (int a = 1; a <= set->size(); ++a) {
      herm = std::max(herm, frobenius_norm((*set)[a] - dagger((*set)[a])));
      traceless = std::max(traceless, std::abs(trace((*set)[a])));
      for (int b = 1; b <= set->size(); ++b) {
        const double expected = a == b ? 2.0 : 0.0;
        ortho = std::max(ortho, std::abs(trace(matmul((*set)[a], (*set)[b])) - expected));
      }
    }
    for (int a : set->cartan_indices) {
      for (int r = 0; r < set->n; ++r)
        for (int c = 0; c < set->n; ++c)
          if (r != c) diagonal = std::max(diagonal, std::abs((*set)[a](r, c)));
      for (int b : set->cartan_indices) {
        cartan = std::max(cartan, frobenius_norm(commutator((*set)[a], (*set)[b])));
      }
    }
  }
  indices_ok = ctx.pauli_set.coset_indices == std::vector<int>{1, 2} &&
               ctx.gell_mann_set.coset_indices == std::vector<int>{1, 2, 4, 5, 6, 7};
  rec.add("generator_hermiticity", herm, 0.0);
  rec.add("generator_tracelessness", traceless, 1e-15);
  rec.add("generator_orthogonality", ortho, 1e-14);
  rec.add("cartan_diagonal", diagonal, 0.0);
  rec.add("cartan_commutation", cartan, 1e-14);
  rec.add("coset_indices", indices_ok ? 0.0 : 1.0, 0.0);
}

void check_linalg(Recorder& rec, std::size_t trials) {
  double unitarity = 0.0, group_law = 0.0, det = 0.0, reconstruction = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    CounterRng rng(check_seed, i);
    const int n = i % 2 == 0 ? 2 : 3;
    ComplexSquareMatrix g = random_hermitian(n, rng, 2.0);
    // Traceless part, for the determinant check.
    const complex shift = trace(g) / static_cast<double>(n);
    for (int k = 0; k < n; ++k) g(k, k) -= shift;
    const double s = pi * (2.0 * rng.uniform() - 1.0);
    const double t = pi * (2.0 * rng.uniform() - 1.0);
    const HermitianExponential exp_g(g);
    const ComplexSquareMatrix u = exp_g.at(t);
    unitarity = std::max(unitarity, identity_deviation(matmul(u, dagger(u))));
    group_law = std::max(group_law, frobenius_norm(exp_g.at(s + t) - matmul(exp_g.at(s), u)));
    det = std::max(det, std::abs(determinant(u) - 1.0));

    // Entry bounds keep ||a||_F <= 10.
    const ComplexSquareMatrix a = random_hermitian(n, rng, 10.0 / std::sqrt(n == 2 ? 6.0 : 15.0));
    const auto eig = eig_hermitian(a);
    const ComplexSquareMatrix v = eig.eigenvectors;
    reconstruction = std::max(
        reconstruction,
        frobenius_norm(matmul(matmul(v, ComplexSquareMatrix::diagonal(eig.values())), dagger(v)) - a));
  }
  rec.add("expm_unitarity", unitarity, 1e-13);
  rec.add("expm_group_law", group_law, 1e-13);
  rec.add("expm_determinant", det, 1e-13);
  rec.add("eig_reconstruction", reconstruction, 1e-12);
}

void check_densities(Recorder& rec, std::size_t points) {
  double herm = 0.0, tr = 0.0, psd = 0.0, spectrum = 0.0, special = 0.0;
  for (int n : {2, 3}) {
    for (std::size_t i = 0; i < points; ++i) {
      CounterRng rng(check_seed + n, i);
      const auto p = random_params(n, rng);
      const ComplexSquareMatrix rho = density_from_params(p);
      herm = std::max(herm, frobenius_norm(rho - dagger(rho)));
      tr = std::max(tr, std::abs(trace(rho) - 1.0));
      const auto eig = eig_hermitian(rho);
      psd = std::max(psd, -eig.eigenvalues[n - 1]);
      RealList lambda = diag_eigenvalues(p.eigen);
      std::sort(lambda.values.begin(), lambda.values.begin() + n, std::greater<>());
      for (int k = 0; k < n; ++k) spectrum = std::max(spectrum, std::abs(eig.eigenvalues[k] - lambda[k]));

      std::vector<double> full = random_point(rng, std::vector<double>(n == 2 ? 3 : 8, 2.0 * pi));
      special = std::max(special, std::abs(determinant(euler_unitary(n, full)) - 1.0));
    }
  }
  rec.add("density_hermiticity", herm, 1e-13);
  rec.add("density_unit_trace", tr, 1e-13);
  rec.add("density_psd", psd, 1e-12);
  rec.add("density_spectrum", spectrum, 1e-12);
  rec.add("euler_special_unitarity", special, 1e-13);
}

void check_dropped_angles(Recorder& rec, std::size_t base_points) {
  constexpr int grid = 20;
  double deviation = 0.0;
  for (int n : {2, 3}) {
    for (std::size_t i = 0; i < base_points; ++i) {
      CounterRng rng(check_seed + 10 + n, i);
      const auto p = random_params(n, rng);
      const ComplexSquareMatrix reference = density_from_params(p);
      const ComplexSquareMatrix diag = ComplexSquareMatrix::diagonal(diag_eigenvalues(p.eigen).span());
      std::vector<double> full(p.coset.angles().begin(), p.coset.angles().end());
      full.resize(n == 2 ? 3 : 8, 0.0);
      // Each dropped angle on its own grid, the others pinned to zero.
      for (std::size_t dropped = p.coset.size(); dropped < full.size(); ++dropped) {
        for (int g = 0; g < grid; ++g) {
          std::vector<double> angles = full;
          angles[dropped] = 2.0 * pi * g / (grid - 1);
          const ComplexSquareMatrix u = euler_unitary(n, angles);
          deviation = std::max(deviation,
                               frobenius_norm(matmul(matmul(u, diag), dagger(u)) - reference));
        }
      }
    }
  }
  rec.add("dropped_angle_invariance", deviation, 1e-13);
}

void check_measure(Recorder& rec) {
  double sin2beta = 0.0;
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j < 50; ++j) {
      const std::array<double, 2> c{pi * i / 49.0, 0.5 * pi * j / 49.0};
      sin2beta = std::max(sin2beta, std::abs(haar_coset_density(CosetAngles(2, c)) - std::sin(2.0 * c[1])));
    }
  rec.add("haar_coset_n2_sin2beta", sin2beta, 1e-10);

  double alpha_dev = 0.0;
  for (int n : {2, 3}) {
    for (std::size_t i = 0; i < 20; ++i) {
      CounterRng rng(check_seed + 20 + n, i);
      const auto p = random_params(n, rng);
      std::vector<double> c(p.coset.angles().begin(), p.coset.angles().end());
      c[0] = 0.0;
      const double reference = haar_coset_density(CosetAngles(n, c));
      for (int g = 1; g <= 10; ++g) {
        c[0] = pi * g / 10.0;
        alpha_dev = std::max(alpha_dev, std::abs(haar_coset_density(CosetAngles(n, c)) - reference));
      }
    }
  }
  rec.add("haar_coset_alpha_independence", alpha_dev, 1e-10);

  double closed_form = 0.0;
  for (std::size_t i = 0; i < 100; ++i) {
    CounterRng rng(check_seed + 30, i);
    const auto p = random_params(2, rng);
    const double c2t = std::cos(2.0 * p.eigen[0]);
    const double expected = 8.0 * c2t * c2t * std::sin(2.0 * p.coset[1]);
    closed_form = std::max(closed_form, std::abs(bures_joint_density(p).value - expected));
  }
  rec.add("bures_n2_closed_form", closed_form, 1e-10);

  double negative = 0.0;
  for (int n : {2, 3})
    for (std::size_t i = 0; i < 200; ++i) {
      CounterRng rng(check_seed + 40 + n, i);
      negative = std::max(negative, -bures_joint_density(random_params(n, rng)).value);
    }
  rec.add("bures_density_nonnegative", negative, 0.0);

  rec.add("normalization_n2_pi_squared", std::abs(normalization_constant(2) - pi * pi), 1e-6);
}

void check_inverse(Recorder& rec, std::size_t points) {
  double error = 0.0;
  double flag_mismatch = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    CounterRng rng(check_seed + 50, i);
    const auto p = random_params(2, rng);
    const ComplexSquareMatrix rho = density_from_params(p);
    const InverseResult inv = params_from_density_2(rho);
    error = std::max(error, frobenius_norm(density_from_params(inv.params) - rho));
    const RealList lambda = diag_eigenvalues(p.eigen);
    const bool degenerate = std::abs(lambda[0] - lambda[1]) <= density_tolerance;
    if (degenerate != inv.gauge_degenerate) flag_mismatch = 1.0;
  }
  rec.add("inverse_round_trip_n2", error, 1e-10);
  rec.add("inverse_degeneracy_flag", flag_mismatch, 0.0);
}

void check_full(Recorder& rec, const CheckContext& ctx) {
  const QuadratureSpec coarse{10, QuadratureRule::gauss_legendre};
  const QuadratureSpec fine{12, QuadratureRule::gauss_legendre};
  const double v10 = joint_volume(3, coarse, ctx.workers);
  const double v12 = joint_volume(3, fine, ctx.workers);
  rec.add("normalization_n3_two_resolutions", std::abs(v10 - v12) / v12, 1e-4);

  constexpr std::size_t count = 100000;
  for (int n : {2, 3}) {
    const SamplerSpec spec{check_seed + n, estimate_envelope(n, n == 2 ? 32 : 8, SampleTarget::coset, ctx.workers), 4096};
    const auto cosets = sample_coset(n, count, spec, ctx.workers);
    std::vector<std::vector<double>> column(n);
    for (const auto& c : cosets) {
      const ComplexSquareMatrix u = coset_unitary(c);
      for (int r = 0; r < n; ++r) column[r].push_back(std::norm(u(r, 0)));
    }
    double worst = 0.0;
    if (n == 2) {
      worst = ks_statistic(column[0], [](double x) { return std::clamp(x, 0.0, 1.0); });
    } else {
      // Dirichlet(1,1,1) marginals are Beta(1,2).
      for (int r = 0; r < 3; ++r) {
        worst = std::max(worst, ks_statistic(column[r], [](double x) {
          const double y = std::clamp(x, 0.0, 1.0);
          return 1.0 - (1.0 - y) * (1.0 - y);
        }));
      }
    }
    rec.add("pushforward_column_ks_n" + std::to_string(n), worst, ks_critical_1pct(count));
  }

  const SamplerSpec spec{check_seed, estimate_envelope(2, 16, SampleTarget::joint, ctx.workers), 4096};
  for (const char* name : {"purity", "entropy"}) {
    const FunctionalId f = FunctionalId::parse(name);
    const IntegralResult quad = integrate(2, f, {32, QuadratureRule::gauss_legendre}, {ctx.workers});
    const IntegralResult mc = integrate_mc(2, f, 200000, spec, ctx.workers);
    const double combined = std::hypot(quad.error_estimate, mc.error_estimate);
    rec.add(std::string("mc_vs_quadrature_") + name, std::abs(quad.value - mc.value) / combined, 3.0);
  }

  const double envelope_3 = estimate_envelope(3, 8, SampleTarget::joint, ctx.workers);
  const auto one = sample(3, 2000, {7, envelope_3, 64}, 1);
  const auto four = sample(3, 2000, {7, envelope_3, 64}, 4);
  double mismatch = one.size() == four.size() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < std::min(one.size(), four.size()); ++i) {
    if (one[i].coordinates() != four[i].coordinates()) mismatch = 1.0;
  }
  rec.add("sampler_worker_determinism", mismatch, 0.0);
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "fast") return Suite::fast;
  if (name == "full") return Suite::full;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

bool CheckReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

const InvariantResult* CheckReport::find(std::string_view name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

CheckReport run_checks(Suite suite, const CheckContext& context) {
  CheckReport report;
  Recorder rec(report);
  const bool full = suite == Suite::full;
  check_generators(rec, context);
  check_linalg(rec, full ? 2000 : 200);
  check_densities(rec, full ? 10000 : 1000);
  check_dropped_angles(rec, full ? 100 : 20);
  check_measure(rec);
  check_inverse(rec, 1000);
  if (full) check_full(rec, context);
  return report;
}

}  // namespace bures
