// Command-line front end: density, sample, integrate, volume, check.
//
// Exit codes: 0 success, 1 invariant or assertion failure, 2 usage error.
// Environment: BURES_THREADS sets the worker count; results do not depend on it.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bures/checks.hpp"
#include "bures/errors.hpp"
#include "bures/integrate.hpp"
#include "bures/measure.hpp"
#include "bures/record.hpp"
#include "bures/sample.hpp"

namespace {

using namespace bures;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int worker_count() {
  const char* env = std::getenv("BURES_THREADS");
  if (env == nullptr || *env == '\0') {
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  const std::string_view text(env);
  int workers = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), workers);
  if (ec != std::errc() || end != text.data() + text.size() || workers < 1) {
    throw UsageError("BURES_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  return workers;
}

double parse_real(const std::string& name, std::string_view text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
    throw UsageError("parameter '" + name + "': cannot parse '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_u64(const std::string& name, std::string_view text) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(name + ": expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

// "theta=0.1,alpha=0,beta=1.2" -> coordinates in flat order; every name exactly once.
std::vector<double> parse_params(int n, const std::string& text) {
  const auto names = coordinate_names(n);
  std::map<std::string, double> given;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    start = comma + 1;
    if (item.empty()) {
      if (comma == text.size()) break;
      continue;
    }
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + item + "': expected name=value");
    const std::string name = item.substr(0, eq);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw UsageError("unknown parameter '" + name + "' for n = " + std::to_string(n));
    }
    if (given.count(name)) throw UsageError("duplicate parameter '" + name + "'");
    given[name] = parse_real(name, std::string_view(item).substr(eq + 1));
  }
  std::vector<double> coordinates;
  for (auto name : names) {
    auto it = given.find(std::string(name));
    if (it == given.end()) throw UsageError("missing parameter '" + std::string(name) + "'");
    coordinates.push_back(it->second);
  }
  return coordinates;
}

void print(const Json& record) { std::cout << to_json_text(record) << '\n'; }

int default_points(int n, bool volume) {
  if (n == 3) return 12;
  return volume ? 64 : 32;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler-angle parameterization and Bures measure for 2- and 3-state density matrices"};
  app.require_subcommand(1);
  app.footer(
      "Angles are in radians. Coordinate names:\n"
      "  n = 2: theta, alpha, beta\n"
      "  n = 3: theta1, theta2, alpha, beta, gamma, theta_big, a, b\n"
      "Matrices are row-major lists of [re, im] pairs in JSON; CSV rows flatten them row-major\n"
      "with re/im interleaved (m00_re, m00_im, m01_re, ...).\n"
      "Exit codes: 0 success, 1 invariant/assertion failure, 2 usage error.\n"
      "BURES_THREADS sets the worker count (results are identical for any value).");

  int n = 2;
  auto add_n = [&n](CLI::App* cmd) {
    cmd->add_option("--n", n, "System dimension")->required()->check(CLI::IsMember({2, 3}));
  };

  auto* density = app.add_subcommand("density", "Density matrix, spectrum and Bures density at a point");
  add_n(density);
  std::string params_text;
  std::string mode_text = "raw";
  density->add_option("--params", params_text, "Complete coordinate list name=value,...")->required();
  density->add_option("--mode", mode_text, "raw | normalized")->check(CLI::IsMember({"raw", "normalized"}));

  auto* sample_cmd = app.add_subcommand("sample", "Draw Bures-distributed density matrices");
  add_n(sample_cmd);
  std::string count_text, seed_text, format = "json";
  int envelope_grid = 0;
  std::size_t batch_size = 4096;
  sample_cmd->add_option("--count", count_text, "Number of samples")->required();
  sample_cmd->add_option("--seed", seed_text, "64-bit unsigned seed")->required();
  sample_cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  sample_cmd->add_option("--envelope-grid", envelope_grid, "Grid points per axis for the envelope (default 16 for n=2, 8 for n=3)");
  sample_cmd->add_option("--batch-size", batch_size, "Proposals per work unit")->check(CLI::PositiveNumber);

  auto* integrate_cmd = app.add_subcommand("integrate", "Expectation of a functional under the normalized Bures measure");
  add_n(integrate_cmd);
  std::string functional_text, method = "quadrature", rule_text = "gauss-legendre";
  int points = 0;
  std::string samples_text = "1000000";
  std::string integrate_seed_text = "1";
  bool full_tensor = false;
  bool bits = false;
  integrate_cmd->add_option("--functional", functional_text, "entropy | purity | moment:k")->required();
  integrate_cmd->add_option("--method", method, "quadrature | mc")->check(CLI::IsMember({"quadrature", "mc"}));
  integrate_cmd->add_option("--points", points, "Quadrature points per axis (default 32 for n=2, 12 for n=3)");
  integrate_cmd->add_option("--rule", rule_text, "gauss-legendre | simpson");
  integrate_cmd->add_option("--samples", samples_text, "Monte Carlo sample count");
  integrate_cmd->add_option("--seed", integrate_seed_text, "Monte Carlo seed");
  integrate_cmd->add_flag("--full-tensor", full_tensor, "n=3: sum the unfactored 8-axis grid");
  integrate_cmd->add_flag("--bits", bits, "Report entropy in bits instead of nats");

  auto* volume_cmd = app.add_subcommand("volume", "RAW normalization constant of the Bures density");
  add_n(volume_cmd);
  int volume_points = 0;
  std::string volume_rule = "gauss-legendre";
  bool volume_full = false;
  volume_cmd->add_option("--points", volume_points, "Quadrature points per axis (default 64 for n=2, 12 for n=3)");
  volume_cmd->add_option("--rule", volume_rule, "gauss-legendre | simpson");
  volume_cmd->add_flag("--full-tensor", volume_full, "n=3: sum the unfactored 8-axis grid");

  auto* check_cmd = app.add_subcommand("check", "Run the invariant suite");
  std::string suite_text = "fast";
  check_cmd->add_option("--suite", suite_text, "fast | full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    const int workers = worker_count();

    if (*density) {
      const auto coordinates = parse_params(n, params_text);
      const auto p = DensityMatrixParams::from_coordinates(n, coordinates);
      print(density_record(p, parse_mode(mode_text)));
      return exit_ok;
    }

    if (*sample_cmd) {
      if (!count_text.empty() && count_text.front() == '-') throw UsageError("--count must be >= 0");
      const std::uint64_t count = parse_u64("--count", count_text);
      SamplerSpec spec;
      spec.seed = parse_u64("--seed", seed_text);
      spec.batch_size = batch_size;
      const int grid = envelope_grid > 0 ? envelope_grid : (n == 2 ? 16 : 8);
      if (grid < 8) throw UsageError("--envelope-grid must be >= 8");
      spec.envelope_constant = estimate_envelope(n, grid, SampleTarget::joint, workers);
      SamplerReport report;
      const auto samples = sample(n, count, spec, workers, &report);
      if (format == "csv") {
        const auto header = csv_header(n);
        for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
        std::cout << '\n';
        for (const auto& p : samples) std::cout << csv_row(p) << '\n';
      } else {
        print(sample_record(n, samples, spec, report));
      }
      return exit_ok;
    }

    if (*integrate_cmd) {
      FunctionalId f;
      try {
        f = FunctionalId::parse(functional_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      IntegralResult result;
      if (method == "mc") {
        SamplerSpec spec;
        spec.seed = parse_u64("--seed", integrate_seed_text);
        spec.envelope_constant = estimate_envelope(n, n == 2 ? 16 : 8, SampleTarget::joint, workers);
        result = integrate_mc(n, f, parse_u64("--samples", samples_text), spec, workers);
      } else {
        QuadratureSpec spec{points > 0 ? points : default_points(n, false), parse_rule(rule_text)};
        result = integrate(n, f, spec, {workers, full_tensor});
      }
      std::string unit = "1";
      if (f.kind == FunctionalKind::von_neumann_entropy) {
        unit = bits ? "bits" : "nats";
        if (bits) {
          result.value /= std::log(2.0);
          result.error_estimate /= std::log(2.0);
        }
      }
      print(scalar_record("integrate", n, f.name(), result, unit));
      return exit_ok;
    }

    if (*volume_cmd) {
      const QuadratureSpec spec{volume_points > 0 ? volume_points : default_points(n, true),
                                parse_rule(volume_rule)};
      const QuadratureSpec reference = reference_spec(spec);
      auto volume = [&](const QuadratureSpec& s) {
        return volume_full ? joint_volume_full_tensor(n, s, workers) : joint_volume(n, s, workers);
      };
      IntegralResult result;
      result.method = "quadrature";
      result.value = volume(spec);
      result.error_estimate = std::abs(result.value - volume(reference));
      result.points_per_axis = spec.points_per_axis;
      result.reference_points_per_axis = reference.points_per_axis;
      print(scalar_record("volume", n, "raw_volume", result));
      return exit_ok;
    }

    if (*check_cmd) {
      CheckContext context;
      context.workers = workers;
      const CheckReport report = run_checks(parse_suite(suite_text), context);
      Json invariants = Json::array();
      for (const auto& r : report.results) {
        invariants.push_back(
            {{"name", r.name}, {"deviation", r.deviation}, {"tolerance", r.tolerance}, {"passed", r.passed}});
      }
      Json record = Json::object();
      record["schema_version"] = schema_version;
      record["command"] = "check";
      record["suite"] = suite_text;
      record["passed"] = report.all_passed();
      record["invariants"] = std::move(invariants);
      print(record);
      for (const auto& r : report.results)
        if (!r.passed) std::cerr << "FAILED " << r.name << ": deviation " << format_double(r.deviation)
                                 << " > tolerance " << format_double(r.tolerance) << '\n';
      return report.all_passed() ? exit_ok : exit_failure;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const RangeError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DimensionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}
