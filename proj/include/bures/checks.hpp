#pragma once

// Executable invariant suite behind `bures check`.

#include <string>
#include <string_view>
#include <vector>

#include "bures/generators.hpp"

namespace bures {

enum class Suite { fast, full };

Suite parse_suite(std::string_view name);

struct InvariantResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CheckReport {
  std::vector<InvariantResult> results;
  bool all_passed() const;
  const InvariantResult* find(std::string_view name) const;
};

// Generator tables under test. The defaults are the library constants; tests substitute
// corrupted copies to confirm the suite catches them.
struct CheckContext {
  GeneratorSet pauli_set = generator_set(2);
  GeneratorSet gell_mann_set = generator_set(3);
  int workers = 1;
};

// fast: algebraic and pointwise invariants plus the n = 2 volume (seconds).
// full: adds the n = 3 volume at two resolutions, 10^5-sample KS pushforward tests,
//       Monte Carlo vs quadrature and sampler determinism across worker counts.
CheckReport run_checks(Suite suite, const CheckContext& context = {});

}  // namespace bures
