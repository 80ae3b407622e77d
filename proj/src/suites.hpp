#pragma once

// Named verification suites over the algebra modules. Each suite contributes
// a list of checks to a Report; every check draws its randomness from its own
// generator seeded by the check id and the configured seed, so reports replay
// byte-identically and inserting or removing checks never perturbs others.

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace exalg {

struct SuiteConfig {
  std::vector<std::string> suites;
  int dim = 3;        // generator-count / dimension cap (1..6)
  int order = 12;     // power-series truncation order
  int words = 4;      // word-slot cap for chain-level exhaustive checks
  int samples = 50;   // random-sample count for sampled checks
  std::uint64_t seed = 1;
  std::string out;    // optional report path; not part of the report itself

  // Throws std::invalid_argument on empty/unknown suites or caps out of range.
  void validate() const;
};

const std::vector<std::string>& known_suites();

// Runs the configured suites and returns the finalized report. With the
// environment variable EXALG_INJECT_FAILURE set (nonempty), appends one
// deliberately failing non-conditional check so the exit-status contract can
// be exercised end to end.
Report run_suites(const SuiteConfig& cfg);

}  // namespace exalg
