#pragma once

// Self-contained demonstration topics rendered by the CLI. Each topic
// computes a small worked example and returns both a human-readable text
// rendering and a canonical JSON rendering; the caller chooses which to
// print. File-based topics receive the file *content* as a parameter — all
// I/O stays in the caller.
//
//   todd-table [N]          series coefficients through order N (default 6)
//   hrr-table [n] [kmax]    Euler characteristics on projective n-space
//   dexp                    derivative-of-exp example on the 3x3 strictly
//                           upper triangular algebra
//   element <m> <expr> [expr2]   parse wedge-algebra expressions; with two,
//                                also their product (and pairing on the
//                                raising side)
//   chain <nvars> <expr>    parse a chain and show both differentials and
//                           its differential-forms image
//   atiyah <json>           ingest a connection tensor and report its
//                           determinant and verification verdicts
//   lie-basis <json>        ingest a matrix Lie basis and report the closure
//                           table and verification verdicts

#include <string>
#include <vector>

namespace exalg {

struct DemoResult {
  std::string text;
  std::string json;
};

const std::vector<std::string>& known_demo_topics();

// Throws std::invalid_argument on an unknown topic or malformed parameters.
DemoResult run_demo(const std::string& topic,
                    const std::vector<std::string>& params);

}  // namespace exalg
