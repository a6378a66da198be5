#pragma once

#include <string>
#include <vector>

#include "kgspin/closure.hpp"
#include "kgspin/qspace.hpp"

namespace kgspin {

struct CheckEntry {
  std::string name;
  std::string expected;
  std::string actual;
  std::string status;  // "pass" | "fail" | "skipped" | "undecided"
  std::string provenance;
};

struct Certificate {
  int n = 0;
  std::string route;  // "A", "B", or "A+B"
  std::vector<CheckEntry> checks;
  std::string property_g;        // "true" | "undecided"
  std::string quantum_symmetry;  // "none" | "unknown"
  std::vector<std::pair<std::string, std::string>> expressions;
  std::vector<std::pair<std::string, std::string>> matrices;  // CSV blocks
  std::map<std::string, double> timings;                      // seconds

  bool all_mandatory_pass() const;
};

struct DecideOptions {
  int closure_max_arity = 6;   // route A escalates 4..this
  long iteration_cap = 500'000;
  bool run_route_a = true;     // honoured for n <= 6
  bool run_route_b = true;
  uint64_t table_cap = 10'000'000;
};

// The property (G) decision with a replayable certificate. Route A: direct
// closure contains the transposition. Route B: span certificate for Q plus
// the R_T construction identity plus the decomposition of R.
Certificate decide_property_g(int n, const DecideOptions& opts = {});

// Deterministic JSON rendering; timings are attached only on request so
// byte-identical reruns can be compared.
std::string certificate_to_json(const Certificate& c, bool with_timings);

// Exit-status mapping shared with the CLI: 0 pass, 1 failed check,
// 2 undecided, 3 usage error.
int certificate_exit_status(const Certificate& c);

std::string evaluation_matrix_csv(const EvalMatrix& m);

}  // namespace kgspin
