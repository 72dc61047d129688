#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sepdfa/encoder.hpp"

namespace sepdfa {

enum class Outcome { Sat, Unsat };

struct SolverVerdict {
  Outcome outcome = Outcome::Unsat;
  std::vector<bool> model;  // 1-based, empty unless sat
  double wall_seconds = 0.0;
};

/// Parses SAT-competition output: "s SATISFIABLE" / "s UNSATISFIABLE",
/// "v" lines with signed literals up to a terminating 0, "c" comments.
/// Throws SolverError without an "s" line or on a malformed literal.
SolverVerdict parse_solver_output(std::string_view text);

struct SolverOptions {
  std::vector<std::string> command{"cadical"};
  std::chrono::duration<double> timeout{0};  // zero: no limit
  // Formulas whose DIMACS text exceeds this go through a temporary file
  // passed as the last argument instead of stdin.
  std::size_t pipe_limit_bytes = std::size_t{64} << 20;
};

/// Runs the external solver on `f`. The exit code (10 sat, 20 unsat) must
/// agree with the "s" line, and a sat model must satisfy every clause.
/// Throws SolverError (solver missing, inconsistent output, invalid model)
/// or SolverTimeout, after killing the solver's process group.
SolverVerdict solve(const CnfFormula& f, const SolverOptions& options);

}  // namespace sepdfa
