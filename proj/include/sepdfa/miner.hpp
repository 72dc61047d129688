#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sepdfa/automata.hpp"
#include "sepdfa/error.hpp"
#include "sepdfa/sample_store.hpp"
#include "sepdfa/solver_bridge.hpp"

namespace sepdfa {

/// Which acceptor of the samples feeds the SAT encoding.
enum class AcceptorMode { Apta, Min3dfa, Ddfa };

std::string to_string(AcceptorMode mode);
std::optional<AcceptorMode> parse_mode(std::string_view name);

struct MinerOptions {
  bool safety_mode = false;
  bool symmetry_breaking = true;
  SolverOptions solver;
  std::size_t n_start = 0;  // 0: 1, or 2 in safety mode
  std::size_t n_max = 0;    // 0: upper_bound() of the acceptor
};

struct SizeAttempt {
  std::size_t n = 0;
  Outcome outcome = Outcome::Unsat;
  double solve_seconds = 0.0;
  std::size_t variables = 0;
  std::size_t clauses = 0;
};

struct VerificationOutcome {
  bool ok = true;
  std::vector<Sample> violations;  // word with the label it should have had
};

struct MiningReport {
  AcceptorMode mode = AcceptorMode::Min3dfa;
  std::size_t acceptor_size = 0;
  std::size_t upper_bound = 0;
  std::vector<SizeAttempt> attempts;  // unsat for every n before the last one
  std::optional<LearnedDFA> dfa;
  std::optional<VerificationOutcome> verification;

  std::size_t minimal_size() const { return dfa ? dfa->state_count() : 0; }
};

/// Human-readable report, one fact per line.
void write_report(std::ostream& out, const MiningReport& report);
/// Machine-readable "key=value" lines.
void write_report_kv(std::ostream& out, const MiningReport& report);

/// Mining failed part-way; `report` holds every attempt made so far.
class MiningError : public Error {
 public:
  enum class Kind { Solver, Timeout, Internal };
  MiningError(Kind kind, const std::string& what, MiningReport report)
      : Error(what), kind_(kind), report_(std::move(report)) {}
  Kind kind() const { return kind_; }
  const MiningReport& report() const { return report_; }

 private:
  Kind kind_;
  MiningReport report_;
};

/// Guaranteed-sufficient candidate size: the completion of the acceptor (or
/// of the positive half of a double DFA) plus a rejecting sink.
std::size_t upper_bound(const ThreeValuedDFA& acceptor);
std::size_t upper_bound(const DoubleDFA& acceptor);

/// Runs every sample through `d`; lists each word that gets the wrong answer.
VerificationOutcome verify_separating(const LearnedDFA& d, const SampleSet& s);

/// Smallest complete DFA separating `s`: encodes and solves for n = n_start,
/// n_start + 1, ... until satisfiable, then decodes and verifies the model.
MiningReport mine_min_dfa(const SampleSet& s, AcceptorMode mode, const MinerOptions& options);

}  // namespace sepdfa
