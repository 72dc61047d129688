#include "sepdfa/miner.hpp"

#include <iostream>

#include "sepdfa/encoder.hpp"

namespace sepdfa {

std::string to_string(AcceptorMode mode) {
  switch (mode) {
    case AcceptorMode::Apta: return "apta";
    case AcceptorMode::Min3dfa: return "min3dfa";
    case AcceptorMode::Ddfa: return "ddfa";
  }
  return "?";
}

std::optional<AcceptorMode> parse_mode(std::string_view name) {
  if (name == "apta") return AcceptorMode::Apta;
  if (name == "min3dfa") return AcceptorMode::Min3dfa;
  if (name == "ddfa") return AcceptorMode::Ddfa;
  return std::nullopt;
}

std::size_t upper_bound(const ThreeValuedDFA& acceptor) { return acceptor.state_count() + 1; }

std::size_t upper_bound(const DoubleDFA& acceptor) { return acceptor.positive.state_count() + 1; }

VerificationOutcome verify_separating(const LearnedDFA& d, const SampleSet& s) {
  if (d.alphabet_size != s.alphabet_size)
    throw VerificationError("DFA alphabet " + std::to_string(d.alphabet_size) + " differs from sample alphabet " +
                            std::to_string(s.alphabet_size));
  VerificationOutcome result;
  for (const auto& w : s.positives)
    if (!d.accepts(w)) result.violations.push_back({w, Label::Positive});
  for (const auto& w : s.negatives)
    if (d.accepts(w)) result.violations.push_back({w, Label::Negative});
  result.ok = result.violations.empty();
  return result;
}

MiningReport mine_min_dfa(const SampleSet& s, AcceptorMode mode, const MinerOptions& options) {
  MiningReport report;
  report.mode = mode;

  const OrderedSampleSet ordered = sort_and_validate(s);
  Acceptor acceptor;
  switch (mode) {
    case AcceptorMode::Apta: {
      auto apta = build_apta(ordered);
      report.acceptor_size = apta.state_count();
      report.upper_bound = upper_bound(apta);
      acceptor = as_acceptor(apta);
      break;
    }
    case AcceptorMode::Min3dfa: {
      auto min = build_min_3dfa_incremental(ordered);
      report.acceptor_size = min.state_count();
      report.upper_bound = upper_bound(min);
      acceptor = as_acceptor(min);
      break;
    }
    case AcceptorMode::Ddfa: {
      auto ddfa = build_ddfa(ordered);
      report.acceptor_size = ddfa.state_count();
      report.upper_bound = upper_bound(ddfa);
      acceptor = as_acceptor(ddfa);
      break;
    }
  }

  const EncodingOptions encoding{options.symmetry_breaking, options.safety_mode};
  const std::size_t n_start = options.n_start ? options.n_start : (options.safety_mode ? 2 : 1);
  const std::size_t n_max = options.n_max ? options.n_max : report.upper_bound;

  for (std::size_t n = n_start; n <= n_max; ++n) {
    Encoding enc = encode_instance(acceptor, n, encoding);
    SolverVerdict verdict;
    try {
      verdict = solve(enc.formula, options.solver);
    } catch (const SolverTimeout& e) {
      throw MiningError(MiningError::Kind::Timeout, "n=" + std::to_string(n) + ": " + e.what(), report);
    } catch (const SolverError& e) {
      throw MiningError(MiningError::Kind::Solver, "n=" + std::to_string(n) + ": " + e.what(), report);
    }
    report.attempts.push_back({n, verdict.outcome, verdict.wall_seconds,
                               static_cast<std::size_t>(enc.formula.variable_count()), enc.formula.clause_count()});
    if (verdict.outcome == Outcome::Unsat) continue;

    try {
      report.dfa = decode_model(verdict.model, enc.vars);
    } catch (const InternalError& e) {
      throw MiningError(MiningError::Kind::Internal, e.what(), report);
    }
    report.verification = verify_separating(*report.dfa, s);
    if (!report.verification->ok)
      throw MiningError(MiningError::Kind::Internal,
                        "decoded DFA misclassifies " + std::to_string(report.verification->violations.size()) +
                            " samples",
                        report);
    return report;
  }
  throw MiningError(MiningError::Kind::Internal,
                    "no separating DFA with at most " + std::to_string(n_max) + " states", report);
}

void write_report(std::ostream& out, const MiningReport& report) {
  out << "mode " << to_string(report.mode) << '\n';
  out << "acceptor states " << report.acceptor_size << '\n';
  out << "upper bound " << report.upper_bound << '\n';
  for (const auto& a : report.attempts)
    out << "n=" << a.n << ' ' << (a.outcome == Outcome::Sat ? "sat" : "unsat") << ' ' << a.solve_seconds << "s "
        << a.variables << " vars " << a.clauses << " clauses\n";
  if (report.dfa) out << "minimal size " << report.minimal_size() << '\n';
  if (report.verification) {
    out << "verification " << (report.verification->ok ? "ok" : "FAILED") << '\n';
    for (const auto& v : report.verification->violations)
      out << "violation [" << to_string(v.word) << "] expected " << label_symbol(v.label) << '\n';
  }
}

void write_report_kv(std::ostream& out, const MiningReport& report) {
  out << "mode=" << to_string(report.mode) << '\n';
  out << "acceptor_size=" << report.acceptor_size << '\n';
  out << "upper_bound=" << report.upper_bound << '\n';
  for (const auto& a : report.attempts)
    out << "attempt." << a.n << "=" << (a.outcome == Outcome::Sat ? "sat" : "unsat") << ',' << a.solve_seconds << ','
        << a.variables << ',' << a.clauses << '\n';
  out << "minimal_size=" << report.minimal_size() << '\n';
  if (report.verification) out << "verified=" << (report.verification->ok ? 1 : 0) << '\n';
}

}  // namespace sepdfa
