#include "sepdfa/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sepdfa/automata.hpp"
#include "sepdfa/error.hpp"
#include "sepdfa/generators.hpp"
#include "sepdfa/miner.hpp"
#include "sepdfa/sample_store.hpp"

namespace sepdfa {
namespace {

struct MineArgs {
  std::string input;
  std::string mode = "min3dfa";
  bool safety = false;
  bool no_symmetry_breaking = false;
  std::string solver = "cadical";
  double timeout = 0;
  std::size_t n_start = 0;
  std::size_t n_max = 0;
  std::string output;
  bool kv = false;
};

struct ParityArgs {
  std::size_t colours = 0;
  std::size_t length = 0;
  std::string output;
  bool stats = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

struct RandomArgs {
  std::size_t dfa_size = 0;
  std::uint64_t seed = 1;
  std::size_t alphabet = 2;
  std::size_t sample_count = 0;  // 0: 50 * dfa_size
  std::size_t max_len = 0;       // 0: 2 * dfa_size + 3
  std::string output;
  std::string dfa_output;
};

struct VerifyArgs {
  std::string dfa;
  std::string samples;
};

struct StatsArgs {
  std::string samples;
  bool no_apta = false;
};

std::vector<std::string> split_command(const std::string& command) {
  std::istringstream in(command);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

// Writes to `path`, or to `fallback` when the path is empty or "-".
template <typename Fn>
void write_to(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  fn(file);
}

int cmd_mine(const MineArgs& args, std::ostream& out, std::ostream& err) {
  auto mode = parse_mode(args.mode);
  if (!mode) {
    err << "unknown mode '" << args.mode << "' (apta, min3dfa, ddfa)\n";
    return kExitUsage;
  }
  const SampleSet samples = read_abbadingo_file(args.input);
  MinerOptions options;
  options.safety_mode = args.safety;
  options.symmetry_breaking = !args.no_symmetry_breaking;
  options.solver.command = split_command(args.solver);
  options.solver.timeout = std::chrono::duration<double>(args.timeout);
  options.n_start = args.n_start;
  options.n_max = args.n_max;
  if (args.safety && samples.alphabet_size < 2) {
    err << "--safety needs at least two colours\n";
    return kExitUsage;
  }

  MiningReport report;
  try {
    report = mine_min_dfa(samples, *mode, options);
  } catch (const MiningError& e) {
    write_report(out, e.report());
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case MiningError::Kind::Timeout: return kExitTimeout;
      case MiningError::Kind::Solver: return kExitSolver;
      case MiningError::Kind::Internal: return kExitInternal;
    }
    return kExitInternal;
  }
  if (args.kv)
    write_report_kv(out, report);
  else
    write_report(out, report);
  if (!args.output.empty()) write_to(args.output, out, [&](std::ostream& o) { write_dump(o, *report.dfa); });
  return kExitOk;
}

int cmd_gen_parity(const ParityArgs& args, std::ostream& out) {
  const ParityConfig cfg{args.colours, args.length};
  const SampleSet samples = gen_parity_samples(cfg, args.budget);
  if (args.stats) {
    ParityStats stats = acceptor_stats(samples);
    stats.colours = cfg.colours;
    stats.length = cfg.length;
    write_stats_line(out, stats);
    return kExitOk;
  }
  write_to(args.output, out, [&](std::ostream& o) { write_abbadingo(o, samples); });
  return kExitOk;
}

int cmd_gen_random(const RandomArgs& args, std::ostream& out) {
  const std::size_t count = args.sample_count ? args.sample_count : 50 * args.dfa_size;
  const std::size_t max_len = args.max_len ? args.max_len : 2 * args.dfa_size + 3;
  const LearnedDFA hidden = gen_random_dfa(args.dfa_size, args.alphabet, args.seed);
  // Distinct stream for the words so the DFA does not depend on the count.
  const SampleSet samples = gen_samples_from_dfa(hidden, count, max_len, args.seed ^ 0x5bd1e995ULL);
  write_to(args.output, out, [&](std::ostream& o) { write_abbadingo(o, samples); });
  std::string dfa_path = args.dfa_output;
  if (dfa_path.empty() && !args.output.empty() && args.output != "-") dfa_path = args.output + ".dfa";
  if (!dfa_path.empty()) write_to(dfa_path, out, [&](std::ostream& o) { write_dump(o, hidden); });
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const LearnedDFA dfa = read_learned_dump_file(args.dfa);
  const SampleSet samples = read_abbadingo_file(args.samples);
  const VerificationOutcome result = verify_separating(dfa, samples);
  for (const auto& v : result.violations)
    out << "violation [" << to_string(v.word) << "] expected " << label_symbol(v.label) << '\n';
  out << (result.ok ? "ok" : "FAILED") << ' ' << samples.size() << " samples, " << result.violations.size()
      << " violations\n";
  return result.ok ? kExitOk : kExitVerification;
}

int cmd_stats(const StatsArgs& args, std::ostream& out) {
  const SampleSet samples = read_abbadingo_file(args.samples);
  const ParityStats stats = acceptor_stats(samples, !args.no_apta);
  out << stats.positives << '\t' << stats.negatives << '\t' << stats.apta << '\t' << stats.min3dfa << '\t'
      << stats.ddfa << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Learn minimal separating DFAs from labelled samples", "sepdfa"};
  app.require_subcommand(1);

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Find a minimal DFA separating an Abbadingo sample file");
  mine_cmd->add_option("input", mine.input, "Abbadingo sample file")->required();
  mine_cmd->add_option("--mode", mine.mode, "Acceptor fed to the SAT encoding")
      ->check(CLI::IsMember({"apta", "min3dfa", "ddfa"}))
      ->capture_default_str();
  mine_cmd->add_flag("--safety", mine.safety, "Add the parity/safety shape constraints (alphabet = colours)");
  mine_cmd->add_flag("--no-symmetry-breaking", mine.no_symmetry_breaking, "Leave out the BFS-tree constraints");
  mine_cmd->add_option("--solver", mine.solver, "Solver command line; DIMACS on stdin")->capture_default_str();
  mine_cmd->add_option("--timeout", mine.timeout, "Seconds per solver call, 0 for none")->check(CLI::NonNegativeNumber);
  mine_cmd->add_option("--n-start", mine.n_start, "First candidate size (default 1, 2 with --safety)");
  mine_cmd->add_option("--n-max", mine.n_max, "Last candidate size (default: acceptor bound)");
  mine_cmd->add_option("-o,--output", mine.output, "Write the learned DFA dump here");
  mine_cmd->add_flag("--kv", mine.kv, "Print the report as key=value lines");

  ParityArgs parity;
  auto* parity_cmd = app.add_subcommand("gen-parity", "Classify all words of one length under the parity condition");
  parity_cmd->add_option("--colours", parity.colours, "Number of colours (alphabet size)")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  parity_cmd->add_option("--length", parity.length, "Word length, greater than --colours")->required();
  parity_cmd->add_option("-o,--output", parity.output, "Abbadingo output file (default stdout)");
  parity_cmd->add_flag("--stats", parity.stats,
                       "Print colours, length, |S+|, |S-|, apta, min3dfa, ddfa sizes instead of the samples");
  parity_cmd->add_option("--budget", parity.budget, "Maximum number of words to enumerate")->capture_default_str();

  RandomArgs random;
  auto* random_cmd = app.add_subcommand("gen-random", "Sample words labelled by a random hidden DFA");
  random_cmd->add_option("--dfa-size", random.dfa_size, "States of the hidden DFA")
      ->required()
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", random.seed, "Random seed")->capture_default_str();
  random_cmd->add_option("--alphabet", random.alphabet, "Alphabet size")->capture_default_str()->check(CLI::PositiveNumber);
  random_cmd->add_option("--sample-count", random.sample_count, "Number of samples (default 50 * dfa-size)");
  random_cmd->add_option("--max-len", random.max_len, "Longest word (default 2 * dfa-size + 3)");
  random_cmd->add_option("-o,--output", random.output, "Abbadingo output file (default stdout)");
  random_cmd->add_option("--dfa-output", random.dfa_output, "Hidden DFA dump (default <output>.dfa)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a DFA dump separates a sample file");
  verify_cmd->add_option("dfa", verify.dfa, "DFA dump")->required();
  verify_cmd->add_option("samples", verify.samples, "Abbadingo sample file")->required();

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print |S+|, |S-| and the apta, min3dfa, ddfa sizes of a sample file");
  stats_cmd->add_option("samples", stats.samples, "Abbadingo sample file")->required();
  stats_cmd->add_flag("--no-apta", stats.no_apta, "Skip building the prefix tree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mine_cmd) return cmd_mine(mine, out, err);
    if (*parity_cmd) return cmd_gen_parity(parity, out);
    if (*random_cmd) return cmd_gen_random(random, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*stats_cmd) return cmd_stats(stats, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const SolverTimeout& e) {
    err << "timeout: " << e.what() << '\n';
    return kExitTimeout;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const VerificationError& e) {
    err << "verification error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace sepdfa
