// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sepdfa/automata.hpp"
#include "sepdfa/encoder.hpp"
#include "sepdfa/generators.hpp"
#include "sepdfa/miner.hpp"
#include "sepdfa/sample_store.hpp"
#include "sepdfa/solver_bridge.hpp"
#include "support.hpp"

using namespace sepdfa;

namespace {

struct ParityRow {
  std::size_t colours, length;
  std::size_t positives, negatives;
  std::size_t ddfa, min3dfa, apta;
};

const std::vector<ParityRow> kParityRows = {
    {2, 3, 3, 5, 12, 8, 15},
    {3, 4, 51, 20, 28, 23, 111},
    {3, 5, 130, 31, 38, 33, 266},
    {4, 5, 274, 488, 84, 82, 1083},
    {4, 6, 669, 1599, 117, 122, 3311},
    {4, 7, 1645, 5235, 150, 155, 10076},
    {5, 6, 7233, 3067, 269, 301, 13634},
    {5, 7, 30332, 9625, 372, 438, 53277},
    {5, 8, 127194, 30456, 475, 541, 209721},
};

struct SafetyRow {
  std::size_t colours, length, size;
};

const std::vector<SafetyRow> kSafetyRows = {{2, 3, 3}, {3, 5, 3}, {4, 7, 5}};

// Collects mismatches for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int report(int id, const std::string& title, const std::function<void(Check&, std::string&)>& body) {
  Check check;
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check, detail);
  } catch (const std::exception& e) {
    check.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = check.failures.empty();
  std::printf("[%s] criterion %d: %s (%s; %.1fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(), secs);
  for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i) std::printf("    %s\n", check.failures[i].c_str());
  std::fflush(stdout);
  return ok ? 0 : 1;
}

std::string row_name(std::size_t c, std::size_t l) {
  return "(" + std::to_string(c) + "," + std::to_string(l) + ")";
}

MinerOptions miner_options(bool safety) {
  MinerOptions o;
  o.safety_mode = safety;
  o.solver = test::solver();
  return o;
}

struct Instance {
  std::string name;
  SampleSet samples;
  bool safety;
  std::size_t hidden_size;  // 0 when unknown
};

std::vector<Instance> closure_instances() {
  std::vector<Instance> out;
  for (const auto& row : kSafetyRows)
    out.push_back({"parity" + row_name(row.colours, row.length), gen_parity_samples({row.colours, row.length}), true, 0});
  for (std::size_t n = 4; n <= 8; ++n) {
    const std::uint64_t seed = 1000 + n;
    const LearnedDFA hidden = gen_random_dfa(n, 2, seed);
    out.push_back({"random N=" + std::to_string(n), gen_samples_from_dfa(hidden, 50 * n, 2 * n + 3, seed ^ 0x5bd1e995ULL),
                   false, n});
  }
  return out;
}

// Verdict of a fresh encoding at size n over the 3DFA of s.
Outcome fresh_verdict(const SampleSet& s, std::size_t n, bool safety) {
  const Acceptor acc = as_acceptor(build_min_3dfa_incremental(sort_and_validate(s)));
  return solve(encode_instance(acc, n, {.symmetry_breaking = true, .safety_mode = safety}).formula, test::solver())
      .outcome;
}

}  // namespace

int main() {
  int failed = 0;

  failed += report(1, "parity sample counts", [](Check& c, std::string& detail) {
    for (const auto& row : kParityRows) {
      const auto s = gen_parity_samples({row.colours, row.length});
      c.expect(s.positives.size() == row.positives && s.negatives.size() == row.negatives,
               row_name(row.colours, row.length) + ": got " + std::to_string(s.positives.size()) + "/" +
                   std::to_string(s.negatives.size()));
    }
    detail = std::to_string(kParityRows.size()) + " rows";
  });

  failed += report(2, "parity acceptor sizes", [](Check& c, std::string& detail) {
    for (const auto& row : kParityRows) {
      const auto st = acceptor_stats(gen_parity_samples({row.colours, row.length}));
      c.expect(st.min3dfa == row.min3dfa && st.ddfa == row.ddfa && st.apta == row.apta,
               row_name(row.colours, row.length) + ": got min3dfa " + std::to_string(st.min3dfa) + ", ddfa " +
                   std::to_string(st.ddfa) + ", apta " + std::to_string(st.apta));
    }
    detail = std::to_string(kParityRows.size()) + " rows";
  });

  failed += report(3, "minimal safety DFA sizes", [](Check& c, std::string& detail) {
    for (const auto& row : kSafetyRows) {
      const auto name = row_name(row.colours, row.length);
      const auto r = mine_min_dfa(gen_parity_samples({row.colours, row.length}), AcceptorMode::Min3dfa,
                                  miner_options(true));
      c.expect(r.minimal_size() == row.size, name + ": got size " + std::to_string(r.minimal_size()));
      bool unsat_below = false;
      for (const auto& a : r.attempts) unsat_below |= a.n + 1 == row.size && a.outcome == Outcome::Unsat;
      c.expect(unsat_below, name + ": no unsat verdict at size " + std::to_string(row.size - 1));
      detail += name + "->" + std::to_string(r.minimal_size()) + " ";
    }
    if (!detail.empty()) detail.pop_back();
  });

  failed += report(4, "incremental construction equals batch minimisation", [](Check& c, std::string& detail) {
    std::mt19937_64 rng(20240601);
    const int trials = 600;
    for (int i = 0; i < trials; ++i) {
      const auto s = test::random_sample_set(rng, 4, 8, 60);
      const auto o = sort_and_validate(s);
      c.expect(isomorphic(build_min_3dfa_incremental(o), minimize_acyclic(build_apta(o))),
               "set " + std::to_string(i) + ": not isomorphic");
    }
    detail = std::to_string(trials) + " random sets";
  });

  failed += report(5, "encoding agrees with brute-force search", [](Check& c, std::string& detail) {
    std::mt19937_64 rng(777);
    int sets = 0, sat = 0, unsat = 0;
    while (sets < 120) {
      const auto s = test::random_sample_set(rng, 2, 4, 5);
      if (test::prefix_count(s) > 6) continue;
      ++sets;
      const auto o = sort_and_validate(s);
      const Acceptor acc = as_acceptor(build_min_3dfa_incremental(o));
      for (std::size_t n = 1; n <= 3; ++n) {
        const bool expected = test::separating_dfa_exists(s, n);
        (expected ? sat : unsat)++;
        for (bool sb : {true, false}) {
          const auto verdict =
              solve(encode_instance(acc, n, {.symmetry_breaking = sb}).formula, test::solver()).outcome;
          c.expect((verdict == Outcome::Sat) == expected,
                   "set " + write_abbadingo(s) + " n=" + std::to_string(n) + (sb ? " with" : " without") +
                       " symmetry breaking disagrees with brute force");
        }
      }
    }
    detail = std::to_string(sets) + " sets, " + std::to_string(sat) + " sat / " + std::to_string(unsat) + " unsat";
  });

  const auto instances = closure_instances();
  std::vector<std::size_t> min3dfa_sizes(instances.size(), 0);

  failed += report(6, "mined DFAs separate and are minimal", [&](Check& c, std::string& detail) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& inst = instances[i];
      const auto r = mine_min_dfa(inst.samples, AcceptorMode::Min3dfa, miner_options(inst.safety));
      const std::size_t n = r.minimal_size();
      min3dfa_sizes[i] = n;
      c.expect(r.dfa && verify_separating(*r.dfa, inst.samples).ok, inst.name + ": mined DFA does not separate");
      if (inst.hidden_size) c.expect(n <= inst.hidden_size, inst.name + ": size " + std::to_string(n) + " > N");
      const std::size_t floor = inst.safety ? 2 : 1;
      if (n > floor)
        c.expect(fresh_verdict(inst.samples, n - 1, inst.safety) == Outcome::Unsat,
                 inst.name + ": size " + std::to_string(n - 1) + " is not unsat");
      detail += inst.name + "->" + std::to_string(n) + " ";
    }
    if (!detail.empty()) detail.pop_back();
  });

  failed += report(7, "acceptor modes agree on the minimal size", [&](Check& c, std::string& detail) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& inst = instances[i];
      for (auto mode : {AcceptorMode::Apta, AcceptorMode::Ddfa}) {
        const std::size_t n = mine_min_dfa(inst.samples, mode, miner_options(inst.safety)).minimal_size();
        c.expect(n == min3dfa_sizes[i], inst.name + ": " + to_string(mode) + " gives " + std::to_string(n) +
                                            ", min3dfa gives " + std::to_string(min3dfa_sizes[i]));
      }
    }
    detail = std::to_string(instances.size()) + " instances x 3 modes";
  });

  return failed == 0 ? 0 : 1;
}
