#pragma once

// Helpers and brute-force oracles shared by the test binaries. Nothing here
// calls the encoder or the incremental construction.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "sepdfa/automata.hpp"
#include "sepdfa/sample_store.hpp"
#include "sepdfa/solver_bridge.hpp"

#ifndef SEPDFA_TEST_SOLVER
#define SEPDFA_TEST_SOLVER "cadical"
#endif

namespace sepdfa::test {

inline SolverOptions solver() {
  SolverOptions options;
  options.command = {SEPDFA_TEST_SOLVER};
  return options;
}

// "0110" -> {0,1,1,0}; one digit per letter.
inline Word W(std::string_view digits) {
  Word w;
  for (char c : digits) w.push_back(static_cast<Letter>(c - '0'));
  return w;
}

inline SampleSet make_set(std::size_t alphabet, std::initializer_list<std::string_view> pos,
                          std::initializer_list<std::string_view> neg) {
  SampleSet s;
  s.alphabet_size = alphabet;
  for (auto w : pos) s.add(W(w), Label::Positive);
  for (auto w : neg) s.add(W(w), Label::Negative);
  return s;
}

inline SampleSet random_sample_set(std::mt19937_64& rng, std::size_t max_alphabet, std::size_t max_len,
                                   std::size_t max_samples) {
  std::uniform_int_distribution<std::size_t> alpha(1, max_alphabet), count(0, max_samples), len(0, max_len);
  SampleSet s;
  s.alphabet_size = alpha(rng);
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(s.alphabet_size - 1));
  std::bernoulli_distribution coin(0.5);
  const std::size_t target = count(rng);
  for (std::size_t i = 0; i < target; ++i) {
    Word w(len(rng));
    for (auto& a : w) a = letter(rng);
    if (s.positives.contains(w) || s.negatives.contains(w)) continue;
    s.add(std::move(w), coin(rng) ? Label::Positive : Label::Negative);
  }
  return s;
}

inline std::size_t prefix_count(const SampleSet& s) {
  std::set<Word> prefixes{Word{}};
  for (const auto* words : {&s.positives, &s.negatives})
    for (const auto& w : *words)
      for (std::size_t k = 0; k <= w.size(); ++k) prefixes.insert(Word(w.begin(), w.begin() + k));
  return prefixes.size();
}

// Calls `visit` on every complete DFA with n states over k letters (state 0
// initial) until it returns true. Returns whether some call returned true.
inline bool for_each_dfa(std::size_t n, std::size_t k, const std::function<bool(const LearnedDFA&)>& visit) {
  LearnedDFA d;
  d.alphabet_size = k;
  d.delta.assign(n * k, 0);
  d.accepting.assign(n, false);
  const std::uint64_t acceptance_masks = std::uint64_t{1} << n;
  while (true) {
    for (std::uint64_t mask = 0; mask < acceptance_masks; ++mask) {
      for (std::size_t q = 0; q < n; ++q) d.accepting[q] = (mask >> q) & 1;
      if (visit(d)) return true;
    }
    std::size_t pos = 0;
    while (pos < d.delta.size() && ++d.delta[pos] == n) d.delta[pos++] = 0;
    if (pos == d.delta.size()) return false;
  }
}

inline bool separates(const LearnedDFA& d, const SampleSet& s) {
  for (const auto& w : s.positives)
    if (!d.accepts(w)) return false;
  for (const auto& w : s.negatives)
    if (d.accepts(w)) return false;
  return true;
}

// Brute force: is there a complete n-state DFA separating s?
inline bool separating_dfa_exists(const SampleSet& s, std::size_t n) {
  return for_each_dfa(n, s.alphabet_size, [&](const LearnedDFA& d) { return separates(d, s); });
}

// Residual-based minimality check on an acyclic 3DFA: two distinct states are
// equivalent iff every continuation gets the same label from both, a missing
// run counting as don't-care.
inline bool all_states_distinguishable(const ThreeValuedDFA& a) {
  const std::size_t n = a.state_count();
  // Future of a state as the set of (word, status) reachable from it; the
  // automaton is acyclic so this terminates.
  std::function<void(StateId, Word&, std::set<std::pair<Word, int>>&)> collect =
      [&](StateId q, Word& prefix, std::set<std::pair<Word, int>>& out) {
        if (a.status(q) != Status::DontCare) out.insert({prefix, static_cast<int>(a.status(q))});
        for (Letter c = 0; c < a.alphabet_size(); ++c)
          if (StateId t = a.successor(q, c); t != kNoState) {
            prefix.push_back(c);
            collect(t, prefix, out);
            prefix.pop_back();
          }
      };
  std::vector<std::set<std::pair<Word, int>>> futures(n);
  for (StateId q = 0; q < n; ++q) {
    Word prefix;
    collect(q, prefix, futures[q]);
  }
  for (StateId p = 0; p < n; ++p)
    for (StateId q = p + 1; q < n; ++q)
      if (futures[p] == futures[q]) return false;
  return true;
}

}  // namespace sepdfa::test
