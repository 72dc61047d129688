#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "sepdfa/automata.hpp"
#include "sepdfa/sample_store.hpp"

namespace sepdfa {

/// Colours 0..colours-1 and a word length strictly above the colour count, so
/// every word of that length repeats some colour.
struct ParityConfig {
  std::size_t colours = 2;
  std::size_t length = 3;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// A repeated colour closes a cycle: the letters strictly after its previous
/// occurrence up to and including the repeat. The cycle is winning when its
/// largest colour is even. Returns + when there are cycles and all win, -
/// when all lose, ? for mixed or cycle-free words.
/// Throws ParseError when a letter is not a colour.
Label classify_parity_word(const Word& w, std::size_t colours);

/// Classifies every word of exactly cfg.length letters and keeps the labelled
/// ones. Throws Error when colours^length exceeds `budget` or the config is
/// invalid (colours < 2 or length <= colours).
SampleSet gen_parity_samples(const ParityConfig& cfg, std::uint64_t budget = kDefaultEnumerationBudget);

/// Uniformly random transitions and acceptance bits, redrawn until all n
/// states are reachable from state 0. Deterministic for a given seed.
LearnedDFA gen_random_dfa(std::size_t n, std::size_t alphabet_size, std::uint64_t seed);

/// `count` distinct words, lengths uniform on [0, max_len], letters uniform,
/// labelled by `d`. Throws Error when fewer than `count` words exist.
SampleSet gen_samples_from_dfa(const LearnedDFA& d, std::size_t count, std::size_t max_len, std::uint64_t seed);

struct ParityStats {
  std::size_t colours = 0, length = 0;
  std::size_t positives = 0, negatives = 0;
  std::size_t apta = 0, min3dfa = 0, ddfa = 0;
};

/// Sizes of the three acceptors of a sample set. `with_apta` = false skips
/// building the prefix tree (apta is reported as 0).
ParityStats acceptor_stats(const SampleSet& s, bool with_apta = true);

/// colours, length, |S+|, |S-|, apta, min3dfa, ddfa separated by tabs.
void write_stats_line(std::ostream& out, const ParityStats& stats);

}  // namespace sepdfa
