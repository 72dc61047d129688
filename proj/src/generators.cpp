#include "sepdfa/generators.hpp"

#include <algorithm>
#include <iostream>
#include <random>

#include "sepdfa/error.hpp"

namespace sepdfa {

Label classify_parity_word(const Word& w, std::size_t colours) {
  std::vector<std::size_t> last(colours, static_cast<std::size_t>(-1));
  bool winning = false, losing = false;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Letter c = w[j];
    if (c >= colours) throw ParseError("colour " + std::to_string(c) + " outside 0.." + std::to_string(colours - 1));
    if (last[c] != static_cast<std::size_t>(-1)) {
      Letter top = 0;
      for (std::size_t i = last[c] + 1; i <= j; ++i) top = std::max(top, w[i]);
      (top % 2 == 0 ? winning : losing) = true;
    }
    last[c] = j;
  }
  if (winning && !losing) return Label::Positive;
  if (losing && !winning) return Label::Negative;
  return Label::DontCare;
}

SampleSet gen_parity_samples(const ParityConfig& cfg, std::uint64_t budget) {
  if (cfg.colours < 2) throw Error("parity samples need at least two colours");
  if (cfg.length <= cfg.colours) throw Error("parity word length must exceed the colour count");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cfg.length; ++i) {
    if (total > budget / cfg.colours) throw Error("colours^length exceeds the enumeration budget");
    total *= cfg.colours;
  }
  SampleSet set;
  set.alphabet_size = cfg.colours;
  // Odometer over words of exactly cfg.length letters, in lex order, so each
  // insert lands at the end of its set.
  Word w(cfg.length, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    switch (classify_parity_word(w, cfg.colours)) {
      case Label::Positive: set.positives.insert(set.positives.end(), w); break;
      case Label::Negative: set.negatives.insert(set.negatives.end(), w); break;
      case Label::DontCare: break;
    }
    for (std::size_t k = cfg.length; k-- > 0;) {
      if (++w[k] < cfg.colours) break;
      w[k] = 0;
    }
  }
  return set;
}

LearnedDFA gen_random_dfa(std::size_t n, std::size_t alphabet_size, std::uint64_t seed) {
  if (n == 0) throw Error("random DFA needs at least one state");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(n - 1));
  std::bernoulli_distribution coin(0.5);
  LearnedDFA d;
  d.alphabet_size = alphabet_size;
  while (true) {
    d.delta.resize(n * alphabet_size);
    d.accepting.assign(n, false);
    for (auto& t : d.delta) t = target(rng);
    for (std::size_t q = 0; q < n; ++q) d.accepting[q] = coin(rng);

    std::vector<bool> seen(n, false);
    std::vector<StateId> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t a = 0; a < alphabet_size; ++a)
        if (StateId t = d.successor(queue[head], static_cast<Letter>(a)); !seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
    if (queue.size() == n) return d;
  }
}

SampleSet gen_samples_from_dfa(const LearnedDFA& d, std::size_t count, std::size_t max_len, std::uint64_t seed) {
  if (count == 0) throw Error("sample count must be positive");
  // Number of words of length <= max_len, saturating.
  std::uint64_t pool = 0, layer = 1;
  for (std::size_t len = 0; len <= max_len && pool < count; ++len) {
    pool += layer;
    layer = d.alphabet_size == 0 ? 0 : (layer > (~0ULL) / d.alphabet_size ? ~0ULL : layer * d.alphabet_size);
  }
  if (pool < count) throw Error("only " + std::to_string(pool) + " distinct words of length <= " +
                                std::to_string(max_len) + " exist");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(0, max_len);
  std::uniform_int_distribution<Letter> letter(0, d.alphabet_size ? static_cast<Letter>(d.alphabet_size - 1) : 0);
  SampleSet set;
  set.alphabet_size = d.alphabet_size;
  while (set.size() < count) {
    Word w(length(rng));
    if (d.alphabet_size == 0) w.clear();
    for (auto& a : w) a = letter(rng);
    if (set.positives.contains(w) || set.negatives.contains(w)) continue;
    set.add(w, d.accepts(w) ? Label::Positive : Label::Negative);
  }
  return set;
}

ParityStats acceptor_stats(const SampleSet& s, bool with_apta) {
  ParityStats stats;
  stats.positives = s.positives.size();
  stats.negatives = s.negatives.size();
  const auto ordered = sort_and_validate(s);
  if (with_apta) stats.apta = build_apta(ordered).state_count();
  stats.min3dfa = build_min_3dfa_incremental(ordered).state_count();
  stats.ddfa = build_ddfa(ordered).state_count();
  return stats;
}

void write_stats_line(std::ostream& out, const ParityStats& s) {
  out << s.colours << '\t' << s.length << '\t' << s.positives << '\t' << s.negatives << '\t' << s.apta << '\t'
      << s.min3dfa << '\t' << s.ddfa << '\n';
}

}  // namespace sepdfa
