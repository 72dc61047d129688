#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepdfa/sample_store.hpp"
#include "sepdfa/word.hpp"

namespace sepdfa {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

enum class Status : std::uint8_t { Accepting, Rejecting, DontCare };

Label to_label(Status s);

/// Partial deterministic automaton whose states are accepting, rejecting or
/// don't-care. Missing transitions mean the word has no run.
///
/// Transitions live in one dense row-major table (state * alphabet + letter),
/// state ids are dense and assigned at creation.
class ThreeValuedDFA {
 public:
  ThreeValuedDFA() = default;
  explicit ThreeValuedDFA(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t state_count() const { return status_.size(); }
  StateId initial() const { return initial_; }
  void set_initial(StateId q) { initial_ = q; }

  StateId add_state(Status status = Status::DontCare);
  Status status(StateId q) const { return status_[q]; }
  void set_status(StateId q, Status s) { status_[q] = s; }

  StateId successor(StateId q, Letter a) const { return delta_[q * alphabet_size_ + a]; }
  void set_successor(StateId q, Letter a, StateId target) { delta_[q * alphabet_size_ + a] = target; }
  std::span<const StateId> row(StateId q) const {
    return {delta_.data() + q * alphabet_size_, alphabet_size_};
  }
  bool has_children(StateId q) const;

 private:
  std::size_t alphabet_size_ = 0;
  StateId initial_ = 0;
  std::vector<Status> status_;
  std::vector<StateId> delta_;
};

/// Minimal acceptors for S+ and S- side by side. The negative half's state
/// ids are offset by the positive half's size in the shared namespace; its
/// accepting states are the rejecting states of the combination.
struct DoubleDFA {
  ThreeValuedDFA positive;
  ThreeValuedDFA negative;

  std::size_t state_count() const { return positive.state_count() + negative.state_count(); }
  StateId negative_offset() const { return static_cast<StateId>(positive.state_count()); }
};

/// Flattened view consumed by the SAT encoder: one transition table, a set of
/// initial states, and a three-way status per state. A 3DFA has one initial
/// state, a double DFA two.
struct Acceptor {
  std::size_t alphabet_size = 0;
  std::vector<StateId> initials;
  std::vector<Status> status;
  std::vector<StateId> delta;  // state * alphabet_size + letter, kNoState when absent

  std::size_t state_count() const { return status.size(); }
  StateId successor(StateId q, Letter a) const { return delta[q * alphabet_size + a]; }
};

Acceptor as_acceptor(const ThreeValuedDFA& a);
Acceptor as_acceptor(const DoubleDFA& d);

/// Complete DFA with state 0 initial; the artifact the miner produces.
struct LearnedDFA {
  std::size_t alphabet_size = 0;
  std::vector<StateId> delta;  // n * alphabet_size entries, all < n
  std::vector<bool> accepting;

  std::size_t state_count() const { return accepting.size(); }
  StateId successor(StateId q, Letter a) const { return delta[q * alphabet_size + a]; }
  bool accepts(const Word& w) const;

  friend bool operator==(const LearnedDFA&, const LearnedDFA&) = default;
};

/// Label of w, or nullopt when the run leaves the transition table.
std::optional<Label> run(const ThreeValuedDFA& a, const Word& w);

/// Prefix tree: one state per prefix of S, created in sorted-prefix order.
ThreeValuedDFA build_apta(const OrderedSampleSet& s);

/// Bottom-up signature minimisation of an acyclic 3DFA. Throws InternalError
/// when `a` has a cycle.
ThreeValuedDFA minimize_acyclic(const ThreeValuedDFA& a);

struct IncrementalStats {
  std::size_t peak_live_states = 0;
};

/// Builds the minimal 3DFA of `s` on the fly, never materialising the prefix
/// tree. Relies on the lex order guaranteed by OrderedSampleSet.
ThreeValuedDFA build_min_3dfa_incremental(const OrderedSampleSet& s, IncrementalStats* stats = nullptr);

DoubleDFA build_ddfa(const OrderedSampleSet& s);
DoubleDFA build_ddfa(const SampleSet& s);

/// Renumbers reachable states breadth-first from the initial state, letters
/// ascending. Unreachable states are dropped.
ThreeValuedDFA canonical_form(const ThreeValuedDFA& a);
bool isomorphic(const ThreeValuedDFA& a, const ThreeValuedDFA& b);

/// Totalises a 3DFA: missing transitions go to a fresh rejecting sink and
/// don't-care states become rejecting. The initial state becomes state 0.
LearnedDFA complete_to_dfa(const ThreeValuedDFA& a);

// Text dump: "states <n> initial <i> alphabet <k>", then "state <id> <A|R|D>"
// per state and "trans <src> <letter> <dst>" per defined transition.
void write_dump(std::ostream& out, const ThreeValuedDFA& a);
void write_dump(std::ostream& out, const LearnedDFA& d);
std::string dump_string(const ThreeValuedDFA& a);
std::string dump_string(const LearnedDFA& d);
ThreeValuedDFA read_dump(std::istream& in);
/// Reads a dump that must describe a complete DFA with initial state 0 and no
/// don't-care states.
LearnedDFA read_learned_dump(std::istream& in);
LearnedDFA read_learned_dump_file(const std::string& path);

}  // namespace sepdfa
