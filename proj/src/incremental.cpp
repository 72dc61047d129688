// On-the-fly construction of the minimal 3DFA of a lex-ordered sample set.
//
// Samples arrive in lex order, so once a new word leaves the path of the
// previous word, every state below the branching point on that old path is
// final: no later word can reach it. Those states are merged into the
// register bottom-up (replace_or_register), the new suffix is appended, and
// the path of the last word is merged once the input is exhausted.

#include <algorithm>
#include <string>

#include "sepdfa/automata.hpp"
#include "sepdfa/error.hpp"
#include "signature.hpp"

namespace sepdfa {
namespace {

class IncrementalBuilder {
 public:
  explicit IncrementalBuilder(std::size_t alphabet_size) : k_(alphabet_size) { initial_ = new_state(); }

  void add(const Word& u, Label label) {
    const Status status = label == Label::Positive ? Status::Accepting : Status::Rejecting;
    if (u.empty()) {
      status_[initial_] = status;
      return;
    }
    std::size_t x = 0;
    StateId p = common_prefix(u, x);
    if (has_children(p)) replace_or_register(p);
    add_suffix(p, u, x, status);
  }

  ThreeValuedDFA finish(IncrementalStats* stats) {
    if (has_children(initial_)) replace_or_register(initial_);
    if (stats) stats->peak_live_states = peak_;
    return compact();
  }

 private:
  StateId new_state() {
    StateId q;
    if (!free_.empty()) {
      q = free_.back();
      free_.pop_back();
      status_[q] = Status::DontCare;
      std::fill_n(delta_.begin() + q * k_, k_, kNoState);
    } else {
      q = static_cast<StateId>(status_.size());
      status_.push_back(Status::DontCare);
      delta_.resize(delta_.size() + k_, kNoState);
    }
    peak_ = std::max(peak_, ++live_);
    return q;
  }

  void release(StateId q) {
    free_.push_back(q);
    --live_;
  }

  StateId& succ(StateId q, Letter a) { return delta_[q * k_ + a]; }

  bool has_children(StateId q) const {
    return std::any_of(delta_.begin() + q * k_, delta_.begin() + (q + 1) * k_,
                       [](StateId t) { return t != kNoState; });
  }

  // Successor over the largest letter that has one; the child most recently
  // added under lex order.
  StateId& last_child(StateId q) {
    for (std::size_t a = k_; a-- > 0;)
      if (succ(q, static_cast<Letter>(a)) != kNoState) return succ(q, static_cast<Letter>(a));
    throw InternalError("last_child on a leaf");
  }

  // Longest prefix of u with a run; its length goes to `length`.
  StateId common_prefix(const Word& u, std::size_t& length) {
    StateId q = initial_;
    length = 0;
    while (length < u.size()) {
      StateId t = succ(q, u[length]);
      if (t == kNoState) break;
      q = t;
      ++length;
    }
    if (length == u.size()) throw InternalError("sample [" + to_string(u) + "] repeats or is out of order");
    return q;
  }

  void replace_or_register(StateId p) {
    StateId& child = last_child(p);
    const StateId r = child;
    if (has_children(r)) replace_or_register(r);
    auto sig = detail::signature_of(status_[r], {delta_.data() + r * k_, k_});
    auto [it, fresh] = reg_.try_emplace(std::move(sig), r);
    if (!fresh) {
      child = it->second;
      release(r);
    }
  }

  void add_suffix(StateId p, const Word& u, std::size_t from, Status status) {
    for (std::size_t i = from; i < u.size(); ++i) {
      StateId q = new_state();
      succ(p, u[i]) = q;
      p = q;
    }
    status_[p] = status;
  }

  ThreeValuedDFA compact() const {
    ThreeValuedDFA out(k_);
    std::vector<StateId> renamed(status_.size(), kNoState);
    std::vector<StateId> order{initial_};
    renamed[initial_] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::size_t a = 0; a < k_; ++a)
        if (StateId t = delta_[order[head] * k_ + a]; t != kNoState && renamed[t] == kNoState) {
          renamed[t] = static_cast<StateId>(order.size());
          order.push_back(t);
        }
    if (order.size() != live_)
      throw InternalError("incremental construction left " + std::to_string(live_ - order.size()) +
                          " unreachable states");
    for (StateId q : order) out.add_state(status_[q]);
    for (StateId i = 0; i < order.size(); ++i)
      for (std::size_t a = 0; a < k_; ++a)
        if (StateId t = delta_[order[i] * k_ + a]; t != kNoState)
          out.set_successor(i, static_cast<Letter>(a), renamed[t]);
    out.set_initial(0);
    return out;
  }

  std::size_t k_;
  StateId initial_ = 0;
  std::vector<Status> status_;
  std::vector<StateId> delta_;
  std::vector<StateId> free_;
  detail::Register reg_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

}  // namespace

ThreeValuedDFA build_min_3dfa_incremental(const OrderedSampleSet& s, IncrementalStats* stats) {
  IncrementalBuilder builder(s.alphabet_size());
  for (const auto& [word, label] : s.entries()) builder.add(word, label);
  return builder.finish(stats);
}

}  // namespace sepdfa
