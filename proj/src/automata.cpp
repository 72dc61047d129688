#include "sepdfa/automata.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <queue>
#include <sstream>

#include "sepdfa/error.hpp"
#include "signature.hpp"

namespace sepdfa {

Label to_label(Status s) {
  switch (s) {
    case Status::Accepting: return Label::Positive;
    case Status::Rejecting: return Label::Negative;
    case Status::DontCare: return Label::DontCare;
  }
  return Label::DontCare;
}

StateId ThreeValuedDFA::add_state(Status status) {
  status_.push_back(status);
  delta_.resize(delta_.size() + alphabet_size_, kNoState);
  return static_cast<StateId>(status_.size() - 1);
}

bool ThreeValuedDFA::has_children(StateId q) const {
  auto r = row(q);
  return std::any_of(r.begin(), r.end(), [](StateId t) { return t != kNoState; });
}

Acceptor as_acceptor(const ThreeValuedDFA& a) {
  Acceptor out;
  out.alphabet_size = a.alphabet_size();
  if (a.state_count() == 0) return out;
  out.initials = {a.initial()};
  out.status.reserve(a.state_count());
  for (StateId q = 0; q < a.state_count(); ++q) {
    out.status.push_back(a.status(q));
    auto r = a.row(q);
    out.delta.insert(out.delta.end(), r.begin(), r.end());
  }
  return out;
}

Acceptor as_acceptor(const DoubleDFA& d) {
  Acceptor out;
  out.alphabet_size = d.positive.alphabet_size();
  const StateId offset = d.negative_offset();
  out.initials = {d.positive.initial(), d.negative.initial() + offset};
  for (StateId q = 0; q < d.positive.state_count(); ++q) {
    out.status.push_back(d.positive.status(q) == Status::Accepting ? Status::Accepting : Status::DontCare);
    auto r = d.positive.row(q);
    out.delta.insert(out.delta.end(), r.begin(), r.end());
  }
  for (StateId q = 0; q < d.negative.state_count(); ++q) {
    out.status.push_back(d.negative.status(q) == Status::Accepting ? Status::Rejecting : Status::DontCare);
    for (StateId t : d.negative.row(q)) out.delta.push_back(t == kNoState ? kNoState : t + offset);
  }
  return out;
}

bool LearnedDFA::accepts(const Word& w) const {
  StateId q = 0;
  for (Letter a : w) q = successor(q, a);
  return accepting[q];
}

std::optional<Label> run(const ThreeValuedDFA& a, const Word& w) {
  StateId q = a.initial();
  for (Letter letter : w) {
    if (letter >= a.alphabet_size()) return std::nullopt;
    q = a.successor(q, letter);
    if (q == kNoState) return std::nullopt;
  }
  return to_label(a.status(q));
}

ThreeValuedDFA build_apta(const OrderedSampleSet& s) {
  ThreeValuedDFA apta(s.alphabet_size());
  apta.set_initial(apta.add_state());
  for (const auto& [word, label] : s.entries()) {
    StateId q = apta.initial();
    for (Letter a : word) {
      StateId next = apta.successor(q, a);
      if (next == kNoState) {
        next = apta.add_state();
        apta.set_successor(q, a, next);
      }
      q = next;
    }
    apta.set_status(q, label == Label::Positive ? Status::Accepting : Status::Rejecting);
  }
  return apta;
}

namespace {

// States in an order where every state follows all of its successors.
// Throws on a cycle among the states reachable from anywhere.
std::vector<StateId> reverse_topological_order(const ThreeValuedDFA& a) {
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(a.state_count(), kWhite);
  std::vector<StateId> order;
  order.reserve(a.state_count());
  std::vector<std::pair<StateId, Letter>> stack;
  for (StateId root = 0; root < a.state_count(); ++root) {
    if (colour[root] != kWhite) continue;
    stack.push_back({root, 0});
    colour[root] = kGrey;
    while (!stack.empty()) {
      auto& [q, next_letter] = stack.back();
      if (next_letter == a.alphabet_size()) {
        colour[q] = kBlack;
        order.push_back(q);
        stack.pop_back();
        continue;
      }
      StateId t = a.successor(q, next_letter++);
      if (t == kNoState || colour[t] == kBlack) continue;
      if (colour[t] == kGrey) throw InternalError("minimize_acyclic: automaton contains a cycle");
      colour[t] = kGrey;
      stack.push_back({t, 0});
    }
  }
  return order;
}

}  // namespace

ThreeValuedDFA minimize_acyclic(const ThreeValuedDFA& a) {
  ThreeValuedDFA out(a.alphabet_size());
  if (a.state_count() == 0) return out;
  std::vector<StateId> rep(a.state_count(), kNoState);
  detail::Register reg;
  std::vector<StateId> successors(a.alphabet_size());
  for (StateId q : reverse_topological_order(a)) {
    for (Letter c = 0; c < a.alphabet_size(); ++c) {
      StateId t = a.successor(q, c);
      successors[c] = t == kNoState ? kNoState : rep[t];
    }
    auto [it, fresh] = reg.try_emplace(detail::signature_of(a.status(q), successors), 0);
    if (fresh) {
      it->second = out.add_state(a.status(q));
      for (Letter c = 0; c < a.alphabet_size(); ++c) out.set_successor(it->second, c, successors[c]);
    }
    rep[q] = it->second;
  }
  out.set_initial(rep[a.initial()]);
  return canonical_form(out);
}

DoubleDFA build_ddfa(const OrderedSampleSet& s) {
  return {build_min_3dfa_incremental(s.only(Label::Positive)),
          build_min_3dfa_incremental(s.only(Label::Negative))};
}

DoubleDFA build_ddfa(const SampleSet& s) { return build_ddfa(sort_and_validate(s)); }

ThreeValuedDFA canonical_form(const ThreeValuedDFA& a) {
  ThreeValuedDFA out(a.alphabet_size());
  if (a.state_count() == 0) return out;
  std::vector<StateId> renamed(a.state_count(), kNoState);
  std::vector<StateId> order{a.initial()};
  renamed[a.initial()] = 0;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (StateId t : a.row(order[head]))
      if (t != kNoState && renamed[t] == kNoState) {
        renamed[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
  for (StateId q : order) out.add_state(a.status(q));
  for (StateId i = 0; i < order.size(); ++i)
    for (Letter c = 0; c < a.alphabet_size(); ++c) {
      StateId t = a.successor(order[i], c);
      out.set_successor(i, c, t == kNoState ? kNoState : renamed[t]);
    }
  out.set_initial(0);
  return out;
}

bool isomorphic(const ThreeValuedDFA& a, const ThreeValuedDFA& b) {
  if (a.alphabet_size() != b.alphabet_size()) return false;
  auto ca = canonical_form(a);
  auto cb = canonical_form(b);
  if (ca.state_count() != cb.state_count()) return false;
  for (StateId q = 0; q < ca.state_count(); ++q) {
    if (ca.status(q) != cb.status(q)) return false;
    auto ra = ca.row(q);
    auto rb = cb.row(q);
    if (!std::equal(ra.begin(), ra.end(), rb.begin())) return false;
  }
  return true;
}

LearnedDFA complete_to_dfa(const ThreeValuedDFA& a) {
  auto canon = canonical_form(a);  // initial becomes 0
  const std::size_t k = canon.alphabet_size();
  const auto sink = static_cast<StateId>(canon.state_count());
  LearnedDFA d;
  d.alphabet_size = k;
  d.accepting.assign(canon.state_count() + 1, false);
  d.delta.assign((canon.state_count() + 1) * k, sink);
  for (StateId q = 0; q < canon.state_count(); ++q) {
    d.accepting[q] = canon.status(q) == Status::Accepting;
    for (Letter c = 0; c < k; ++c)
      if (StateId t = canon.successor(q, c); t != kNoState) d.delta[q * k + c] = t;
  }
  return d;
}

namespace {

char status_letter(Status s) {
  switch (s) {
    case Status::Accepting: return 'A';
    case Status::Rejecting: return 'R';
    case Status::DontCare: return 'D';
  }
  return 'D';
}

}  // namespace

void write_dump(std::ostream& out, const ThreeValuedDFA& a) {
  out << "states " << a.state_count() << " initial " << a.initial() << " alphabet " << a.alphabet_size()
      << '\n';
  for (StateId q = 0; q < a.state_count(); ++q) out << "state " << q << ' ' << status_letter(a.status(q)) << '\n';
  for (StateId q = 0; q < a.state_count(); ++q)
    for (Letter c = 0; c < a.alphabet_size(); ++c)
      if (StateId t = a.successor(q, c); t != kNoState) out << "trans " << q << ' ' << c << ' ' << t << '\n';
}

void write_dump(std::ostream& out, const LearnedDFA& d) {
  out << "states " << d.state_count() << " initial 0 alphabet " << d.alphabet_size << '\n';
  for (StateId q = 0; q < d.state_count(); ++q) out << "state " << q << ' ' << (d.accepting[q] ? 'A' : 'R') << '\n';
  for (StateId q = 0; q < d.state_count(); ++q)
    for (Letter c = 0; c < d.alphabet_size; ++c) out << "trans " << q << ' ' << c << ' ' << d.successor(q, c) << '\n';
}

std::string dump_string(const ThreeValuedDFA& a) {
  std::ostringstream out;
  write_dump(out, a);
  return out.str();
}

std::string dump_string(const LearnedDFA& d) {
  std::ostringstream out;
  write_dump(out, d);
  return out.str();
}

ThreeValuedDFA read_dump(std::istream& in) {
  std::string line;
  auto fail = [](const std::string& why) -> ThreeValuedDFA { throw ParseError("automaton dump: " + why); };
  if (!std::getline(in, line)) return fail("empty input");
  std::istringstream header(line);
  std::string kw_states, kw_initial, kw_alphabet;
  std::size_t n = 0, initial = 0, k = 0;
  if (!(header >> kw_states >> n >> kw_initial >> initial >> kw_alphabet >> k) || kw_states != "states" ||
      kw_initial != "initial" || kw_alphabet != "alphabet")
    return fail("bad header '" + line + "'");
  if (n == 0 || initial >= n) return fail("initial state out of range");
  ThreeValuedDFA a(k);
  for (std::size_t q = 0; q < n; ++q) a.add_state();
  a.set_initial(static_cast<StateId>(initial));
  std::vector<bool> seen(n, false);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    if (kind == "state") {
      std::size_t q = 0;
      std::string s;
      if (!(fields >> q >> s) || q >= n || s.size() != 1) return fail("bad line '" + line + "'");
      switch (s[0]) {
        case 'A': a.set_status(static_cast<StateId>(q), Status::Accepting); break;
        case 'R': a.set_status(static_cast<StateId>(q), Status::Rejecting); break;
        case 'D': a.set_status(static_cast<StateId>(q), Status::DontCare); break;
        default: return fail("bad status in '" + line + "'");
      }
      seen[q] = true;
    } else if (kind == "trans") {
      std::size_t src = 0, letter = 0, dst = 0;
      if (!(fields >> src >> letter >> dst) || src >= n || dst >= n || letter >= k)
        return fail("bad line '" + line + "'");
      if (a.successor(static_cast<StateId>(src), static_cast<Letter>(letter)) != kNoState)
        return fail("duplicate transition in '" + line + "'");
      a.set_successor(static_cast<StateId>(src), static_cast<Letter>(letter), static_cast<StateId>(dst));
    } else {
      return fail("unknown line '" + line + "'");
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return fail("missing state line");
  return a;
}

LearnedDFA read_learned_dump(std::istream& in) {
  auto a = read_dump(in);
  if (a.initial() != 0) throw ParseError("automaton dump: learned DFA must have initial state 0");
  LearnedDFA d;
  d.alphabet_size = a.alphabet_size();
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (a.status(q) == Status::DontCare) throw ParseError("automaton dump: learned DFA has a don't-care state");
    d.accepting.push_back(a.status(q) == Status::Accepting);
    for (StateId t : a.row(q)) {
      if (t == kNoState) throw ParseError("automaton dump: learned DFA is not complete");
      d.delta.push_back(t);
    }
  }
  return d;
}

LearnedDFA read_learned_dump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_learned_dump(in);
}

}  // namespace sepdfa
