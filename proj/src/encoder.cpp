#include "sepdfa/encoder.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "sepdfa/error.hpp"

namespace sepdfa {

void CnfFormula::add_clause(std::span<const int> literals) {
  if (literals.empty()) throw InternalError("empty clause");
  for (int lit : literals)
    if (lit == 0 || std::abs(lit) > variable_count_)
      throw InternalError("literal " + std::to_string(lit) + " outside 1.." + std::to_string(variable_count_));
  starts_.push_back(literals_.size());
  literals_.insert(literals_.end(), literals.begin(), literals.end());
}

void CnfFormula::append(const CnfFormula& other) {
  if (other.variable_count_ > variable_count_) variable_count_ = other.variable_count_;
  for (std::size_t i = 0; i < other.clause_count(); ++i) add_clause(other.clause(i));
}

bool CnfFormula::satisfied_by(const std::vector<bool>& model) const {
  if (model.size() < static_cast<std::size_t>(variable_count_) + 1) return false;
  for (std::size_t c = 0; c < clause_count(); ++c) {
    bool sat = false;
    for (int lit : clause(c))
      if (model[std::abs(lit)] == (lit > 0)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

std::string to_string(const VarRef& ref) {
  std::ostringstream out;
  switch (ref.kind) {
    case VarKind::Transition: out << "e " << ref.x << ' ' << ref.y << ' ' << ref.z; break;
    case VarKind::Final: out << "f " << ref.x; break;
    case VarKind::Product: out << "d " << ref.x << ' ' << ref.y; break;
    case VarKind::Reach: out << "t " << ref.x << ' ' << ref.y; break;
    case VarKind::Parent: out << "p " << ref.x << ' ' << ref.y; break;
    case VarKind::Edge: out << "m " << ref.x << ' ' << ref.y << ' ' << ref.z; break;
  }
  return out.str();
}

VarMap::VarMap(std::size_t n, std::size_t alphabet_size, std::size_t product_rows, bool symmetry_breaking)
    : n_(n), k_(alphabet_size), rows_(product_rows), sb_(symmetry_breaking) {
  const int pairs = sb_ ? static_cast<int>(n_ * (n_ - (n_ ? 1 : 0)) / 2) : 0;
  e_base_ = 1;
  f_base_ = e_base_ + static_cast<int>(n_ * k_ * n_);
  d_base_ = f_base_ + static_cast<int>(n_);
  t_base_ = d_base_ + static_cast<int>(rows_ * n_);
  p_base_ = t_base_ + pairs;
  m_base_ = p_base_ + pairs;
  total_ = m_base_ + pairs * static_cast<int>(k_) - 1;
}

int VarMap::pair_index(std::size_t i, std::size_t j) const {
  // Row-major over i < j: row i starts after sum_{r<i} (n-1-r) pairs.
  return static_cast<int>(i * n_ - i * (i + 1) / 2 + (j - i - 1));
}

VarRef VarMap::describe(int var) const {
  if (var < 1 || var > total_) throw InternalError("variable " + std::to_string(var) + " out of range");
  auto split_pair = [this](int idx) {
    std::size_t i = 0;
    while (idx >= static_cast<int>(n_ - 1 - i)) {
      idx -= static_cast<int>(n_ - 1 - i);
      ++i;
    }
    return std::pair<std::size_t, std::size_t>{i, i + 1 + static_cast<std::size_t>(idx)};
  };
  if (var < f_base_) {
    auto off = static_cast<std::size_t>(var - e_base_);
    return {VarKind::Transition, off / (k_ * n_), (off / n_) % k_, off % n_};
  }
  if (var < d_base_) return {VarKind::Final, static_cast<std::size_t>(var - f_base_)};
  if (var < t_base_) {
    auto off = static_cast<std::size_t>(var - d_base_);
    return {VarKind::Product, off / n_, off % n_};
  }
  if (var < p_base_) {
    auto [i, j] = split_pair(var - t_base_);
    return {VarKind::Reach, i, j};
  }
  if (var < m_base_) {
    auto [i, j] = split_pair(var - p_base_);
    return {VarKind::Parent, j, i};
  }
  const int off = var - m_base_;
  auto [i, j] = split_pair(off / static_cast<int>(k_));
  return {VarKind::Edge, i, static_cast<std::size_t>(off % static_cast<int>(k_)), j};
}

void encode_dfa_shape(const VarMap& vm, CnfFormula& out) {
  const std::size_t n = vm.n();
  std::vector<int> any;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < vm.alphabet_size(); ++a) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) out.add_clause({-vm.e(i, a, j), -vm.e(i, a, k)});
      any.clear();
      for (std::size_t j = 0; j < n; ++j) any.push_back(vm.e(i, a, j));
      out.add_clause(any);
    }
}

std::vector<StateId> product_rows(const Acceptor& acceptor) {
  std::vector<StateId> rows(acceptor.state_count(), kNoState);
  std::vector<StateId> queue;
  StateId next = 0;
  for (StateId q : acceptor.initials)
    if (rows[q] == kNoState) {
      rows[q] = next++;
      queue.push_back(q);
    }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Letter a = 0; a < acceptor.alphabet_size; ++a)
      if (StateId t = acceptor.successor(queue[head], a); t != kNoState && rows[t] == kNoState) {
        rows[t] = next++;
        queue.push_back(t);
      }
  return rows;
}

void encode_product(const VarMap& vm, const Acceptor& acceptor, std::span<const StateId> rows, CnfFormula& out) {
  const std::size_t n = vm.n();
  for (StateId q : acceptor.initials) out.add_clause({vm.d(rows[q], 0)});
  for (StateId p = 0; p < acceptor.state_count(); ++p) {
    if (rows[p] == kNoState) continue;
    const std::size_t row = rows[p];
    if (acceptor.status[p] != Status::DontCare) {
      const bool accepting = acceptor.status[p] == Status::Accepting;
      for (std::size_t i = 0; i < n; ++i) out.add_clause({-vm.d(row, i), accepting ? vm.f(i) : -vm.f(i)});
    }
    for (Letter a = 0; a < acceptor.alphabet_size; ++a) {
      const StateId target = acceptor.successor(p, a);
      if (target == kNoState) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.add_clause({-vm.d(row, i), -vm.e(i, a, j), vm.d(rows[target], j)});
    }
  }
}

void encode_symmetry_breaking(const VarMap& vm, bool safety_mode, CnfFormula& out) {
  if (!vm.symmetry_breaking()) throw InternalError("VarMap was allocated without BFS-tree variables");
  const std::size_t k = vm.alphabet_size();
  // In safety mode the sink n-1 takes no part in the BFS tree.
  const std::size_t nodes = safety_mode && vm.n() > 0 ? vm.n() - 1 : vm.n();
  std::vector<int> clause;

  // p(j,i) <=> t(i,j) & !t(k,j) for all k < i
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = i + 1; j < nodes; ++j) {
      out.add_clause({-vm.p(j, i), vm.t(i, j)});
      clause = {vm.p(j, i), -vm.t(i, j)};
      for (std::size_t q = 0; q < i; ++q) {
        out.add_clause({-vm.p(j, i), -vm.t(q, j)});
        clause.push_back(vm.t(q, j));
      }
      out.add_clause(clause);
    }

  // p(j,i) => !p(j+1,k) for k < i < j
  for (std::size_t q = 0; q < nodes; ++q)
    for (std::size_t i = q + 1; i < nodes; ++i)
      for (std::size_t j = i + 1; j + 1 < nodes; ++j) out.add_clause({-vm.p(j, i), -vm.p(j + 1, q)});

  // m(i,a,j) <=> e(i,a,j) & !e(i,b,j) for all b < a
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = i + 1; j < nodes; ++j)
      for (std::size_t a = 0; a < k; ++a) {
        out.add_clause({-vm.m(i, a, j), vm.e(i, a, j)});
        clause = {vm.m(i, a, j), -vm.e(i, a, j)};
        for (std::size_t b = 0; b < a; ++b) {
          out.add_clause({-vm.m(i, a, j), -vm.e(i, b, j)});
          clause.push_back(vm.e(i, b, j));
        }
        out.add_clause(clause);
      }

  // p(j,i) & p(j+1,i) & m(i,b,j) => !m(i,a,j+1) for a < b
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = i + 1; j + 1 < nodes; ++j)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t a = 0; a < b; ++a)
          out.add_clause({-vm.p(j, i), -vm.p(j + 1, i), -vm.m(i, b, j), -vm.m(i, a, j + 1)});

  // t(i,j) <=> OR_a e(i,a,j)
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = i + 1; j < nodes; ++j) {
      clause = {-vm.t(i, j)};
      for (std::size_t a = 0; a < k; ++a) {
        out.add_clause({vm.t(i, j), -vm.e(i, a, j)});
        clause.push_back(vm.e(i, a, j));
      }
      out.add_clause(clause);
    }

  // every non-initial node has a parent with a smaller index
  for (std::size_t j = 1; j < nodes; ++j) {
    clause.clear();
    for (std::size_t i = 0; i < j; ++i) clause.push_back(vm.p(j, i));
    out.add_clause(clause);
  }
}

void encode_parity_constraints(const VarMap& vm, std::size_t colours, CnfFormula& out) {
  const std::size_t n = vm.n();
  if (n < 2) throw InternalError("parity constraints need at least two states");
  if (colours < 2 || colours != vm.alphabet_size())
    throw InternalError("parity constraints need alphabet size == colours >= 2");
  const std::size_t top = colours - 1;
  const std::size_t sink = n - 1;
  auto opponent = [top](std::size_t a) { return a % 2 != top % 2; };

  // state 0 loops on colours with the parity of the top colour
  for (std::size_t a = 0; a < colours; ++a)
    if (!opponent(a)) out.add_clause({vm.e(0, a, 0)});

  // an opponent colour moves state 0 strictly between 0 and the sink
  std::vector<int> clause;
  for (std::size_t a = 0; a < colours; ++a) {
    if (!opponent(a)) continue;
    clause.clear();
    for (std::size_t i = 1; i < sink; ++i) clause.push_back(vm.e(0, a, i));
    if (clause.empty()) {
      // No state lies strictly between 0 and n-1.
      out.add_clause({vm.e(0, a, 0)});
      out.add_clause({-vm.e(0, a, 0)});
    } else {
      out.add_clause(clause);
    }
  }

  // only opponent colours may enter the sink
  for (std::size_t i = 0; i < sink; ++i)
    for (std::size_t a = 0; a < colours; ++a)
      if (!opponent(a)) out.add_clause({-vm.e(i, a, sink)});

  // the top colour resets every non-sink state
  for (std::size_t i = 0; i < sink; ++i) out.add_clause({vm.e(i, top, 0)});

  // the sink is absorbing
  for (std::size_t a = 0; a < colours; ++a) out.add_clause({vm.e(sink, a, sink)});

  // no self-loops on opponent colours outside the sink
  for (std::size_t i = 0; i < sink; ++i)
    for (std::size_t a = 0; a < colours; ++a)
      if (opponent(a)) out.add_clause({-vm.e(i, a, i)});

  // safety (only the sink rejects) for an even top colour, co-safety otherwise
  const bool safety = top % 2 == 0;
  for (std::size_t i = 0; i < sink; ++i) out.add_clause({safety ? vm.f(i) : -vm.f(i)});
  out.add_clause({safety ? -vm.f(sink) : vm.f(sink)});
}

Encoding encode_instance(const Acceptor& acceptor, std::size_t n, const EncodingOptions& options) {
  if (n == 0) throw InternalError("candidate DFA needs at least one state");
  auto rows = product_rows(acceptor);
  std::size_t reachable = 0;
  for (StateId r : rows) reachable += r != kNoState;
  Encoding enc{VarMap(n, acceptor.alphabet_size, reachable, options.symmetry_breaking), CnfFormula()};
  enc.formula = CnfFormula(enc.vars.variable_count());
  encode_dfa_shape(enc.vars, enc.formula);
  encode_product(enc.vars, acceptor, rows, enc.formula);
  if (options.symmetry_breaking) encode_symmetry_breaking(enc.vars, options.safety_mode, enc.formula);
  if (options.safety_mode) encode_parity_constraints(enc.vars, acceptor.alphabet_size, enc.formula);
  return enc;
}

void emit_dimacs(std::ostream& out, const CnfFormula& f, const VarMap* vm) {
  if (vm)
    for (int v = 1; v <= vm->variable_count(); ++v) out << "c var " << v << " = " << to_string(vm->describe(v)) << '\n';
  out << "p cnf " << f.variable_count() << ' ' << f.clause_count() << '\n';
  std::string line;
  for (std::size_t c = 0; c < f.clause_count(); ++c) {
    line.clear();
    for (int lit : f.clause(c)) {
      line += std::to_string(lit);
      line += ' ';
    }
    line += "0\n";
    out << line;
  }
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  emit_dimacs(out, f);
  return out.str();
}

LearnedDFA decode_model(const std::vector<bool>& model, const VarMap& vm) {
  if (model.size() < static_cast<std::size_t>(vm.variable_count()) + 1)
    throw InternalError("model shorter than the variable map");
  const std::size_t n = vm.n();
  const std::size_t k = vm.alphabet_size();
  LearnedDFA d;
  d.alphabet_size = k;
  d.delta.assign(n * k, kNoState);
  d.accepting.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.accepting[i] = model[vm.f(i)];
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t j = 0; j < n; ++j) {
        if (!model[vm.e(i, a, j)]) continue;
        if (d.delta[i * k + a] != kNoState)
          throw InternalError("model is not deterministic at state " + std::to_string(i) + ", letter " +
                              std::to_string(a));
        d.delta[i * k + a] = static_cast<StateId>(j);
      }
  }
  for (std::size_t i = 0; i < n * k; ++i)
    if (d.delta[i] == kNoState)
      throw InternalError("model is not complete at state " + std::to_string(i / k) + ", letter " +
                          std::to_string(i % k));
  return d;
}

}  // namespace sepdfa
