#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sepdfa/automata.hpp"

namespace sepdfa {

/// Clause set over variables 1..variable_count(), stored flat.
class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(int variable_count) : variable_count_(variable_count) {}

  int variable_count() const { return variable_count_; }
  std::size_t clause_count() const { return starts_.size(); }
  std::size_t literal_count() const { return literals_.size(); }

  /// Throws InternalError on an empty clause or a literal out of range.
  void add_clause(std::span<const int> literals);
  void add_clause(std::initializer_list<int> literals) { add_clause(std::span(literals.begin(), literals.size())); }
  void append(const CnfFormula& other);

  std::span<const int> clause(std::size_t i) const {
    const std::size_t end = i + 1 < starts_.size() ? starts_[i + 1] : literals_.size();
    return {literals_.data() + starts_[i], end - starts_[i]};
  }

  /// True iff `model[v]` (1-based; index 0 unused) satisfies every clause.
  bool satisfied_by(const std::vector<bool>& model) const;

 private:
  int variable_count_ = 0;
  std::vector<int> literals_;
  std::vector<std::size_t> starts_;
};

enum class VarKind : std::uint8_t { Transition, Final, Product, Edge, Parent, Reach };

/// Decoded variable: kind plus up to three indices.
///  Transition e(i,a,j): (i, a, j)    Final f(i): (i)
///  Product d(p,i): (p, i)            Reach t(i,j): (i, j), i < j
///  Parent p(j,i): (j, i), i < j      Edge m(i,a,j): (i, a, j), i < j
struct VarRef {
  VarKind kind;
  std::size_t x = 0, y = 0, z = 0;
  friend bool operator==(const VarRef&, const VarRef&) = default;
};

std::string to_string(const VarRef& ref);

/// Dense 1-based variable layout: all e, then f, d, t, p, m in row-major
/// order. The BFS-tree variables (t, p, m) exist only with symmetry breaking.
/// Parent and reach variables are allocated for index pairs i < j only.
class VarMap {
 public:
  VarMap(std::size_t n, std::size_t alphabet_size, std::size_t product_rows, bool symmetry_breaking);

  std::size_t n() const { return n_; }
  std::size_t alphabet_size() const { return k_; }
  std::size_t product_rows() const { return rows_; }
  bool symmetry_breaking() const { return sb_; }
  int variable_count() const { return total_; }

  int e(std::size_t i, std::size_t a, std::size_t j) const { return e_base_ + static_cast<int>((i * k_ + a) * n_ + j); }
  int f(std::size_t i) const { return f_base_ + static_cast<int>(i); }
  int d(std::size_t row, std::size_t i) const { return d_base_ + static_cast<int>(row * n_ + i); }
  int t(std::size_t i, std::size_t j) const { return t_base_ + pair_index(i, j); }
  /// j is a child of i in the BFS tree (i < j).
  int p(std::size_t j, std::size_t i) const { return p_base_ + pair_index(i, j); }
  int m(std::size_t i, std::size_t a, std::size_t j) const {
    return m_base_ + pair_index(i, j) * static_cast<int>(k_) + static_cast<int>(a);
  }

  /// Exact inverse of the allocation above. Throws InternalError when `var`
  /// is out of range.
  VarRef describe(int var) const;

 private:
  int pair_index(std::size_t i, std::size_t j) const;

  std::size_t n_, k_, rows_;
  bool sb_;
  int e_base_, f_base_, d_base_, t_base_, p_base_, m_base_, total_;
};

/// Determinism and completeness of the candidate DFA.
void encode_dfa_shape(const VarMap& vm, CnfFormula& out);

/// Maps acceptor states that are reachable from some initial state onto
/// product rows; kNoState for unreachable ones.
std::vector<StateId> product_rows(const Acceptor& acceptor);

/// Product of the candidate DFA with the acceptor. `rows` comes from
/// product_rows() and must match vm.product_rows().
void encode_product(const VarMap& vm, const Acceptor& acceptor, std::span<const StateId> rows, CnfFormula& out);

/// BFS-tree canonical numbering of the candidate. With `safety_mode`, every clause
/// mentioning state n-1 is left out so that the sink constraints can fix it.
void encode_symmetry_breaking(const VarMap& vm, bool safety_mode, CnfFormula& out);

/// Parity shape: state 0 initial, state n-1 a sink, shaped for parity conditions
/// over colours 0..colours-1. Requires n >= 2 and alphabet_size == colours.
void encode_parity_constraints(const VarMap& vm, std::size_t colours, CnfFormula& out);

struct EncodingOptions {
  bool symmetry_breaking = true;
  bool safety_mode = false;
};

struct Encoding {
  VarMap vars;
  CnfFormula formula;
};

/// Full instance: "is there a complete n-state DFA separating `acceptor`?"
Encoding encode_instance(const Acceptor& acceptor, std::size_t n, const EncodingOptions& options);

/// DIMACS CNF: "p cnf <vars> <clauses>" then one 0-terminated clause per line.
/// When `vm` is given, a "c var <id> = <kind> <indices>" comment precedes the
/// header for every variable.
void emit_dimacs(std::ostream& out, const CnfFormula& f, const VarMap* vm = nullptr);
std::string emit_dimacs(const CnfFormula& f);

/// Reads the e and f variables of a model. `model[v]` is 1-based.
/// Throws InternalError when some (i, a) has no or several successors.
LearnedDFA decode_model(const std::vector<bool>& model, const VarMap& vm);

}  // namespace sepdfa
