#include <doctest.h>

#include <chrono>

#include "sepdfa/error.hpp"
#include "sepdfa/solver_bridge.hpp"
#include "support.hpp"

using namespace sepdfa;

namespace {

CnfFormula formula(int vars, std::initializer_list<std::initializer_list<int>> clauses) {
  CnfFormula f(vars);
  for (auto c : clauses) f.add_clause(c);
  return f;
}

SolverOptions fake(const std::string& script) {
  SolverOptions o;
  o.command = {"sh", "-c", script};
  return o;
}

}  // namespace

TEST_CASE("parse_solver_output") {
  CHECK(parse_solver_output("s UNSATISFIABLE\n").outcome == Outcome::Unsat);

  auto v = parse_solver_output("c hi\ns SATISFIABLE\nv 1 -2 0\n");
  CHECK(v.outcome == Outcome::Sat);
  CHECK(v.model == std::vector<bool>{false, true, false});

  auto split = parse_solver_output("v 1 -2\nv 0\ns SATISFIABLE\n");
  CHECK(split.model == v.model);

  CHECK_THROWS_AS(parse_solver_output("c nothing\n"), SolverError);
  CHECK_THROWS_AS(parse_solver_output("s SATISFIABLE\nv 1 x 0\n"), SolverError);
  CHECK_THROWS_AS(parse_solver_output("s MAYBE\n"), SolverError);
}

TEST_CASE("solve trivial formulas with the real solver") {
  auto sat = solve(formula(1, {{1}}), test::solver());
  CHECK(sat.outcome == Outcome::Sat);
  REQUIRE(sat.model.size() >= 2);
  CHECK(sat.model[1]);
  CHECK(solve(formula(1, {{1}, {-1}}), test::solver()).outcome == Outcome::Unsat);
}

TEST_CASE("models satisfy the formula") {
  auto f = formula(4, {{1, 2}, {-1, 3}, {-2, -3}, {4, -1}, {-4, 2, 3}});
  auto v = solve(f, test::solver());
  REQUIRE(v.outcome == Outcome::Sat);
  CHECK(f.satisfied_by(v.model));
}

TEST_CASE("formulas above the pipe limit go through a file") {
  auto options = test::solver();
  options.pipe_limit_bytes = 1;
  CHECK(solve(formula(2, {{1, 2}, {-1}}), options).outcome == Outcome::Sat);
  CHECK(solve(formula(1, {{1}, {-1}}), options).outcome == Outcome::Unsat);
}

TEST_CASE("a missing solver is a solver error") {
  SolverOptions o;
  o.command = {"sepdfa-no-such-solver"};
  CHECK_THROWS_AS(solve(formula(1, {{1}}), o), SolverError);
}

TEST_CASE("timeouts kill the solver") {
  auto o = fake("sleep 30");
  o.timeout = std::chrono::milliseconds(300);
  const auto start = std::chrono::steady_clock::now();
  CHECK_THROWS_AS(solve(formula(1, {{1}}), o), SolverTimeout);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
}

TEST_CASE("inconsistent solver output is rejected") {
  // Model violates the clause.
  CHECK_THROWS_AS(solve(formula(1, {{1}}), fake("cat >/dev/null; echo 's SATISFIABLE'; echo 'v -1 0'; exit 10")),
                  SolverError);
  // Variable 2 left unassigned.
  CHECK_THROWS_AS(solve(formula(2, {{1}}), fake("cat >/dev/null; echo 's SATISFIABLE'; echo 'v 1 0'; exit 10")),
                  SolverError);
  // Exit code disagrees with the status line.
  CHECK_THROWS_AS(solve(formula(1, {{1}}), fake("cat >/dev/null; echo 's UNSATISFIABLE'; exit 10")), SolverError);
  // Unknown exit code.
  CHECK_THROWS_AS(solve(formula(1, {{1}}), fake("cat >/dev/null; exit 3")), SolverError);
  // Well-behaved fake.
  auto v = solve(formula(2, {{1}}), fake("cat >/dev/null; echo 's SATISFIABLE'; echo 'v 1 -2 0'; exit 10"));
  CHECK(v.outcome == Outcome::Sat);
}
