#pragma once

// Brute-force oracles for every registered problem, the step-counted program
// model, and the check that a program solves a problem on a finite space.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nondec/encodings.hpp"
#include "nondec/problem_id.hpp"
#include "nondec/solution_set.hpp"
#include "nondec/spaces.hpp"
#include "nondec/steps.hpp"

namespace nondec {

// Complete canonical solution set of w. Malformed instances are negative.
// Throws BudgetExceeded when the enumeration needs more steps than allowed.
SolutionSet enumerate_solutions(ProblemId p, std::string_view w, StepBudget budget = {});
SolutionSet enumerate_solutions(ProblemId p, std::string_view w, StepCounter& steps);

// Positivity only; stops at the first solution found.
bool has_solution(ProblemId p, std::string_view w, StepCounter& steps);
bool has_solution(ProblemId p, std::string_view w, StepBudget budget = {});

// s in F(w), decided directly (divide, walk, evaluate) where a direct check
// exists. Answering for s = "no" or for decision problems needs the
// positivity of w, which is searched for within the budget.
bool check_solution(ProblemId p, std::string_view w, std::string_view s, StepBudget budget = {});

// Maps a candidate to its canonical representative when the problem has one
// (cycles are rotated/reflected, edges get ordered endpoints). Other strings
// are returned unchanged.
std::string canonicalize_solution(ProblemId p, std::string_view w, std::string_view s);

// The Hamilton cycles of g as vertex sequences, starting from the smallest
// vertex, in the order the backtracking search finds them.
std::vector<std::vector<std::string>> hamilton_cycles(const Graph& g, StepCounter& steps,
                                                      bool first_only = false);

struct Outcome {
  enum class Kind { Output, Timeout };

  Kind kind = Kind::Output;
  std::string output;
  std::uint64_t steps_used = 0;

  static Outcome make_output(std::string text, std::uint64_t steps) {
    return {Kind::Output, std::move(text), steps};
  }
  static Outcome make_timeout(std::uint64_t steps) { return {Kind::Timeout, {}, steps}; }

  bool timed_out() const { return kind == Kind::Timeout; }
  bool rejected() const { return kind == Kind::Output && output == kNo; }
  bool accepted() const { return kind == Kind::Output && output != kNo; }

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// A deterministic program. The body charges its own work to the counter;
// run_program additionally charges one step for the call and one for
// emitting the output.
struct Program {
  std::string name;
  std::function<std::string(std::string_view input, StepCounter& steps)> body;
};

Outcome run_program(const Program& prog, std::string_view w, StepBudget budget = {});

// Outputs the smallest nontrivial factor found by dividing by 2..m-1, or "no".
Program trial_division_program();
Program constant_program(std::string output);
Program always_no_program();
// Outputs the smallest member of the brute-force solution set.
Program brute_force_program(ProblemId p);

struct SolvesRecord {
  std::string instance;
  std::string verdict;
  std::string detail;

  friend bool operator==(const SolvesRecord&, const SolvesRecord&) = default;
};

// Violations in instance-space order; empty means the program solves the
// problem on the space.
struct SolvesReport {
  std::vector<SolvesRecord> violations;
  std::size_t instances_checked = 0;

  bool solves() const { return violations.empty(); }
  // "# instance\tverdict\tdetail" then one line per violation.
  std::string to_records() const;
};

SolvesReport solves_on_space(const Program& prog, ProblemId p, const InstanceSpace& space,
                             StepBudget program_budget = {}, StepBudget oracle_budget = {},
                             unsigned threads = 1);

}  // namespace nondec
