#pragma once

// Nondeterministic programs as deterministic transition functions of the
// input and a string of choice bits. The simulator explores the whole tree
// of choice strings; the union of what the leaves output is the program's
// behaviour on that input.
//
// Output semantics: a nondeterministic program solves F when every non-"no"
// leaf output is in F(w), every positive instance has at least one non-"no"
// leaf and every negative instance has only "no" leaves. For decision
// problems this is the usual acceptance condition.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nondec/problem_id.hpp"
#include "nondec/solvers.hpp"
#include "nondec/spaces.hpp"
#include "nondec/steps.hpp"
#include "nondec/verifiers.hpp"

namespace nondec {

using Choices = std::vector<bool>;

struct NeedMoreChoices {};

using Transition = std::variant<std::string, NeedMoreChoices>;

struct NProgram {
  std::string name;
  // Deterministic in (w, choices). Returns NeedMoreChoices while the choice
  // prefix is too short to finish.
  std::function<Transition(std::string_view w, const Choices& choices, StepCounter& steps)> transition;
  // Longest choice string the program may consume on inputs of length n.
  std::function<std::size_t(std::size_t n)> choice_bound;
  StepBudget path_budget{};
};

enum class ExplorationOrder { Forward, Reverse, Parallel };

struct NondetOptions {
  ExplorationOrder order = ExplorationOrder::Forward;
  std::uint64_t max_paths = std::uint64_t{1} << 20;
  unsigned threads = 0;
};

struct ComputationSummary {
  std::set<std::string> leaf_outputs;
  std::uint64_t paths_explored = 0;
  std::uint64_t max_steps_on_any_path = 0;
  // Paths that ran out of steps, and paths still asking for choices at the
  // choice bound. Neither contributes a leaf output.
  std::uint64_t timeouts = 0;
  std::uint64_t overruns = 0;

  // Commutative and associative.
  void merge(const ComputationSummary& other);

  std::set<std::string> accepting_outputs() const;
};

// Throws ChoiceSpaceTooLarge when more than options.max_paths leaves exist.
ComputationSummary run_nondet(const NProgram& np, std::string_view w, const NondetOptions& options = {});

// Turns choice bits into a proposed (solution, hint) pair. Decoding may fail,
// in which case the path outputs "no".
struct Decoder {
  struct Candidate {
    std::string s;
    std::string h;
  };

  std::string name;
  std::function<std::size_t(std::string_view w)> bits;
  std::function<std::size_t(std::size_t n)> bound;
  std::function<std::optional<Candidate>(std::string_view w, const Choices& choices)> decode;
};

// The shipped decoder for each registered problem: binary numbers for
// factors, one bit per variable for assignments, Lehmer-coded vertex orders
// (each position picks among the vertices still unused) for cycles.
Decoder decoder_for(ProblemId p);

// Each path decodes its choices into (s, h), runs v, and outputs s when v
// accepts and "no" otherwise.
NProgram guess_and_verify(ProblemId p, const Verifier& v, const Decoder& decoder,
                          StepBudget path_budget = {});

// Violation verdicts: "unsound-output" (a non-"no" leaf outside F(w)),
// "missed-positive" (positive instance, only "no" leaves),
// "accepted-negative" (negative instance, some leaf other than "no"),
// "timeout" (a path ran out of steps). Leaf outputs are canonicalized with
// canonicalize_solution before comparison.
SolvesReport nondet_solves(const NProgram& np, ProblemId p, const InstanceSpace& space,
                           const NondetOptions& options = {}, StepBudget oracle_budget = {});

// ---------------------------------------------------------------- scaling

struct ScalingSample {
  std::size_t size;
  std::uint64_t steps;
};

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double rss = 0;  // residual sum of squares of ln(steps)
};

struct ScalingReport {
  std::vector<ScalingSample> samples;
  LineFit log_log;     // ln(steps) against ln(size)
  LineFit log_linear;  // ln(steps) against size

  // Doubling rate: bits of ln(steps) per unit of size.
  double rate_bits() const;
  bool exponential_fits_better() const { return log_linear.rss < log_log.rss; }
  // "size,steps" rows followed by a two-line fit summary.
  std::string to_csv() const;
};

// Least squares over (x, y). Requires at least two distinct x values.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Builds the report from (size, steps) samples; needs at least four.
ScalingReport make_scaling_report(std::vector<ScalingSample> samples);

using InstanceFamily = std::function<std::vector<std::string>(std::size_t size)>;

// Worst-case steps over family(size) for each size. A Program that times out
// raises BudgetExceeded.
ScalingReport scaling_report(const Program& prog, const InstanceFamily& family,
                             const std::vector<std::size_t>& sizes, StepBudget budget = {});
ScalingReport scaling_report(const NProgram& np, const InstanceFamily& family,
                             const std::vector<std::size_t>& sizes, const NondetOptions& options = {});

struct VerifierCase {
  std::string w, s, h;
};
using VerifierFamily = std::function<std::vector<VerifierCase>(std::size_t size)>;

ScalingReport scaling_report(const Verifier& v, const VerifierFamily& family,
                             const std::vector<std::size_t>& sizes, StepBudget budget = {});

// Families used by the demonstrations: unsatisfiable formulas
// "a b ... !a,!b,..." on n variables, and n-cycles with their Hamilton cycle.
std::string unsat_formula(std::size_t variables);
InstanceFamily unsat_formula_family();
VerifierFamily cycle_walk_family();

}  // namespace nondec
