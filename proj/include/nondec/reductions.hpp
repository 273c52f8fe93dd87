#pragma once

// Mapping reductions from decision problems to general problems, reductions
// between general problems with a solution map back, the NP-hardness
// judgment they support, and oracle-based search-to-decision procedures.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nondec/encodings.hpp"
#include "nondec/problem_id.hpp"
#include "nondec/solvers.hpp"
#include "nondec/spaces.hpp"
#include "nondec/steps.hpp"

namespace nondec {

// Step budget c * max(n, 1)^k for inputs of length n.
struct PolynomialBudget {
  std::uint64_t coefficient = 64;
  unsigned degree = 2;

  StepBudget operator()(std::size_t n) const;
};

using InstanceMap = std::function<std::string(std::string_view, StepCounter&)>;

struct Polyreduction {
  std::string name;
  ProblemId source = ProblemId::HamCycleD;  // a decision problem
  ProblemId target = ProblemId::HamCycle;
  InstanceMap map;
  PolynomialBudget budget{};
};

// Throws std::invalid_argument unless source is a decision problem.
Polyreduction make_polyreduction(std::string name, ProblemId source, ProblemId target,
                                 InstanceMap map, PolynomialBudget budget = {});

// r(w) within the reduction's budget. Throws BudgetExceeded.
std::string apply_polyreduction(const Polyreduction& red, std::string_view w);

struct ReductionRecord {
  std::string instance;
  std::string source_verdict;
  std::string target_verdict;
  std::string status;  // "ok" or "mismatch"
  std::string detail;
};

struct ReductionReport {
  std::string reduction;
  std::vector<ReductionRecord> rows;
  std::uint64_t oracle_calls = 0;
  std::uint64_t max_map_steps = 0;
  // Budget allowed at the input length where max_map_steps was observed.
  std::uint64_t budget_at_max = 0;

  bool ok() const;
  std::vector<ReductionRecord> mismatches() const;
  // "# instance\tsource_verdict\ttarget_verdict\tstatus" rows, then a
  // "# summary" line with the oracle-call count and observed map steps.
  std::string to_records() const;
};

ReductionReport check_polyreduction(const Polyreduction& red, const InstanceSpace& space,
                                    StepBudget oracle_budget = {}, unsigned threads = 1);

// red2 after red1. red1's target must have red2's source as its decision
// variant.
Polyreduction compose(const Polyreduction& first, const Polyreduction& second);

struct GeneralReduction {
  std::string name;
  ProblemId source = ProblemId::HamCycle;
  ProblemId target = ProblemId::HamCycle;
  InstanceMap map;
  std::function<std::string(std::string_view)> map_back;
  PolynomialBudget budget{};
};

// r'(G(r(w))) for the given solver of the target problem. Throws
// BudgetExceeded when the solver times out.
std::string apply_general_reduction(const GeneralReduction& gr, const Program& target_solver,
                                    std::string_view w, StepBudget solver_budget = {});

// For every w and every g in G(r(w)), checks r'(g) in F(w).
ReductionReport check_general_reduction(const GeneralReduction& gr, const InstanceSpace& space,
                                        StepBudget oracle_budget = {}, unsigned threads = 1);

// The three-vertex split: v becomes 0<v>in - 0<v>mid - 0<v>out and every arc
// (u, v) becomes the edge 0<u>out - 0<v>in.
Graph split_vertex_gadget(const Graph& directed, StepCounter& steps);

// Shipped reductions, by name:
//   hamcycled-to-hamcycle          identity, HamCycleD -> HamCycle
//   directed-to-undirected         DirectedHamCycleD -> UndirectedHamCycleD
//   directed-to-undirected-broken  same, but drops the first arc
//   satd-to-satd                   identity
// Throws UnknownKind.
Polyreduction get_reduction(std::string_view name);
std::vector<std::string> reduction_names();

//   hamcycle-identity              HamCycle -> HamCycle
//   directed-to-undirected         DirectedHamCycle -> HamCycle, r' contracts gadgets
//   directed-to-undirected-reversed  r' walks the contracted cycle backwards
GeneralReduction get_general_reduction(std::string_view name);
std::vector<std::string> general_reduction_names();

struct NpHardJudgment {
  std::string target;
  std::string label;
  ReductionReport report;
};

std::span<const ProblemId> certified_np_complete();

// Desk-scale space used to check reductions out of a source problem.
InstanceSpace default_reduction_space(ProblemId source);

// Throws SourceNotCertified, ReductionCheckFailed.
NpHardJudgment np_hard_via(const Polyreduction& red, ProblemId certified_source,
                           const std::optional<InstanceSpace>& space = std::nullopt);

class DecisionOracle {
 public:
  explicit DecisionOracle(std::function<bool(std::string_view)> answer)
      : answer_(std::move(answer)) {}

  // Brute-force oracle for a registered decision problem.
  static DecisionOracle exact(ProblemId p, StepBudget budget = {});

  std::string ask(std::string_view instance);
  std::uint64_t call_count() const { return queries_.size(); }
  const std::vector<std::string>& queries() const { return queries_; }

 private:
  std::function<bool(std::string_view)> answer_;
  std::vector<std::string> queries_;
};

// Binary search over [2, m-1] with a FactorInRangeD oracle ("m lo hi").
// Returns the smallest nontrivial factor, or "no".
std::string factor_search_via_oracle(const Natural& m, DecisionOracle& oracle);
std::uint64_t factor_search_call_bound(const Natural& m);

// Deletes edges in lexicographic order whenever a Hamilton cycle survives the
// deletion, then reads off the remaining cycle.
std::string hamcycle_search_via_oracle(const Graph& g, DecisionOracle& oracle);

// Fixes variables in lexicographic order, trying 1 before 0.
std::string sat_search_via_oracle(const CnfFormula& f, DecisionOracle& oracle);

// f with var fixed to value: satisfied clauses removed, falsified literals
// dropped. nullopt when a clause becomes empty.
std::optional<CnfFormula> substitute(const CnfFormula& f, const std::string& var, bool value);

}  // namespace nondec
