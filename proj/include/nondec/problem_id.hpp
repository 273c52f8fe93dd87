#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace nondec {

enum class ProblemId {
  Factor,
  FactorD,
  FactorInRangeD,
  HamCycle,
  HamCycleD,
  DirectedHamCycle,
  DirectedHamCycleD,
  HamCycleEdge,
  Sat,
  SatD,
};

std::string_view to_string(ProblemId id);

// Accepts every registered name plus the alias UndirectedHamCycleD.
std::optional<ProblemId> parse_problem_id(std::string_view name);

// Throws UnknownProblem.
ProblemId problem_id(std::string_view name);

std::span<const ProblemId> all_problem_ids();

bool is_decision(ProblemId id);

// HamCycle -> HamCycleD etc.; decision problems map to themselves.
// HamCycleEdge has no registered decision variant: its positive instances
// are exactly those of HamCycleD, which is what it maps to.
ProblemId decision_of(ProblemId id);

// The search problem whose solutions serve as certificates for a decision
// problem. FactorInRangeD has none.
std::optional<ProblemId> search_of(ProblemId id);

// Instances are graphs; directed_graph tells which parser applies.
bool is_graph_problem(ProblemId id);
bool is_directed_graph_problem(ProblemId id);

}  // namespace nondec
