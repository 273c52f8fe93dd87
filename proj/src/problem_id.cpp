#include "nondec/problem_id.hpp"

#include <array>

#include "nondec/errors.hpp"

namespace nondec {

namespace {

constexpr std::array kAll = {
    ProblemId::Factor,           ProblemId::FactorD,           ProblemId::FactorInRangeD,
    ProblemId::HamCycle,         ProblemId::HamCycleD,         ProblemId::DirectedHamCycle,
    ProblemId::DirectedHamCycleD, ProblemId::HamCycleEdge,     ProblemId::Sat,
    ProblemId::SatD,
};

}  // namespace

std::string_view to_string(ProblemId id) {
  switch (id) {
    case ProblemId::Factor: return "Factor";
    case ProblemId::FactorD: return "FactorD";
    case ProblemId::FactorInRangeD: return "FactorInRangeD";
    case ProblemId::HamCycle: return "HamCycle";
    case ProblemId::HamCycleD: return "HamCycleD";
    case ProblemId::DirectedHamCycle: return "DirectedHamCycle";
    case ProblemId::DirectedHamCycleD: return "DirectedHamCycleD";
    case ProblemId::HamCycleEdge: return "HamCycleEdge";
    case ProblemId::Sat: return "Sat";
    case ProblemId::SatD: return "SatD";
  }
  return "?";
}

std::optional<ProblemId> parse_problem_id(std::string_view name) {
  if (name == "UndirectedHamCycleD") return ProblemId::HamCycleD;
  for (ProblemId id : kAll) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

ProblemId problem_id(std::string_view name) {
  auto id = parse_problem_id(name);
  if (!id) throw UnknownProblem(std::string(name));
  return *id;
}

std::span<const ProblemId> all_problem_ids() { return kAll; }

bool is_decision(ProblemId id) { return decision_of(id) == id; }

ProblemId decision_of(ProblemId id) {
  switch (id) {
    case ProblemId::Factor: return ProblemId::FactorD;
    case ProblemId::HamCycle:
    case ProblemId::HamCycleEdge: return ProblemId::HamCycleD;
    case ProblemId::DirectedHamCycle: return ProblemId::DirectedHamCycleD;
    case ProblemId::Sat: return ProblemId::SatD;
    default: return id;
  }
}

std::optional<ProblemId> search_of(ProblemId id) {
  switch (id) {
    case ProblemId::FactorD: return ProblemId::Factor;
    case ProblemId::HamCycleD: return ProblemId::HamCycle;
    case ProblemId::DirectedHamCycleD: return ProblemId::DirectedHamCycle;
    case ProblemId::SatD: return ProblemId::Sat;
    default: return std::nullopt;
  }
}

bool is_graph_problem(ProblemId id) {
  switch (id) {
    case ProblemId::HamCycle:
    case ProblemId::HamCycleD:
    case ProblemId::HamCycleEdge:
    case ProblemId::DirectedHamCycle:
    case ProblemId::DirectedHamCycleD: return true;
    default: return false;
  }
}

bool is_directed_graph_problem(ProblemId id) {
  return id == ProblemId::DirectedHamCycle || id == ProblemId::DirectedHamCycleD;
}

}  // namespace nondec
