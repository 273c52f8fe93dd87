#include "nondec/problems.hpp"

#include <map>

#include "nondec/errors.hpp"
#include "nondec/solvers.hpp"

namespace nondec {

std::string_view to_string(InstanceClass c) {
  return c == InstanceClass::Positive ? "positive" : "negative";
}

ComputationalProblem::ComputationalProblem(std::string name, bool is_decision,
                                           SolutionsFn solutions, ClassifyFn classify,
                                           std::optional<ProblemId> id)
    : name_(std::move(name)),
      is_decision_(is_decision),
      solutions_(std::move(solutions)),
      classify_(std::move(classify)),
      id_(id) {}

namespace {

ComputationalProblem make_registered(ProblemId id) {
  return ComputationalProblem(
      std::string(to_string(id)), is_decision(id),
      [id](std::string_view w, StepBudget b) { return enumerate_solutions(id, w, b); },
      [id](std::string_view w, StepBudget b) {
        return has_solution(id, w, b) ? InstanceClass::Positive : InstanceClass::Negative;
      },
      id);
}

const std::map<ProblemId, ComputationalProblem>& registry() {
  static const auto* problems = [] {
    auto* m = new std::map<ProblemId, ComputationalProblem>;
    for (ProblemId id : all_problem_ids()) m->emplace(id, make_registered(id));
    return m;
  }();
  return *problems;
}

}  // namespace

const ComputationalProblem& get_problem(ProblemId id) { return registry().at(id); }

const ComputationalProblem& get_problem(std::string_view name) {
  return get_problem(problem_id(name));
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (ProblemId id : all_problem_ids()) {
    names.emplace_back(to_string(id));
    if (id == ProblemId::HamCycleD) names.emplace_back("UndirectedHamCycleD");
  }
  return names;
}

InstanceClass classify_instance(const ComputationalProblem& p, std::string_view w,
                                StepBudget budget) {
  return p.classify(w, budget);
}

SolutionSet solution_set(const ComputationalProblem& p, std::string_view w, StepBudget budget) {
  return p.solutions(w, budget);
}

ComputationalProblem decision_variant(const ComputationalProblem& p) {
  if (p.is_decision()) return p;
  if (p.id()) {
    return get_problem(decision_of(*p.id()));
  }
  auto classify = [p](std::string_view w, StepBudget b) { return p.classify(w, b); };
  return ComputationalProblem(
      p.name() + "D", true,
      [classify](std::string_view w, StepBudget b) {
        return classify(w, b) == InstanceClass::Positive ? SolutionSet::yes() : SolutionSet::no();
      },
      classify);
}

MembershipPredicate as_language(const ComputationalProblem& d, StepBudget budget) {
  if (!d.is_decision()) throw NotADecisionProblem(d.name());
  return {[d, budget](std::string_view s) { return d.classify(s, budget) == InstanceClass::Positive; }};
}

ComputationalProblem from_language(MembershipPredicate language, std::string name) {
  auto contains = std::move(language.contains);
  return ComputationalProblem(
      std::move(name), true,
      [contains](std::string_view s, StepBudget) {
        return contains(s) ? SolutionSet::yes() : SolutionSet::no();
      },
      [contains](std::string_view s, StepBudget) {
        return contains(s) ? InstanceClass::Positive : InstanceClass::Negative;
      });
}

}  // namespace nondec
