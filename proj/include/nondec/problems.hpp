#pragma once

// Computational problems as total maps from ASCII strings to finite solution
// sets, the registry of shipped problems, and the correspondence between
// decision problems and languages.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nondec/problem_id.hpp"
#include "nondec/solution_set.hpp"
#include "nondec/steps.hpp"

namespace nondec {

enum class InstanceClass { Positive, Negative };

std::string_view to_string(InstanceClass c);

class ComputationalProblem {
 public:
  using SolutionsFn = std::function<SolutionSet(std::string_view, StepBudget)>;
  using ClassifyFn = std::function<InstanceClass(std::string_view, StepBudget)>;

  ComputationalProblem(std::string name, bool is_decision, SolutionsFn solutions,
                       ClassifyFn classify, std::optional<ProblemId> id = std::nullopt);

  const std::string& name() const { return name_; }
  bool is_decision() const { return is_decision_; }
  // Set for registered problems; derived problems carry the id they wrap.
  std::optional<ProblemId> id() const { return id_; }

  InstanceClass classify(std::string_view w, StepBudget budget = {}) const {
    return classify_(w, budget);
  }
  SolutionSet solutions(std::string_view w, StepBudget budget = {}) const {
    return solutions_(w, budget);
  }

 private:
  std::string name_;
  bool is_decision_;
  SolutionsFn solutions_;
  ClassifyFn classify_;
  std::optional<ProblemId> id_;
};

// Throws UnknownProblem. UndirectedHamCycleD resolves to HamCycleD.
const ComputationalProblem& get_problem(std::string_view name);
const ComputationalProblem& get_problem(ProblemId id);

// Registered names, aliases included, in listing order.
std::vector<std::string> problem_names();

InstanceClass classify_instance(const ComputationalProblem& p, std::string_view w,
                                StepBudget budget = {});

SolutionSet solution_set(const ComputationalProblem& p, std::string_view w,
                         StepBudget budget = {});

// The decision problem that answers "yes" exactly on the positive instances
// of p. Decision problems are returned unchanged.
ComputationalProblem decision_variant(const ComputationalProblem& p);

struct MembershipPredicate {
  std::function<bool(std::string_view)> contains;
};

// Throws NotADecisionProblem.
MembershipPredicate as_language(const ComputationalProblem& d, StepBudget budget = {});

ComputationalProblem from_language(MembershipPredicate language, std::string name = "D_L");

}  // namespace nondec
