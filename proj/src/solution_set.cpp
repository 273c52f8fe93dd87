#include "nondec/solution_set.hpp"

#include <stdexcept>

namespace nondec {

SolutionSet::SolutionSet(std::set<std::string> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("solution set must be nonempty");
  if (members_.size() > 1 && members_.count(std::string(kNo))) {
    throw std::invalid_argument("\"no\" cannot be a solution of a positive instance");
  }
}

SolutionSet::SolutionSet(std::initializer_list<std::string> members)
    : SolutionSet(std::set<std::string>(members)) {}

SolutionSet SolutionSet::from_found(std::set<std::string> found) {
  if (found.empty()) return no();
  return SolutionSet(std::move(found));
}

SolutionSet SolutionSet::no() { return SolutionSet({std::string(kNo)}); }
SolutionSet SolutionSet::yes() { return SolutionSet({std::string(kYes)}); }

bool SolutionSet::is_negative() const {
  return members_.size() == 1 && *members_.begin() == kNo;
}

}  // namespace nondec
