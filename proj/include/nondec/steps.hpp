#pragma once

#include <cstdint>

#include "nondec/errors.hpp"

namespace nondec {

inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

struct StepBudget {
  std::uint64_t max_steps = kDefaultMaxSteps;
};

// Counts elementary operations (loop iterations, recursive calls) against a
// budget. Exceeding the budget throws BudgetExceeded and leaves used() equal
// to the budget, so a report never shows more steps than were allowed.
class StepCounter {
 public:
  explicit StepCounter(StepBudget budget = {}) : max_(budget.max_steps) {}

  void tick(std::uint64_t n = 1) {
    if (n > max_ - used_) {
      used_ = max_;
      exhausted_ = true;
      throw BudgetExceeded(max_);
    }
    used_ += n;
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t max_steps() const { return max_; }
  std::uint64_t remaining() const { return max_ - used_; }
  bool exhausted() const { return exhausted_; }

 private:
  std::uint64_t max_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

}  // namespace nondec
