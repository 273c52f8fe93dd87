#pragma once

// Three-argument verifiers V(w, s, h) for an instance w, a proposed solution
// s and a hint h, plus the bounded exhaustive check of the verifier axioms:
//
//   1. every positive instance is accepted for some s in F(w) and some h;
//   2. no (s, h) is accepted on a negative instance;
//   3. no h makes the verifier accept an s outside F(w).
//
// Verifiers read s and h through Tape, which records how much of each string
// a run inspected. A run that never inspected position k of a tape returns
// the same verdict for every string sharing the first k characters, which is
// what lets the checker cover all strings up to a length bound without
// enumerating them one by one.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nondec/problem_id.hpp"
#include "nondec/spaces.hpp"
#include "nondec/steps.hpp"

namespace nondec {

class Tape {
 public:
  explicit Tape(std::string_view data) : data_(data) {}

  // Character at position i, or nullopt past the end. Either way position i
  // counts as inspected.
  std::optional<char> at(std::size_t i) {
    if (i + 1 > observed_) observed_ = i + 1;
    if (i < data_.size()) return data_[i];
    return std::nullopt;
  }

  // The whole string; marks every position and the end as inspected.
  std::string_view all() {
    observed_ = std::max(observed_, data_.size() + 1);
    return data_;
  }

  std::size_t observed() const { return observed_; }
  // True when the run learned where the string ends, so its verdict applies
  // to this exact string only.
  bool end_observed() const { return observed_ > data_.size(); }

 private:
  std::string_view data_;
  std::size_t observed_ = 0;
};

struct Verifier {
  using Accepts = std::function<bool(std::string_view w, Tape& s, Tape& h, StepCounter& steps)>;
  using Hints = std::function<std::vector<std::string>(std::string_view w, std::string_view s)>;

  std::string name;
  ProblemId target = ProblemId::Factor;
  Accepts accepts;
  // Hints an honest prover would send along with s. Optional; the axiom
  // checker tries them before searching the bounded hint space.
  Hints suggest_hints;
};

struct VerifierRun {
  bool accepted = false;
  bool timed_out = false;
  std::uint64_t steps = 0;
  std::size_t s_observed = 0;
  std::size_t h_observed = 0;
  bool s_end_observed = false;
  bool h_end_observed = false;
};

VerifierRun run_verifier(const Verifier& v, std::string_view w, std::string_view s,
                         std::string_view h, StepBudget budget = {});

// "yes" or "no". Throws VerifierTimeout when the budget runs out.
std::string verify(const Verifier& v, std::string_view w, std::string_view s, std::string_view h,
                   StepBudget budget = {});

// Shipped verifiers. Throws UnknownProblem for unregistered names.
Verifier verifier_for(ProblemId p);
Verifier verifier_for(std::string_view name);

// Deliberately wrong verifiers for HamCycle:
//   partial-cycle-as-solution  accepts a path missing up to two final
//                              vertices when some completion is a cycle
//   accepts-negative           also accepts ("", "", "") on the empty graph
//   rejects-everything         never accepts
// Throws UnknownKind.
Verifier adversarial_verifier(std::string_view kind);
std::vector<std::string> adversarial_kinds();

struct AxiomOptions {
  // Maximum length of the enumerated s and h strings.
  std::size_t string_bound = 8;
  // Characters of the enumerated strings. When unset, each instance uses its
  // own characters plus ',' ' ' and the characters solutions of the problem
  // are written in (see default_alphabet).
  std::optional<std::string> alphabet;
  // Also require every s in F(w) to be accepted with some hint.
  bool strict = false;
  StepBudget verifier_budget{};
  StepBudget oracle_budget{};
  // Verifier runs allowed per instance before SearchSpaceTooLarge.
  std::uint64_t max_runs_per_instance = 2'000'000;
  unsigned threads = 1;
};

std::string default_alphabet(ProblemId p, std::string_view w);

struct AxiomRecord {
  std::string axiom;
  std::string instance;
  std::string s;
  std::string h;
  std::string verdict;

  friend bool operator==(const AxiomRecord&, const AxiomRecord&) = default;
};

struct AxiomReport {
  std::vector<AxiomRecord> axiom1_witnesses;
  std::vector<AxiomRecord> axiom1_failures;
  std::vector<AxiomRecord> axiom2_violations;
  std::vector<AxiomRecord> axiom3_violations;
  std::vector<AxiomRecord> halting_failures;
  std::vector<AxiomRecord> strict_failures;
  std::string search_bounds;
  std::size_t instances = 0;
  std::size_t positive_instances = 0;
  std::uint64_t verifier_runs = 0;
  std::uint64_t pairs_covered = 0;

  bool passed() const;
  // Every failure record: axiom 1, 2, 3, halting, strict.
  std::vector<AxiomRecord> failures() const;
  // "# axiom\tinstance\ts\th\tverdict" followed by every record.
  std::string to_records() const;
};

// Throws SearchSpaceTooLarge when an instance needs more verifier runs than
// options.max_runs_per_instance.
AxiomReport check_verifier_axioms(const Verifier& v, ProblemId p, const InstanceSpace& instances,
                                  const AxiomOptions& options = {});

}  // namespace nondec
