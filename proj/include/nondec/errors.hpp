#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nondec {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text does not match the grammar of the expected encoding.
class MalformedInput : public Error {
 public:
  MalformedInput(std::size_t position, std::string reason)
      : Error("malformed input at " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(std::move(reason)) {}

  std::size_t position() const { return position_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t max_steps)
      : Error("step budget of " + std::to_string(max_steps) + " exceeded"),
        max_steps_(max_steps) {}

  std::uint64_t max_steps() const { return max_steps_; }

 private:
  std::uint64_t max_steps_;
};

class UnknownProblem : public Error {
 public:
  explicit UnknownProblem(const std::string& name) : Error("unknown problem: " + name) {}
};

class UnknownKind : public Error {
 public:
  explicit UnknownKind(const std::string& kind) : Error("unknown kind: " + kind) {}
};

class NotADecisionProblem : public Error {
 public:
  explicit NotADecisionProblem(const std::string& name)
      : Error(name + " is not a decision problem") {}
};

class MissingVariable : public Error {
 public:
  explicit MissingVariable(const std::string& var)
      : Error("assignment does not cover variable " + var) {}
};

class DuplicateVertex : public Error {
 public:
  explicit DuplicateVertex(const std::string& vertex)
      : Error("vertex " + vertex + " repeated in cycle") {}
};

class VerifierTimeout : public Error {
 public:
  explicit VerifierTimeout(std::uint64_t max_steps)
      : Error("verifier did not halt within " + std::to_string(max_steps) + " steps"),
        max_steps_(max_steps) {}

  std::uint64_t max_steps() const { return max_steps_; }

 private:
  std::uint64_t max_steps_;
};

class SearchSpaceTooLarge : public Error {
 public:
  explicit SearchSpaceTooLarge(std::uint64_t estimated_size)
      : Error("search space too large (" + std::to_string(estimated_size) + " candidates)"),
        estimated_size_(estimated_size) {}

  std::uint64_t estimated_size() const { return estimated_size_; }

 private:
  std::uint64_t estimated_size_;
};

class ChoiceSpaceTooLarge : public Error {
 public:
  explicit ChoiceSpaceTooLarge(std::uint64_t ceiling)
      : Error("choice tree has more than " + std::to_string(ceiling) + " paths") {}
};

class SourceNotCertified : public Error {
 public:
  explicit SourceNotCertified(const std::string& name)
      : Error(name + " is not a certified NP-complete source") {}
};

class ReductionCheckFailed : public Error {
 public:
  ReductionCheckFailed(const std::string& name, std::size_t mismatches)
      : Error("reduction " + name + " failed its check with " + std::to_string(mismatches) +
              " mismatches") {}
};

class OracleInconsistent : public Error {
 public:
  using Error::Error;
};

}  // namespace nondec
