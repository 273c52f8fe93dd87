#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

namespace nondec {

inline constexpr std::string_view kNo = "no";
inline constexpr std::string_view kYes = "yes";

// A finite, nonempty set of solution strings: either exactly {"no"} (the
// instance is negative) or a set that does not contain "no".
class SolutionSet {
 public:
  // An empty set of found solutions means the instance is negative.
  static SolutionSet from_found(std::set<std::string> found);
  static SolutionSet no();
  static SolutionSet yes();

  // Throws std::invalid_argument if members mix "no" with other strings or
  // are empty.
  SolutionSet(std::initializer_list<std::string> members);
  explicit SolutionSet(std::set<std::string> members);

  bool is_negative() const;
  bool contains(std::string_view s) const { return members_.find(std::string(s)) != members_.end(); }
  std::size_t size() const { return members_.size(); }
  const std::set<std::string>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;

 private:
  std::set<std::string> members_;
};

}  // namespace nondec
