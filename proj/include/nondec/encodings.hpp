#pragma once

// Grammars and canonical ASCII encodings for the objects every problem is
// stated over.
//
//   graph      := "" | token (" " token)*
//   token      := name | name "," name          (isolated vertex | edge)
//   cnf        := "" | clause (" " clause)*
//   clause     := literal ("," literal)*
//   literal    := name | "!" name
//   assignment := "" | name "=" bit (" " name "=" bit)*
//   cycle      := name ("," name)+
//   name       := [a-z0-9]+
//
// Separators are always a single character; leading or trailing separators
// are rejected.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nondec {

// True when every byte is printable ASCII (32..126).
bool is_ascii_string(std::string_view text);

// True when text is a nonempty string over [a-z0-9].
bool is_name(std::string_view text);

using Edge = std::pair<std::string, std::string>;

struct Graph {
  std::set<std::string> vertices;
  std::set<Edge> edges;  // undirected edges have first < second
  bool directed = false;

  bool has_edge(std::string_view u, std::string_view v) const;
  std::size_t size() const { return vertices.size(); }

  // Builds a graph from edges (and extra isolated vertices), normalizing
  // undirected endpoint order. Throws MalformedInput on self-loops,
  // duplicate edges or invalid names.
  static Graph from_edges(const std::vector<Edge>& edges, bool directed,
                          const std::vector<std::string>& isolated = {});

  friend bool operator==(const Graph&, const Graph&) = default;
};

Graph parse_graph(std::string_view text, bool directed);
std::optional<Graph> try_parse_graph(std::string_view text, bool directed);

// Edges in lexicographic order, then isolated vertices in lexicographic order.
std::string encode_graph(const Graph& g);

std::string encode_edge(std::string_view u, std::string_view v);

struct Literal {
  std::string var;
  bool positive = true;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::set<Literal>;

struct CnfFormula {
  std::set<std::string> variables;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

CnfFormula parse_cnf(std::string_view text);
std::optional<CnfFormula> try_parse_cnf(std::string_view text);

// Clauses in their stored order; literals within a clause sorted by variable,
// positive before negative.
std::string encode_cnf(const CnfFormula& f);

// Recomputes the variable set from the clauses.
CnfFormula make_cnf(std::vector<Clause> clauses);

using Assignment = std::map<std::string, bool>;

// "v1=b1 v2=b2 ..." over vars in lexicographic order. Throws MissingVariable
// when a variable of vars has no value in a.
std::string encode_assignment(const Assignment& a, const std::set<std::string>& vars);

// Accepts exactly the canonical encoding of some total assignment of vars.
std::optional<Assignment> parse_assignment(std::string_view text,
                                           const std::set<std::string>& vars);

bool satisfies(const CnfFormula& f, const Assignment& a);

// Arbitrary-precision nonnegative integer with canonical decimal encoding.
class Natural {
 public:
  using Int = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Natural(Int v);

  // Decimal digits without leading zeros ("0" alone is allowed).
  static Natural parse(std::string_view text);
  static std::optional<Natural> try_parse(std::string_view text);

  const Int& value() const { return value_; }
  std::optional<std::uint64_t> to_u64() const;
  std::string to_string() const;

  friend bool operator==(const Natural&, const Natural&) = default;
  friend auto operator<=>(const Natural& a, const Natural& b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
           : b.value_ < a.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  Int value_ = 0;
};

// Splits "u,v,w" into names. Returns nullopt unless every piece is a name.
std::optional<std::vector<std::string>> split_names(std::string_view text);

// Canonical representative of the cycle visiting seq in order: rotated so the
// smallest vertex comes first and, for undirected cycles, oriented so its
// successor is the smaller of its two neighbours. Throws DuplicateVertex, and
// std::invalid_argument for fewer than two vertices.
std::string canonical_cycle(std::span<const std::string> seq, bool directed);

std::string join(std::span<const std::string> parts, char sep);

}  // namespace nondec
