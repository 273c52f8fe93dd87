#pragma once

// Finite instance spaces used by the exhaustive checkers. Every generator
// returns canonical encodings in a fixed order, so reports built from them
// are reproducible byte for byte.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nondec {

using InstanceSpace = std::vector<std::string>;

// a, b, ..., z, ba, bb, ... (base 26, names stay in [a-z]).
std::string vertex_name(std::size_t index);

// All labeled simple graphs on exactly the first n vertex names.
InstanceSpace graphs_on(std::size_t n, bool directed);

// All labeled simple graphs whose vertex set is a prefix {a}, {a,b}, ... of
// length at most max_vertices, plus the empty graph.
InstanceSpace all_graphs(std::size_t max_vertices, bool directed);

// The n-cycle a-b-...-a (n >= 3), or the directed n-cycle.
std::string cycle_graph(std::size_t n, bool directed = false);

InstanceSpace naturals(std::uint64_t lo, std::uint64_t hi);

// Every CNF over the first max_vars names whose clauses form a set of at most
// max_clauses distinct non-tautological clauses, listed in a fixed order.
// Includes the empty formula.
InstanceSpace all_cnfs(std::size_t max_vars, std::size_t max_clauses);

// Random CNFs with 1..max_vars variables, 1..5*vars clauses of width 1..3.
InstanceSpace random_cnfs(std::size_t count, std::size_t max_vars, std::uint64_t seed);

// All strings over alphabet of length at most max_len, shortest first.
InstanceSpace all_strings(std::string_view alphabet, std::size_t max_len);

// Parses a space description:
//   graphs:N  digraphs:N  naturals:LO..HI  cnfs:VxC  strings:ALPHABET:L
// Throws std::invalid_argument on anything else.
InstanceSpace parse_space(std::string_view description);

}  // namespace nondec
