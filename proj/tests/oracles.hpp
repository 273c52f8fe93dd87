#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: their own parsing, their own canonical forms, plain loops.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Assumes well-formed input: tokens "u,v" or "u".
struct SimpleGraph {
  std::vector<std::string> vertices;  // sorted
  std::set<std::pair<std::string, std::string>> arcs;  // both directions when undirected
  std::size_t edge_count = 0;
};

inline SimpleGraph read_graph(const std::string& text, bool directed) {
  SimpleGraph g;
  std::set<std::string> vs;
  for (const auto& tok : split(text, ' ')) {
    auto ends = split(tok, ',');
    for (const auto& v : ends) vs.insert(v);
    if (ends.size() == 2) {
      g.arcs.insert({ends[0], ends[1]});
      if (!directed) g.arcs.insert({ends[1], ends[0]});
      ++g.edge_count;
    }
  }
  g.vertices.assign(vs.begin(), vs.end());
  return g;
}

// Smallest string among all rotations (and reflections when undirected).
inline std::string canonical(std::vector<std::string> cycle, bool directed) {
  std::string best;
  bool have = false;
  for (int pass = 0; pass < (directed ? 1 : 2); ++pass) {
    for (std::size_t r = 0; r < cycle.size(); ++r) {
      std::vector<std::string> rot(cycle.begin() + static_cast<long>(r), cycle.end());
      rot.insert(rot.end(), cycle.begin(), cycle.begin() + static_cast<long>(r));
      // Compare vertex-wise so names of different lengths order correctly.
      std::string s = join(rot, ',');
      if (!have || rot < split(best, ',')) {
        best = s;
        have = true;
      }
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return best;
}

// Every Hamilton cycle, by enumerating all vertex orders.
inline std::set<std::string> hamilton_cycles(const std::string& text, bool directed) {
  SimpleGraph g = read_graph(text, directed);
  std::set<std::string> out;
  std::size_t n = g.vertices.size();
  if (n < (directed ? 2u : 3u)) return out;
  std::vector<std::string> order = g.vertices;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = g.arcs.count({order[i], order[(i + 1) % n]}) > 0;
    }
    if (ok) out.insert(canonical(order, directed));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline std::set<std::string> factors(std::uint64_t m) {
  std::set<std::string> out;
  for (std::uint64_t d = 2; d < m; ++d) {
    if (m % d == 0) out.insert(std::to_string(d));
  }
  return out;
}

struct Lit {
  std::string var;
  bool positive;
};

inline std::vector<std::vector<Lit>> read_cnf(const std::string& text) {
  std::vector<std::vector<Lit>> clauses;
  for (const auto& c : split(text, ' ')) {
    std::vector<Lit> clause;
    for (const auto& l : split(c, ',')) {
      if (!l.empty() && l[0] == '!') {
        clause.push_back({l.substr(1), false});
      } else {
        clause.push_back({l, true});
      }
    }
    clauses.push_back(clause);
  }
  return clauses;
}

inline std::vector<std::string> cnf_variables(const std::string& text) {
  std::set<std::string> vs;
  for (const auto& c : read_cnf(text)) {
    for (const auto& l : c) vs.insert(l.var);
  }
  return {vs.begin(), vs.end()};
}

inline bool evaluate(const std::string& text, const std::map<std::string, bool>& a) {
  for (const auto& c : read_cnf(text)) {
    bool sat = false;
    for (const auto& l : c) sat = sat || a.at(l.var) == l.positive;
    if (!sat) return false;
  }
  return true;
}

// Satisfying assignments in "v=b v=b" form.
inline std::set<std::string> satisfying(const std::string& text) {
  std::set<std::string> out;
  auto vars = cnf_variables(text);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
    std::map<std::string, bool> a;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      bool b = (mask >> i) & 1u;
      a[vars[i]] = b;
      parts.push_back(vars[i] + "=" + (b ? "1" : "0"));
    }
    if (evaluate(text, a)) out.insert(join(parts, ' '));
  }
  return out;
}

}  // namespace oracle
