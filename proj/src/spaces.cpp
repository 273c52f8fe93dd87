#include "nondec/spaces.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "nondec/encodings.hpp"

namespace nondec {

std::string vertex_name(std::size_t index) {
  std::string name;
  do {
    name.insert(name.begin(), static_cast<char>('a' + index % 26));
    index /= 26;
  } while (index > 0);
  return name;
}

InstanceSpace graphs_on(std::size_t n, bool directed) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(vertex_name(i));
  std::vector<Edge> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || (!directed && j < i)) continue;
      slots.emplace_back(names[i], names[j]);
    }
  }
  if (slots.size() > 24) throw std::invalid_argument("too many graphs to enumerate");
  InstanceSpace out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask >> k & 1) edges.push_back(slots[k]);
    }
    out.push_back(encode_graph(Graph::from_edges(edges, directed, names)));
  }
  return out;
}

InstanceSpace all_graphs(std::size_t max_vertices, bool directed) {
  InstanceSpace out{""};
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    auto g = graphs_on(n, directed);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

std::string cycle_graph(std::size_t n, bool directed) {
  if (n < (directed ? 2u : 3u)) throw std::invalid_argument("cycle too short");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vertex_name(i), vertex_name((i + 1) % n));
  return encode_graph(Graph::from_edges(edges, directed));
}

InstanceSpace naturals(std::uint64_t lo, std::uint64_t hi) {
  InstanceSpace out;
  for (std::uint64_t m = lo; m <= hi; ++m) out.push_back(std::to_string(m));
  return out;
}

InstanceSpace all_cnfs(std::size_t max_vars, std::size_t max_clauses) {
  // Each variable is absent, positive or negative in a clause.
  std::vector<Clause> clauses;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < max_vars; ++i) combos *= 3;
  for (std::size_t code = 1; code < combos; ++code) {
    Clause c;
    std::size_t rest = code;
    for (std::size_t v = 0; v < max_vars; ++v, rest /= 3) {
      if (rest % 3 == 1) c.insert({vertex_name(v), true});
      if (rest % 3 == 2) c.insert({vertex_name(v), false});
    }
    clauses.push_back(std::move(c));
  }

  InstanceSpace out;
  std::vector<std::size_t> pick;
  // Strictly increasing index tuples enumerate sets of distinct clauses.
  auto emit = [&] {
    std::vector<Clause> chosen;
    for (auto i : pick) chosen.push_back(clauses[i]);
    out.push_back(encode_cnf(make_cnf(std::move(chosen))));
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    emit();
    if (pick.size() == max_clauses) return;
    for (std::size_t i = from; i < clauses.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

InstanceSpace random_cnfs(std::size_t count, std::size_t max_vars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InstanceSpace out;
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t vars = std::uniform_int_distribution<std::size_t>(1, max_vars)(rng);
    std::size_t n_clauses = std::uniform_int_distribution<std::size_t>(1, 5 * vars)(rng);
    std::vector<Clause> clauses;
    for (std::size_t c = 0; c < n_clauses; ++c) {
      std::size_t width = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, vars))(rng);
      Clause clause;
      while (clause.size() < width) {
        std::string v = vertex_name(std::uniform_int_distribution<std::size_t>(0, vars - 1)(rng));
        bool positive = std::bernoulli_distribution(0.5)(rng);
        if (clause.count({v, !positive})) continue;
        clause.insert({v, positive});
      }
      clauses.push_back(std::move(clause));
    }
    out.push_back(encode_cnf(make_cnf(std::move(clauses))));
  }
  return out;
}

InstanceSpace all_strings(std::string_view alphabet, std::size_t max_len) {
  InstanceSpace out{""};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    level_start = level_end;
  }
  return out;
}

namespace {

std::uint64_t to_number(std::string_view text) {
  auto n = Natural::try_parse(text);
  if (!n || !n->to_u64()) throw std::invalid_argument("bad number in space: " + std::string(text));
  return *n->to_u64();
}

}  // namespace

InstanceSpace parse_space(std::string_view description) {
  auto colon = description.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("space must look like kind:args");
  }
  auto kind = description.substr(0, colon);
  auto args = description.substr(colon + 1);
  if (kind == "graphs" || kind == "digraphs") {
    return all_graphs(to_number(args), kind == "digraphs");
  }
  if (kind == "naturals") {
    auto dots = args.find("..");
    if (dots == std::string_view::npos) throw std::invalid_argument("naturals:LO..HI expected");
    return naturals(to_number(args.substr(0, dots)), to_number(args.substr(dots + 2)));
  }
  if (kind == "cnfs") {
    auto x = args.find('x');
    if (x == std::string_view::npos) throw std::invalid_argument("cnfs:VxC expected");
    return all_cnfs(to_number(args.substr(0, x)), to_number(args.substr(x + 1)));
  }
  if (kind == "strings") {
    auto last = args.rfind(':');
    if (last == std::string_view::npos) throw std::invalid_argument("strings:ALPHABET:L expected");
    return all_strings(args.substr(0, last), to_number(args.substr(last + 1)));
  }
  throw std::invalid_argument("unknown space kind: " + std::string(kind));
}

}  // namespace nondec
