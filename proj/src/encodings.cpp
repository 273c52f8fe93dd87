#include "nondec/encodings.hpp"

#include <algorithm>
#include <stdexcept>

#include "nondec/errors.hpp"

namespace nondec {

namespace {

bool is_name_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }

// Splits on single separators, rejecting empty pieces. Offsets are kept so
// errors can name the position of the offending byte.
struct Piece {
  std::string_view text;
  std::size_t offset;
};

std::vector<Piece> split_strict(std::string_view text, char sep, std::size_t base) {
  std::vector<Piece> pieces;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      if (i == start) {
        throw MalformedInput(base + i, std::string("empty token before '") + sep + "'");
      }
      pieces.push_back({text.substr(start, i - start), base + start});
      start = i + 1;
    }
  }
  return pieces;
}

void check_name(const Piece& p, std::string_view what) {
  if (p.text.empty()) throw MalformedInput(p.offset, "empty " + std::string(what));
  for (std::size_t i = 0; i < p.text.size(); ++i) {
    if (!is_name_char(p.text[i])) {
      throw MalformedInput(p.offset + i, "invalid character in " + std::string(what));
    }
  }
}

void check_ascii(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 32 || c > 126) throw MalformedInput(i, "non-printable byte");
  }
}

}  // namespace

bool is_ascii_string(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return c >= 32 && c <= 126;
  });
}

bool is_name(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), is_name_char);
}

std::string join(std::span<const std::string> parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------- graphs

bool Graph::has_edge(std::string_view u, std::string_view v) const {
  std::string a(u), b(v);
  if (!directed && b < a) std::swap(a, b);
  return edges.count({a, b}) > 0;
}

Graph Graph::from_edges(const std::vector<Edge>& edges, bool directed,
                        const std::vector<std::string>& isolated) {
  Graph g;
  g.directed = directed;
  for (auto [u, v] : edges) {
    if (!is_name(u) || !is_name(v)) throw MalformedInput(0, "invalid vertex name");
    if (u == v) throw MalformedInput(0, "self-loop on " + u);
    if (!directed && v < u) std::swap(u, v);
    g.vertices.insert(u);
    g.vertices.insert(v);
    if (!g.edges.insert({u, v}).second) throw MalformedInput(0, "duplicate edge " + u + "," + v);
  }
  for (const auto& v : isolated) {
    if (!is_name(v)) throw MalformedInput(0, "invalid vertex name");
    g.vertices.insert(v);
  }
  return g;
}

Graph parse_graph(std::string_view text, bool directed) {
  check_ascii(text);
  Graph g;
  g.directed = directed;
  if (text.empty()) return g;

  std::vector<Piece> isolated;
  for (const Piece& token : split_strict(text, ' ', 0)) {
    auto comma = token.text.find(',');
    if (comma == std::string_view::npos) {
      check_name(token, "vertex name");
      isolated.push_back(token);
      continue;
    }
    auto ends = split_strict(token.text, ',', token.offset);
    if (ends.size() != 2) throw MalformedInput(token.offset, "edge must have two endpoints");
    check_name(ends[0], "vertex name");
    check_name(ends[1], "vertex name");
    std::string u(ends[0].text), v(ends[1].text);
    if (u == v) throw MalformedInput(token.offset, "self-loop");
    if (!directed && v < u) std::swap(u, v);
    g.vertices.insert(u);
    g.vertices.insert(v);
    if (!g.edges.insert({u, v}).second) throw MalformedInput(token.offset, "duplicate edge");
  }
  for (const Piece& p : isolated) {
    if (!g.vertices.insert(std::string(p.text)).second) {
      throw MalformedInput(p.offset, "vertex token for a vertex that is already present");
    }
  }
  return g;
}

std::optional<Graph> try_parse_graph(std::string_view text, bool directed) {
  try {
    return parse_graph(text, directed);
  } catch (const MalformedInput&) {
    return std::nullopt;
  }
}

std::string encode_edge(std::string_view u, std::string_view v) {
  std::string out(u);
  out += ',';
  out += v;
  return out;
}

std::string encode_graph(const Graph& g) {
  std::vector<std::string> tokens;
  std::set<std::string> touched;
  for (const auto& [u, v] : g.edges) {
    tokens.push_back(encode_edge(u, v));
    touched.insert(u);
    touched.insert(v);
  }
  for (const auto& v : g.vertices) {
    if (!touched.count(v)) tokens.push_back(v);
  }
  return join(tokens, ' ');
}

// ---------------------------------------------------------------- CNF

CnfFormula make_cnf(std::vector<Clause> clauses) {
  CnfFormula f;
  for (const auto& c : clauses) {
    if (c.empty()) throw std::invalid_argument("empty clause");
    for (const auto& lit : c) f.variables.insert(lit.var);
  }
  f.clauses = std::move(clauses);
  return f;
}

CnfFormula parse_cnf(std::string_view text) {
  check_ascii(text);
  std::vector<Clause> clauses;
  if (text.empty()) return make_cnf({});
  for (const Piece& clause_text : split_strict(text, ' ', 0)) {
    Clause clause;
    for (Piece lit : split_strict(clause_text.text, ',', clause_text.offset)) {
      bool positive = true;
      if (lit.text.front() == '!') {
        positive = false;
        lit.text.remove_prefix(1);
        ++lit.offset;
      }
      check_name(lit, "variable name");
      clause.insert({std::string(lit.text), positive});
    }
    clauses.push_back(std::move(clause));
  }
  return make_cnf(std::move(clauses));
}

std::optional<CnfFormula> try_parse_cnf(std::string_view text) {
  try {
    return parse_cnf(text);
  } catch (const MalformedInput&) {
    return std::nullopt;
  }
}

std::string encode_cnf(const CnfFormula& f) {
  std::string out;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (i) out += ' ';
    bool first = true;
    for (const auto& lit : f.clauses[i]) {
      if (!first) out += ',';
      first = false;
      if (!lit.positive) out += '!';
      out += lit.var;
    }
  }
  return out;
}

std::string encode_assignment(const Assignment& a, const std::set<std::string>& vars) {
  std::string out;
  for (const auto& v : vars) {
    auto it = a.find(v);
    if (it == a.end()) throw MissingVariable(v);
    if (!out.empty()) out += ' ';
    out += v;
    out += it->second ? "=1" : "=0";
  }
  return out;
}

std::optional<Assignment> parse_assignment(std::string_view text,
                                           const std::set<std::string>& vars) {
  Assignment a;
  std::size_t pos = 0;
  bool first = true;
  for (const auto& v : vars) {
    if (!first) {
      if (pos >= text.size() || text[pos] != ' ') return std::nullopt;
      ++pos;
    }
    first = false;
    if (text.substr(pos, v.size()) != v) return std::nullopt;
    pos += v.size();
    if (pos + 2 > text.size() || text[pos] != '=') return std::nullopt;
    char bit = text[pos + 1];
    if (bit != '0' && bit != '1') return std::nullopt;
    a[v] = bit == '1';
    pos += 2;
  }
  if (pos != text.size()) return std::nullopt;
  return a;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (const auto& lit : clause) {
      auto it = a.find(lit.var);
      if (it != a.end() && it->second == lit.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

// ---------------------------------------------------------------- naturals

Natural::Natural(Int v) : value_(std::move(v)) {
  if (value_ < 0) throw std::invalid_argument("negative natural");
}

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw MalformedInput(0, "empty number");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw MalformedInput(i, "non-digit in number");
  }
  if (text.size() > 1 && text[0] == '0') throw MalformedInput(0, "leading zero");
  Int v = 0;
  for (char c : text) v = v * 10 + (c - '0');
  return Natural(std::move(v));
}

std::optional<Natural> Natural::try_parse(std::string_view text) {
  try {
    return parse(text);
  } catch (const MalformedInput&) {
    return std::nullopt;
  }
}

std::optional<std::uint64_t> Natural::to_u64() const {
  if (value_ > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return value_.convert_to<std::uint64_t>();
}

std::string Natural::to_string() const { return value_.str(); }

// ---------------------------------------------------------------- cycles

std::optional<std::vector<std::string>> split_names(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      auto piece = text.substr(start, i - start);
      if (!is_name(piece)) return std::nullopt;
      names.emplace_back(piece);
      start = i + 1;
    }
  }
  return names;
}

std::string canonical_cycle(std::span<const std::string> seq, bool directed) {
  const std::size_t n = seq.size();
  if (n < 2) throw std::invalid_argument("a cycle needs at least two vertices");
  std::set<std::string_view> seen;
  for (const auto& v : seq) {
    if (!seen.insert(v).second) throw DuplicateVertex(v);
  }
  auto first = static_cast<std::size_t>(std::min_element(seq.begin(), seq.end()) - seq.begin());
  bool backwards = !directed && seq[(first + n - 1) % n] < seq[(first + 1) % n];
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(backwards ? seq[(first + n - k) % n] : seq[(first + k) % n]);
  }
  return join(out, ',');
}

}  // namespace nondec
