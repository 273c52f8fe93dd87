#include "nondec/solvers.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "nondec/encodings.hpp"
#include "nondec/errors.hpp"
#include "nondec/parallel.hpp"

namespace nondec {

namespace {

using Int = Natural::Int;

// ---------------------------------------------------------------- factoring

// Parses a Factor / FactorD instance: a positive integer.
std::optional<Natural> parse_positive(std::string_view w) {
  auto m = Natural::try_parse(w);
  if (!m || m->value() == 0) return std::nullopt;
  return m;
}

struct FactorRange {
  Natural m;
  Natural lo;
  Natural hi;
};

std::optional<FactorRange> parse_factor_range(std::string_view w) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (i == w.size() || w[i] == ' ') {
      parts.push_back(w.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) return std::nullopt;
  auto m = parse_positive(parts[0]);
  auto lo = Natural::try_parse(parts[1]);
  auto hi = Natural::try_parse(parts[2]);
  if (!m || !lo || !hi) return std::nullopt;
  return FactorRange{*m, *lo, *hi};
}

// Nontrivial factors of m inside [lo, hi], by trial division in increasing
// order. A u64 fast path keeps desk-scale loops cheap.
template <class T>
void divisors_in(const T& m, T lo, T hi, StepCounter& steps, bool first_only,
                 std::set<std::string>& out) {
  if (lo < 2) lo = 2;
  if (m < 1) return;
  T top = m - 1;
  if (hi > top) hi = top;
  for (T d = lo; d <= hi; ++d) {
    steps.tick();
    if (m % d == 0) {
      if constexpr (std::is_same_v<T, Int>) {
        out.insert(d.str());
      } else {
        out.insert(std::to_string(d));
      }
      if (first_only) return;
    }
  }
}

void factors_in_range(const Natural& m, const Natural& lo, const Natural& hi, StepCounter& steps,
                      bool first_only, std::set<std::string>& out) {
  auto m64 = m.to_u64();
  auto hi64 = hi.to_u64();
  if (m64 && hi64 && *m64 < (std::uint64_t{1} << 63)) {
    auto lo64 = lo.to_u64();
    if (!lo64) return;
    divisors_in<std::uint64_t>(*m64, *lo64, *hi64, steps, first_only, out);
  } else {
    divisors_in<Int>(m.value(), lo.value(), hi.value(), steps, first_only, out);
  }
}

std::set<std::string> factor_solutions(std::string_view w, StepCounter& steps, bool first_only) {
  std::set<std::string> out;
  auto m = parse_positive(w);
  if (!m) return out;
  factors_in_range(*m, Natural(2), *m, steps, first_only, out);
  return out;
}

bool range_has_factor(std::string_view w, StepCounter& steps) {
  auto r = parse_factor_range(w);
  if (!r) return false;
  std::set<std::string> out;
  factors_in_range(r->m, r->lo, r->hi, steps, true, out);
  return !out.empty();
}

// ---------------------------------------------------------------- cycles

struct IndexedGraph {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> next;  // sorted successor lists
  std::vector<std::vector<char>> adj;
  bool directed = false;

  explicit IndexedGraph(const Graph& g) : names(g.vertices.begin(), g.vertices.end()) {
    directed = g.directed;
    const std::size_t n = names.size();
    next.assign(n, {});
    adj.assign(n, std::vector<char>(n, 0));
    auto index = [&](const std::string& v) {
      return static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), v) - names.begin());
    };
    for (const auto& [u, v] : g.edges) {
      auto i = index(u), j = index(v);
      adj[i][j] = 1;
      if (!directed) adj[j][i] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (adj[i][j]) next[i].push_back(j);
      }
    }
  }
};

// Backtracking from the smallest vertex. In the undirected case every cycle
// is met once per direction; the reflected copy is skipped by requiring the
// second vertex to be smaller than the last.
void extend_cycles(const IndexedGraph& g, std::vector<std::size_t>& path,
                   std::vector<char>& used, StepCounter& steps, bool first_only,
                   std::vector<std::vector<std::string>>& out) {
  steps.tick();
  const std::size_t n = g.names.size();
  if (path.size() == n) {
    if (!g.adj[path.back()][path.front()]) return;
    if (!g.directed && n > 2 && path[1] > path.back()) return;
    std::vector<std::string> cycle;
    for (auto i : path) cycle.push_back(g.names[i]);
    out.push_back(std::move(cycle));
    return;
  }
  for (auto nxt : g.next[path.back()]) {
    if (used[nxt]) continue;
    used[nxt] = 1;
    path.push_back(nxt);
    extend_cycles(g, path, used, steps, first_only, out);
    path.pop_back();
    used[nxt] = 0;
    if (first_only && !out.empty()) return;
  }
}

std::optional<Graph> graph_instance(ProblemId p, std::string_view w) {
  return try_parse_graph(w, is_directed_graph_problem(p));
}

std::set<std::string> cycle_solutions(const Graph& g, StepCounter& steps, bool first_only) {
  std::set<std::string> out;
  for (const auto& c : hamilton_cycles(g, steps, first_only)) out.insert(join(c, ','));
  return out;
}

std::set<std::string> cycle_edge_solutions(const Graph& g, StepCounter& steps, bool first_only) {
  std::set<std::string> out;
  for (const auto& c : hamilton_cycles(g, steps, first_only)) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& u = c[i];
      const auto& v = c[(i + 1) % c.size()];
      out.insert(u < v ? encode_edge(u, v) : encode_edge(v, u));
    }
  }
  return out;
}

// ---------------------------------------------------------------- SAT

struct IndexedCnf {
  std::vector<std::string> vars;
  std::vector<std::vector<std::pair<std::size_t, bool>>> clauses;

  explicit IndexedCnf(const CnfFormula& f) : vars(f.variables.begin(), f.variables.end()) {
    for (const auto& c : f.clauses) {
      std::vector<std::pair<std::size_t, bool>> lits;
      for (const auto& lit : c) {
        auto i = static_cast<std::size_t>(
            std::lower_bound(vars.begin(), vars.end(), lit.var) - vars.begin());
        lits.emplace_back(i, lit.positive);
      }
      clauses.push_back(std::move(lits));
    }
  }

  // Bit i of mask is the value of vars[i].
  bool satisfied_by(std::uint64_t mask, StepCounter& steps) const {
    for (const auto& c : clauses) {
      bool sat = false;
      for (const auto& [i, positive] : c) {
        steps.tick();
        if (((mask >> i) & 1) == static_cast<std::uint64_t>(positive)) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  }

  std::string encode(std::uint64_t mask) const {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) out += ' ';
      out += vars[i];
      out += (mask >> i & 1) ? "=1" : "=0";
    }
    return out;
  }
};

std::set<std::string> sat_solutions(std::string_view w, StepCounter& steps, bool first_only) {
  std::set<std::string> out;
  auto f = try_parse_cnf(w);
  if (!f) return out;
  IndexedCnf cnf(*f);
  if (cnf.vars.size() >= 63) throw BudgetExceeded(steps.max_steps());
  const std::uint64_t total = std::uint64_t{1} << cnf.vars.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    steps.tick();
    if (cnf.satisfied_by(mask, steps)) {
      out.insert(cnf.encode(mask));
      if (first_only) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- dispatch

std::set<std::string> search(ProblemId p, std::string_view w, StepCounter& steps,
                             bool first_only) {
  switch (p) {
    case ProblemId::Factor:
    case ProblemId::FactorD: return factor_solutions(w, steps, first_only);
    case ProblemId::FactorInRangeD: {
      std::set<std::string> out;
      if (range_has_factor(w, steps)) out.insert(std::string(kYes));
      return out;
    }
    case ProblemId::HamCycle:
    case ProblemId::HamCycleD:
    case ProblemId::DirectedHamCycle:
    case ProblemId::DirectedHamCycleD: {
      auto g = graph_instance(p, w);
      if (!g) return {};
      return cycle_solutions(*g, steps, first_only);
    }
    case ProblemId::HamCycleEdge: {
      auto g = graph_instance(p, w);
      if (!g) return {};
      return cycle_edge_solutions(*g, steps, first_only);
    }
    case ProblemId::Sat:
    case ProblemId::SatD: return sat_solutions(w, steps, first_only);
  }
  return {};
}

}  // namespace

std::vector<std::vector<std::string>> hamilton_cycles(const Graph& g, StepCounter& steps,
                                                      bool first_only) {
  std::vector<std::vector<std::string>> out;
  const std::size_t n = g.vertices.size();
  if (n < (g.directed ? 2u : 3u)) return out;
  IndexedGraph ig(g);
  std::vector<std::size_t> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  extend_cycles(ig, path, used, steps, first_only, out);
  return out;
}

bool has_solution(ProblemId p, std::string_view w, StepCounter& steps) {
  return !search(p, w, steps, true).empty();
}

bool has_solution(ProblemId p, std::string_view w, StepBudget budget) {
  StepCounter steps(budget);
  return has_solution(p, w, steps);
}

SolutionSet enumerate_solutions(ProblemId p, std::string_view w, StepCounter& steps) {
  if (is_decision(p)) return has_solution(p, w, steps) ? SolutionSet::yes() : SolutionSet::no();
  return SolutionSet::from_found(search(p, w, steps, false));
}

SolutionSet enumerate_solutions(ProblemId p, std::string_view w, StepBudget budget) {
  StepCounter steps(budget);
  return enumerate_solutions(p, w, steps);
}

namespace {

bool cycle_is_solution(const Graph& g, std::string_view s) {
  auto names = split_names(s);
  if (!names || names->size() != g.vertices.size()) return false;
  try {
    if (canonical_cycle(*names, g.directed) != s) return false;
  } catch (const std::exception&) {
    return false;
  }
  for (std::size_t i = 0; i < names->size(); ++i) {
    const auto& u = (*names)[i];
    const auto& v = (*names)[(i + 1) % names->size()];
    if (!g.vertices.count(u) || !g.has_edge(u, v)) return false;
  }
  return names->size() >= (g.directed ? 2u : 3u);
}

// Is there a Hamilton cycle through the undirected edge u-v? Searches paths
// that start u, v and must close back at u.
bool edge_on_cycle(const Graph& g, const std::string& u, const std::string& v,
                   StepCounter& steps) {
  if (g.vertices.size() < 3 || !g.has_edge(u, v)) return false;
  IndexedGraph ig(g);
  auto index = [&](const std::string& x) {
    return static_cast<std::size_t>(
        std::lower_bound(ig.names.begin(), ig.names.end(), x) - ig.names.begin());
  };
  std::vector<std::size_t> path{index(u), index(v)};
  std::vector<char> used(ig.names.size(), 0);
  used[path[0]] = used[path[1]] = 1;
  auto rec = [&](auto&& self) -> bool {
    steps.tick();
    if (path.size() == ig.names.size()) return ig.adj[path.back()][path.front()] != 0;
    for (auto nxt : ig.next[path.back()]) {
      if (used[nxt]) continue;
      used[nxt] = 1;
      path.push_back(nxt);
      bool found = self(self);
      path.pop_back();
      used[nxt] = 0;
      if (found) return true;
    }
    return false;
  };
  return rec(rec);
}

}  // namespace

bool check_solution(ProblemId p, std::string_view w, std::string_view s, StepBudget budget) {
  StepCounter steps(budget);
  if (is_decision(p)) {
    if (s != kYes && s != kNo) return false;
    return has_solution(p, w, steps) == (s == kYes);
  }
  if (s == kNo) return !has_solution(p, w, steps);

  switch (p) {
    case ProblemId::Factor: {
      auto m = parse_positive(w);
      auto d = Natural::try_parse(s);
      if (!m || !d) return false;
      return d->value() >= 2 && d->value() < m->value() && m->value() % d->value() == 0;
    }
    case ProblemId::HamCycle:
    case ProblemId::DirectedHamCycle: {
      auto g = graph_instance(p, w);
      return g && cycle_is_solution(*g, s);
    }
    case ProblemId::HamCycleEdge: {
      auto g = graph_instance(p, w);
      auto ends = split_names(s);
      if (!g || !ends || ends->size() != 2 || !((*ends)[0] < (*ends)[1])) return false;
      return edge_on_cycle(*g, (*ends)[0], (*ends)[1], steps);
    }
    case ProblemId::Sat: {
      auto f = try_parse_cnf(w);
      if (!f) return false;
      auto a = parse_assignment(s, f->variables);
      return a && satisfies(*f, *a);
    }
    default: return false;
  }
}

std::string canonicalize_solution(ProblemId p, std::string_view w, std::string_view s) {
  (void)w;
  if (p == ProblemId::HamCycle || p == ProblemId::DirectedHamCycle) {
    auto names = split_names(s);
    if (!names || names->size() < 2) return std::string(s);
    try {
      return canonical_cycle(*names, p == ProblemId::DirectedHamCycle);
    } catch (const std::exception&) {
      return std::string(s);
    }
  }
  if (p == ProblemId::HamCycleEdge) {
    auto ends = split_names(s);
    if (ends && ends->size() == 2 && (*ends)[1] < (*ends)[0]) {
      return encode_edge((*ends)[1], (*ends)[0]);
    }
  }
  return std::string(s);
}

// ---------------------------------------------------------------- programs

Outcome run_program(const Program& prog, std::string_view w, StepBudget budget) {
  StepCounter steps(budget);
  try {
    steps.tick();  // call
    std::string out = prog.body(w, steps);
    steps.tick();  // output
    if (!is_ascii_string(out)) {
      throw std::logic_error("program " + prog.name + " emitted a non-ASCII output");
    }
    return Outcome::make_output(std::move(out), steps.used());
  } catch (const BudgetExceeded&) {
    if (!steps.exhausted()) throw;
    return Outcome::make_timeout(steps.used());
  }
}

Program trial_division_program() {
  return {"trial-division-factor", [](std::string_view w, StepCounter& steps) {
            auto found = factor_solutions(w, steps, true);
            return found.empty() ? std::string(kNo) : *found.begin();
          }};
}

Program constant_program(std::string output) {
  return {"constant-" + output, [output](std::string_view, StepCounter&) { return output; }};
}

Program always_no_program() { return {"always-no", [](std::string_view, StepCounter&) { return std::string(kNo); }}; }

Program brute_force_program(ProblemId p) {
  return {"brute-force-" + std::string(to_string(p)), [p](std::string_view w, StepCounter& steps) {
            return *enumerate_solutions(p, w, steps).begin();
          }};
}

// ---------------------------------------------------------------- solves

std::string SolvesReport::to_records() const {
  std::ostringstream out;
  out << "# instance\tverdict\tdetail\n";
  for (const auto& r : violations) out << r.instance << '\t' << r.verdict << '\t' << r.detail << '\n';
  return out.str();
}

SolvesReport solves_on_space(const Program& prog, ProblemId p, const InstanceSpace& space,
                             StepBudget program_budget, StepBudget oracle_budget,
                             unsigned threads) {
  auto per_instance = parallel_map(space.size(), threads, [&](std::size_t i) {
    const std::string& w = space[i];
    std::optional<SolvesRecord> violation;
    Outcome o = run_program(prog, w, program_budget);
    if (o.timed_out()) {
      violation = SolvesRecord{w, "timeout", "steps=" + std::to_string(o.steps_used)};
      return violation;
    }
    SolutionSet expected = enumerate_solutions(p, w, oracle_budget);
    if (!expected.contains(o.output)) {
      std::string detail = "output=" + o.output + " expected=" + *expected.begin();
      if (expected.size() > 1) detail += "|...";
      violation = SolvesRecord{w, "wrong-output", detail};
    }
    return violation;
  });
  SolvesReport report;
  report.instances_checked = space.size();
  for (auto& v : per_instance) {
    if (v) report.violations.push_back(std::move(*v));
  }
  return report;
}

}  // namespace nondec
