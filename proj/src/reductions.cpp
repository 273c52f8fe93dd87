#include "nondec/reductions.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nondec/errors.hpp"
#include "nondec/parallel.hpp"
#include "nondec/solution_set.hpp"

namespace nondec {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

std::string verdict(bool positive) { return positive ? "positive" : "negative"; }

std::string identity_map(std::string_view w, StepCounter& steps) {
  steps.tick(w.size() + 1);
  return std::string(w);
}

const std::array<std::string_view, 3> kRoles = {"in", "mid", "out"};

std::string gadget_name(const std::string& v, std::string_view role) {
  return "0" + v + std::string(role);
}

// Splits a gadget vertex name into its original vertex and role index.
std::optional<std::pair<std::string, int>> split_gadget_name(std::string_view name) {
  if (name.size() < 2 || name.front() != '0') return std::nullopt;
  for (int r = 2; r >= 0; --r) {
    auto role = kRoles[static_cast<std::size_t>(r)];
    if (name.size() > role.size() + 1 && name.ends_with(role)) {
      return std::pair{std::string(name.substr(1, name.size() - 1 - role.size())), r};
    }
  }
  return std::nullopt;
}

std::string gadget_map(std::string_view w, StepCounter& steps) {
  steps.tick(w.size() + 1);
  auto g = try_parse_graph(w, true);
  if (!g) return "";
  std::string out = encode_graph(split_vertex_gadget(*g, steps));
  steps.tick(out.size());
  return out;
}

std::string drop_first_arc_map(std::string_view w, StepCounter& steps) {
  steps.tick(w.size() + 1);
  auto g = try_parse_graph(w, true);
  if (!g) return "";
  if (!g->edges.empty()) {
    // Keep both endpoints so only the arc disappears.
    g->edges.erase(g->edges.begin());
  }
  std::string out = encode_graph(split_vertex_gadget(*g, steps));
  steps.tick(out.size());
  return out;
}

// Contracts a canonical cycle of the gadget graph back to the directed cycle
// it came from. Anything that is not such a cycle maps to "no".
std::string contract_cycle(std::string_view g, bool reverse_order) {
  if (g == kNo) return std::string(kNo);
  auto names = split_names(g);
  if (!names || names->size() < 6 || names->size() % 3 != 0) return std::string(kNo);
  std::vector<std::pair<std::string, int>> parts;
  for (const auto& n : *names) {
    auto p = split_gadget_name(n);
    if (!p) return std::string(kNo);
    parts.push_back(*p);
  }
  // Orient so that each in is followed by its mid.
  std::size_t k = parts.size();
  std::size_t first_in = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (parts[i].second == 0) {
      first_in = i;
      break;
    }
  }
  if (first_in == k) return std::string(kNo);
  const auto& next = parts[(first_in + 1) % k];
  if (!(next.second == 1 && next.first == parts[first_in].first)) {
    std::reverse(parts.begin(), parts.end());
  }
  std::vector<std::string> seq;
  for (const auto& [v, role] : parts) {
    if (role == 0) seq.push_back(v);
  }
  if (reverse_order) std::reverse(seq.begin(), seq.end());
  try {
    return canonical_cycle(seq, true);
  } catch (const std::exception&) {
    return std::string(kNo);
  }
}

ReductionReport merge_rows(std::string name, std::vector<std::pair<ReductionRecord, std::uint64_t>> rows,
                           const std::vector<std::uint64_t>& budgets, std::uint64_t calls_per_row) {
  ReductionReport report;
  report.reduction = std::move(name);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& [row, steps] = rows[i];
    if (i == 0 || steps > report.max_map_steps) {
      report.max_map_steps = steps;
      report.budget_at_max = budgets[i];
    }
    report.oracle_calls += calls_per_row;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

StepBudget PolynomialBudget::operator()(std::size_t n) const {
  return {sat_mul(coefficient, sat_pow(std::max<std::uint64_t>(n, 1), degree))};
}

Polyreduction make_polyreduction(std::string name, ProblemId source, ProblemId target,
                                 InstanceMap map, PolynomialBudget budget) {
  if (!is_decision(source)) {
    throw std::invalid_argument(std::string(to_string(source)) + " is not a decision problem");
  }
  return {std::move(name), source, target, std::move(map), budget};
}

std::string apply_polyreduction(const Polyreduction& red, std::string_view w) {
  StepCounter steps(red.budget(w.size()));
  return red.map(w, steps);
}

bool ReductionReport::ok() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const ReductionRecord& r) { return r.status != "ok"; });
}

std::vector<ReductionRecord> ReductionReport::mismatches() const {
  std::vector<ReductionRecord> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
               [](const ReductionRecord& r) { return r.status != "ok"; });
  return out;
}

std::string ReductionReport::to_records() const {
  std::ostringstream out;
  out << "# instance\tsource_verdict\ttarget_verdict\tstatus\n";
  for (const auto& r : rows) {
    out << r.instance << '\t' << r.source_verdict << '\t' << r.target_verdict << '\t' << r.status
        << '\n';
  }
  out << "# summary\toracle_calls=" << oracle_calls << "\tmax_map_steps=" << max_map_steps
      << "\tbudget_at_max=" << budget_at_max << "\tmismatches=" << mismatches().size() << '\n';
  return out.str();
}

ReductionReport check_polyreduction(const Polyreduction& red, const InstanceSpace& space,
                                    StepBudget oracle_budget, unsigned threads) {
  auto rows = parallel_map(space.size(), threads, [&](std::size_t i) {
    const std::string& w = space[i];
    StepCounter steps(red.budget(w.size()));
    std::string mapped = red.map(w, steps);
    bool source = has_solution(red.source, w, oracle_budget);
    bool target = has_solution(red.target, mapped, oracle_budget);
    ReductionRecord row{w, verdict(source), verdict(target), source == target ? "ok" : "mismatch",
                        mapped};
    return std::pair{row, steps.used()};
  });
  std::vector<std::uint64_t> budgets;
  for (const auto& w : space) budgets.push_back(red.budget(w.size()).max_steps);
  return merge_rows(red.name, std::move(rows), budgets, 2);
}

Polyreduction compose(const Polyreduction& first, const Polyreduction& second) {
  if (decision_of(first.target) != second.source) {
    throw std::invalid_argument("cannot compose " + first.name + " with " + second.name);
  }
  // |r1(w)| <= b1(n) because maps charge a step per output byte, so
  // b1(n) + b2(b1(n)) <= (c1 + c2 * c1^k2) * n^(k1 * k2) for n >= 1.
  PolynomialBudget budget{
      sat_add(first.budget.coefficient,
              sat_mul(second.budget.coefficient,
                      sat_pow(first.budget.coefficient, second.budget.degree))),
      std::max(first.budget.degree * second.budget.degree, first.budget.degree)};
  InstanceMap map = [f = first.map, s = second.map](std::string_view w, StepCounter& steps) {
    std::string mid = f(w, steps);
    return s(mid, steps);
  };
  return {second.name + " . " + first.name, first.source, second.target, std::move(map), budget};
}

std::string apply_general_reduction(const GeneralReduction& gr, const Program& target_solver,
                                    std::string_view w, StepBudget solver_budget) {
  StepCounter steps(gr.budget(w.size()));
  std::string mapped = gr.map(w, steps);
  Outcome out = run_program(target_solver, mapped, solver_budget);
  if (out.timed_out()) throw BudgetExceeded(solver_budget.max_steps);
  return gr.map_back(out.output);
}

ReductionReport check_general_reduction(const GeneralReduction& gr, const InstanceSpace& space,
                                        StepBudget oracle_budget, unsigned threads) {
  auto rows = parallel_map(space.size(), threads, [&](std::size_t i) {
    const std::string& w = space[i];
    StepCounter steps(gr.budget(w.size()));
    std::string mapped = gr.map(w, steps);
    SolutionSet source = enumerate_solutions(gr.source, w, oracle_budget);
    SolutionSet target = enumerate_solutions(gr.target, mapped, oracle_budget);
    ReductionRecord row{w, verdict(!source.is_negative()), verdict(!target.is_negative()), "ok",
                        ""};
    if (source.is_negative() != target.is_negative()) {
      row.status = "mismatch";
    } else {
      for (const auto& g : target) {
        std::string back = gr.map_back(g);
        if (!source.contains(back)) {
          row.status = "bad-map-back";
          row.detail = g + " -> " + back;
          break;
        }
      }
    }
    return std::pair{row, steps.used()};
  });
  std::vector<std::uint64_t> budgets;
  for (const auto& w : space) budgets.push_back(gr.budget(w.size()).max_steps);
  return merge_rows(gr.name, std::move(rows), budgets, 2);
}

Graph split_vertex_gadget(const Graph& directed, StepCounter& steps) {
  Graph out;
  out.directed = false;
  for (const auto& v : directed.vertices) {
    steps.tick(3);
    for (auto role : kRoles) out.vertices.insert(gadget_name(v, role));
    out.edges.emplace(gadget_name(v, "in"), gadget_name(v, "mid"));
    out.edges.emplace(gadget_name(v, "mid"), gadget_name(v, "out"));
  }
  for (const auto& [u, v] : directed.edges) {
    steps.tick();
    std::string a = gadget_name(u, "out");
    std::string b = gadget_name(v, "in");
    if (b < a) std::swap(a, b);
    out.edges.emplace(a, b);
  }
  return out;
}

Polyreduction get_reduction(std::string_view name) {
  if (name == "hamcycled-to-hamcycle") {
    return make_polyreduction(std::string(name), ProblemId::HamCycleD, ProblemId::HamCycle,
                              identity_map);
  }
  if (name == "directed-to-undirected") {
    return make_polyreduction(std::string(name), ProblemId::DirectedHamCycleD,
                              ProblemId::HamCycleD, gadget_map);
  }
  if (name == "directed-to-undirected-broken") {
    return make_polyreduction(std::string(name), ProblemId::DirectedHamCycleD,
                              ProblemId::HamCycleD, drop_first_arc_map);
  }
  if (name == "satd-to-satd") {
    return make_polyreduction(std::string(name), ProblemId::SatD, ProblemId::SatD, identity_map);
  }
  throw UnknownKind(std::string(name));
}

std::vector<std::string> reduction_names() {
  return {"hamcycled-to-hamcycle", "directed-to-undirected", "directed-to-undirected-broken",
          "satd-to-satd"};
}

GeneralReduction get_general_reduction(std::string_view name) {
  if (name == "hamcycle-identity") {
    return {std::string(name), ProblemId::HamCycle, ProblemId::HamCycle, identity_map,
            [](std::string_view g) { return std::string(g); }};
  }
  if (name == "directed-to-undirected") {
    return {std::string(name), ProblemId::DirectedHamCycle, ProblemId::HamCycle, gadget_map,
            [](std::string_view g) { return contract_cycle(g, false); }};
  }
  if (name == "directed-to-undirected-reversed") {
    return {std::string(name), ProblemId::DirectedHamCycle, ProblemId::HamCycle, gadget_map,
            [](std::string_view g) { return contract_cycle(g, true); }};
  }
  throw UnknownKind(std::string(name));
}

std::vector<std::string> general_reduction_names() {
  return {"hamcycle-identity", "directed-to-undirected", "directed-to-undirected-reversed"};
}

std::span<const ProblemId> certified_np_complete() {
  static constexpr std::array<ProblemId, 2> kCertified = {ProblemId::HamCycleD, ProblemId::SatD};
  return kCertified;
}

InstanceSpace default_reduction_space(ProblemId source) {
  if (is_graph_problem(source)) return all_graphs(4, is_directed_graph_problem(source));
  switch (source) {
    case ProblemId::Sat:
    case ProblemId::SatD:
      return all_cnfs(3, 3);
    case ProblemId::Factor:
    case ProblemId::FactorD:
      return naturals(0, 200);
    default:
      return all_strings("0123456789 ", 3);
  }
}

NpHardJudgment np_hard_via(const Polyreduction& red, ProblemId certified_source,
                           const std::optional<InstanceSpace>& space) {
  auto certified = certified_np_complete();
  if (std::find(certified.begin(), certified.end(), certified_source) == certified.end()) {
    throw SourceNotCertified(std::string(to_string(certified_source)));
  }
  if (red.source != certified_source) throw SourceNotCertified(std::string(to_string(red.source)));
  InstanceSpace instances = space ? *space : default_reduction_space(certified_source);
  ReductionReport report = check_polyreduction(red, instances);
  if (!report.ok()) throw ReductionCheckFailed(red.name, report.mismatches().size());
  std::string target(to_string(red.target));
  std::string label = target + " is NP-hard relative to shipped certifications (via " + red.name +
                      " from " + std::string(to_string(certified_source)) +
                      "; desk-scale certification over " + std::to_string(instances.size()) +
                      " instances, not a proof)";
  return {target, std::move(label), std::move(report)};
}

DecisionOracle DecisionOracle::exact(ProblemId p, StepBudget budget) {
  return DecisionOracle([p, budget](std::string_view w) { return has_solution(p, w, budget); });
}

std::string DecisionOracle::ask(std::string_view instance) {
  queries_.emplace_back(instance);
  return answer_(instance) ? std::string(kYes) : std::string(kNo);
}

std::string factor_search_via_oracle(const Natural& m, DecisionOracle& oracle) {
  using Int = Natural::Int;
  const Int& n = m.value();
  if (n < 2) return std::string(kNo);
  auto query = [&](const Int& lo, const Int& hi) {
    return oracle.ask(m.to_string() + " " + Natural(lo).to_string() + " " + Natural(hi).to_string()) ==
           kYes;
  };
  Int lo = 2;
  Int hi = n - 1;
  if (!query(lo, hi)) return std::string(kNo);
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (query(lo, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo < 2 || lo >= n || n % lo != 0) {
    throw OracleInconsistent("oracle answers narrowed to " + Natural(lo).to_string() +
                             ", which does not divide " + m.to_string());
  }
  return Natural(lo).to_string();
}

std::uint64_t factor_search_call_bound(const Natural& m) {
  if (m.value() < 2) return 2;
  // ceil(log2 m) = bit length of m - 1.
  Natural::Int v = m.value() - 1;
  std::uint64_t bits = v == 0 ? 0 : boost::multiprecision::msb(v) + 1;
  return 2 * bits + 2;
}

std::string hamcycle_search_via_oracle(const Graph& g, DecisionOracle& oracle) {
  if (oracle.ask(encode_graph(g)) == kNo) return std::string(kNo);
  Graph current = g;
  for (const auto& e : g.edges) {
    if (current.edges.size() <= current.vertices.size()) break;
    Graph without = current;
    without.edges.erase(e);
    if (oracle.ask(encode_graph(without)) == kYes) current = std::move(without);
  }
  StepCounter steps;
  auto cycles = hamilton_cycles(current, steps);
  if (current.edges.size() != current.vertices.size() || cycles.size() != 1) {
    throw OracleInconsistent("surviving edges " + encode_graph(current) +
                             " do not form a single Hamilton cycle");
  }
  return canonical_cycle(cycles.front(), g.directed);
}

std::optional<CnfFormula> substitute(const CnfFormula& f, const std::string& var, bool value) {
  std::vector<Clause> out;
  for (const auto& clause : f.clauses) {
    if (clause.count(Literal{var, value})) continue;
    Clause reduced = clause;
    reduced.erase(Literal{var, !value});
    if (reduced.empty()) return std::nullopt;
    out.push_back(std::move(reduced));
  }
  return make_cnf(std::move(out));
}

std::string sat_search_via_oracle(const CnfFormula& f, DecisionOracle& oracle) {
  if (oracle.ask(encode_cnf(f)) == kNo) return std::string(kNo);
  CnfFormula current = f;
  Assignment a;
  for (const auto& v : f.variables) {
    auto with_true = substitute(current, v, true);
    if (with_true && oracle.ask(encode_cnf(*with_true)) == kYes) {
      current = std::move(*with_true);
      a[v] = true;
      continue;
    }
    auto with_false = substitute(current, v, false);
    if (!with_false) {
      throw OracleInconsistent("both values of " + v + " falsify the formula");
    }
    current = std::move(*with_false);
    a[v] = false;
  }
  if (!satisfies(f, a)) throw OracleInconsistent("oracle answers led to a falsifying assignment");
  return encode_assignment(a, f.variables);
}

}  // namespace nondec
