#include "nondec/verifiers.hpp"

#include <algorithm>
#include <set>

#include "nondec/encodings.hpp"
#include "nondec/errors.hpp"
#include "nondec/solvers.hpp"

namespace nondec {

namespace {

// Sequential reader over a tape; every character looked at costs a step.
class Reader {
 public:
  Reader(Tape& tape, StepCounter& steps) : tape_(tape), steps_(steps) {}

  std::optional<char> peek() {
    steps_.tick();
    return tape_.at(pos_);
  }

  bool at_end() { return !peek(); }

  bool expect(char c) {
    auto x = peek();
    if (!x || *x != c) return false;
    ++pos_;
    return true;
  }

  bool expect(std::string_view text) {
    for (char c : text) {
      if (!expect(c)) return false;
    }
    return true;
  }

  // Reads a vertex/variable name that must belong to allowed. Gives up as
  // soon as the characters read so far are not a prefix of any allowed name.
  std::optional<std::string> name(const std::set<std::string>& allowed) {
    std::string prefix;
    while (true) {
      auto c = peek();
      if (!c || !((*c >= 'a' && *c <= 'z') || (*c >= '0' && *c <= '9'))) break;
      prefix += *c;
      ++pos_;
      auto it = allowed.lower_bound(prefix);
      if (it == allowed.end() || it->compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    }
    if (prefix.empty() || !allowed.count(prefix)) return std::nullopt;
    return prefix;
  }

  // Decimal number without leading zeros, abandoned once it reaches `limit`
  // (further digits could only make it larger).
  std::optional<Natural::Int> number_below(const Natural::Int& limit) {
    Natural::Int value = 0;
    bool any = false;
    while (true) {
      auto c = peek();
      if (!c || *c < '0' || *c > '9') break;
      if (any && value == 0) return std::nullopt;  // leading zero
      value = value * 10 + (*c - '0');
      any = true;
      ++pos_;
      if (value >= limit) return std::nullopt;
    }
    if (!any) return std::nullopt;
    return value;
  }

 private:
  Tape& tape_;
  StepCounter& steps_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- checks on one tape

// s must be a nontrivial factor of m.
bool factor_on_tape(const Natural::Int& m, const Natural::Int& lo, const Natural::Int& hi, Tape& t,
                    StepCounter& steps) {
  Reader r(t, steps);
  auto d = r.number_below(m);
  if (!d || !r.at_end()) return false;
  steps.tick();
  return *d >= 2 && *d >= lo && *d <= hi && m % *d == 0;
}

bool factor_instance_on_tape(std::string_view w, Tape& t, StepCounter& steps) {
  auto m = Natural::try_parse(w);
  if (!m || m->value() == 0) return false;
  return factor_on_tape(m->value(), 0, m->value(), t, steps);
}

bool factor_range_on_tape(std::string_view w, Tape& t, StepCounter& steps) {
  auto first = w.find(' ');
  auto second = first == std::string_view::npos ? first : w.find(' ', first + 1);
  if (second == std::string_view::npos) return false;
  auto m = Natural::try_parse(w.substr(0, first));
  auto lo = Natural::try_parse(w.substr(first + 1, second - first - 1));
  auto hi = Natural::try_parse(w.substr(second + 1));
  if (!m || !lo || !hi || m->value() == 0) return false;
  return factor_on_tape(m->value(), lo->value(), hi->value(), t, steps);
}

// Walks the canonical Hamilton cycle written on the tape, checking each step
// as soon as a vertex name is complete.
bool cycle_on_tape(const Graph& g, Tape& t, StepCounter& steps) {
  const std::size_t n = g.vertices.size();
  if (n < (g.directed ? 2u : 3u)) return false;
  Reader r(t, steps);
  std::vector<std::string> seq;
  std::set<std::string> used;
  while (true) {
    auto v = r.name(g.vertices);
    if (!v || used.count(*v)) return false;
    if (seq.empty() && *v != *g.vertices.begin()) return false;
    if (!seq.empty() && !g.has_edge(seq.back(), *v)) return false;
    steps.tick();
    used.insert(*v);
    seq.push_back(std::move(*v));
    if (seq.size() == n) break;
    if (!r.expect(',')) return false;
  }
  if (!r.at_end()) return false;
  if (!g.has_edge(seq.back(), seq.front())) return false;
  return g.directed || seq[1] < seq.back();
}

bool assignment_on_tape(const CnfFormula& f, Tape& t, StepCounter& steps) {
  Reader r(t, steps);
  Assignment a;
  bool first = true;
  for (const auto& var : f.variables) {
    if (!first && !r.expect(' ')) return false;
    first = false;
    if (!r.expect(var) || !r.expect('=')) return false;
    auto bit = r.peek();
    if (!r.expect('0') && !r.expect('1')) return false;
    a[var] = *bit == '1';
  }
  if (!r.at_end()) return false;
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (const auto& lit : clause) {
      steps.tick();
      if (a[lit.var] == lit.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

// s is an edge u,v (u < v); h lists the remaining vertices so that u, v, h
// walks a Hamilton cycle.
bool cycle_edge_on_tapes(const Graph& g, Tape& s, Tape& h, StepCounter& steps) {
  const std::size_t n = g.vertices.size();
  if (n < 3) return false;
  Reader rs(s, steps);
  auto u = rs.name(g.vertices);
  if (!u || !rs.expect(',')) return false;
  auto v = rs.name(g.vertices);
  if (!v || !rs.at_end() || !(*u < *v) || !g.has_edge(*u, *v)) return false;

  Reader rh(h, steps);
  std::vector<std::string> seq{*u, *v};
  std::set<std::string> used{*u, *v};
  while (seq.size() < n) {
    if (seq.size() > 2 && !rh.expect(',')) return false;
    auto x = rh.name(g.vertices);
    if (!x || used.count(*x) || !g.has_edge(seq.back(), *x)) return false;
    steps.tick();
    used.insert(*x);
    seq.push_back(std::move(*x));
  }
  return rh.at_end() && g.has_edge(seq.back(), seq.front());
}

bool yes_on_tape(Tape& s, StepCounter& steps) {
  Reader r(s, steps);
  return r.expect(kYes) && r.at_end();
}

// ---------------------------------------------------------------- prover side

std::vector<std::string> edge_hints(std::string_view w, std::string_view s) {
  auto g = try_parse_graph(w, false);
  auto ends = split_names(s);
  if (!g || !ends || ends->size() != 2) return {};
  StepCounter steps;
  std::vector<std::string> hints;
  for (const auto& c : hamilton_cycles(*g, steps)) {
    const long n = static_cast<long>(c.size());
    auto at = [&](long i) -> const std::string& { return c[static_cast<std::size_t>(((i % n) + n) % n)]; };
    for (long i = 0; i < n; ++i) {
      for (long dir : {1L, -1L}) {
        if (at(i) != (*ends)[0] || at(i + dir) != (*ends)[1]) continue;
        std::vector<std::string> rest;
        for (long k = 2; k < n; ++k) rest.push_back(at(i + dir * k));
        hints.push_back(join(rest, ','));
      }
    }
  }
  return hints;
}

Verifier::Hints certificate_hints(ProblemId search) {
  return [search](std::string_view w, std::string_view) {
    StepCounter steps;
    auto found = enumerate_solutions(search, w, steps);
    std::vector<std::string> hints;
    if (!found.is_negative()) hints.assign(found.begin(), found.end());
    return hints;
  };
}

Verifier::Accepts graph_check(bool directed) {
  return [directed](std::string_view w, Tape& s, Tape&, StepCounter& steps) {
    steps.tick(w.size());
    auto g = try_parse_graph(w, directed);
    return g && cycle_on_tape(*g, s, steps);
  };
}

}  // namespace

// ---------------------------------------------------------------- running

VerifierRun run_verifier(const Verifier& v, std::string_view w, std::string_view s,
                         std::string_view h, StepBudget budget) {
  Tape st(s), ht(h);
  StepCounter steps(budget);
  VerifierRun run;
  try {
    steps.tick();
    run.accepted = v.accepts(w, st, ht, steps);
  } catch (const BudgetExceeded&) {
    if (!steps.exhausted()) throw;
    run.timed_out = true;
    run.accepted = false;
  }
  run.steps = steps.used();
  run.s_observed = st.observed();
  run.h_observed = ht.observed();
  run.s_end_observed = st.end_observed();
  run.h_end_observed = ht.end_observed();
  return run;
}

std::string verify(const Verifier& v, std::string_view w, std::string_view s, std::string_view h,
                   StepBudget budget) {
  auto run = run_verifier(v, w, s, h, budget);
  if (run.timed_out) throw VerifierTimeout(budget.max_steps);
  return std::string(run.accepted ? kYes : kNo);
}

Verifier verifier_for(ProblemId p) {
  Verifier v;
  v.name = "shipped-" + std::string(to_string(p));
  v.target = p;
  switch (p) {
    case ProblemId::Factor:
      v.accepts = [](std::string_view w, Tape& s, Tape&, StepCounter& steps) {
        steps.tick(w.size());
        return factor_instance_on_tape(w, s, steps);
      };
      break;
    case ProblemId::HamCycle: v.accepts = graph_check(false); break;
    case ProblemId::DirectedHamCycle: v.accepts = graph_check(true); break;
    case ProblemId::Sat:
      v.accepts = [](std::string_view w, Tape& s, Tape&, StepCounter& steps) {
        steps.tick(w.size());
        auto f = try_parse_cnf(w);
        return f && assignment_on_tape(*f, s, steps);
      };
      break;
    case ProblemId::HamCycleEdge:
      v.accepts = [](std::string_view w, Tape& s, Tape& h, StepCounter& steps) {
        steps.tick(w.size());
        auto g = try_parse_graph(w, false);
        return g && cycle_edge_on_tapes(*g, s, h, steps);
      };
      v.suggest_hints = edge_hints;
      break;
    case ProblemId::FactorD:
      v.accepts = [](std::string_view w, Tape& s, Tape& h, StepCounter& steps) {
        steps.tick(w.size());
        return yes_on_tape(s, steps) && factor_instance_on_tape(w, h, steps);
      };
      v.suggest_hints = certificate_hints(ProblemId::Factor);
      break;
    case ProblemId::FactorInRangeD:
      v.accepts = [](std::string_view w, Tape& s, Tape& h, StepCounter& steps) {
        steps.tick(w.size());
        return yes_on_tape(s, steps) && factor_range_on_tape(w, h, steps);
      };
      v.suggest_hints = [](std::string_view w, std::string_view) {
        // Every factor of m is a candidate; the verifier keeps those in range.
        auto space = w.substr(0, w.find(' '));
        auto found = enumerate_solutions(ProblemId::Factor, space);
        std::vector<std::string> hints;
        if (!found.is_negative()) hints.assign(found.begin(), found.end());
        return hints;
      };
      break;
    case ProblemId::HamCycleD:
    case ProblemId::DirectedHamCycleD: {
      bool directed = p == ProblemId::DirectedHamCycleD;
      v.accepts = [directed](std::string_view w, Tape& s, Tape& h, StepCounter& steps) {
        steps.tick(w.size());
        if (!yes_on_tape(s, steps)) return false;
        auto g = try_parse_graph(w, directed);
        return g && cycle_on_tape(*g, h, steps);
      };
      v.suggest_hints = certificate_hints(*search_of(p));
      break;
    }
    case ProblemId::SatD:
      v.accepts = [](std::string_view w, Tape& s, Tape& h, StepCounter& steps) {
        steps.tick(w.size());
        if (!yes_on_tape(s, steps)) return false;
        auto f = try_parse_cnf(w);
        return f && assignment_on_tape(*f, h, steps);
      };
      v.suggest_hints = certificate_hints(ProblemId::Sat);
      break;
  }
  return v;
}

Verifier verifier_for(std::string_view name) { return verifier_for(problem_id(name)); }

std::vector<std::string> adversarial_kinds() {
  return {"partial-cycle-as-solution", "accepts-negative", "rejects-everything"};
}

Verifier adversarial_verifier(std::string_view kind) {
  Verifier v;
  v.name = std::string(kind);
  v.target = ProblemId::HamCycle;
  if (kind == "partial-cycle-as-solution") {
    v.accepts = [](std::string_view w, Tape& s, Tape&, StepCounter& steps) {
      steps.tick(w.size());
      auto g = try_parse_graph(w, false);
      if (!g || g->vertices.size() < 3) return false;
      const std::size_t n = g->vertices.size();
      Reader r(s, steps);
      std::vector<std::string> seq;
      std::set<std::string> used;
      while (true) {
        auto x = r.name(g->vertices);
        if (!x || used.count(*x)) return false;
        if (seq.empty() && *x != *g->vertices.begin()) return false;
        if (!seq.empty() && !g->has_edge(seq.back(), *x)) return false;
        used.insert(*x);
        seq.push_back(std::move(*x));
        if (seq.size() == n || r.at_end()) break;
        if (!r.expect(',')) return false;
      }
      if (!r.at_end() || seq.size() + 2 < n) return false;
      // Try every order of the missing vertices.
      std::vector<std::string> missing;
      for (const auto& x : g->vertices) {
        if (!used.count(x)) missing.push_back(x);
      }
      do {
        steps.tick();
        auto full = seq;
        full.insert(full.end(), missing.begin(), missing.end());
        bool ok = true;
        for (std::size_t i = seq.size() - 1; ok && i + 1 <= full.size(); ++i) {
          ok = g->has_edge(full[i], full[(i + 1) % n]);
        }
        if (ok && (missing.size() > 0 || full[1] < full.back())) return true;
      } while (std::next_permutation(missing.begin(), missing.end()));
      return false;
    };
  } else if (kind == "accepts-negative") {
    auto honest = graph_check(false);
    v.accepts = [honest](std::string_view w, Tape& s, Tape& h, StepCounter& steps) {
      if (w.empty()) {
        Reader rs(s, steps), rh(h, steps);
        if (rs.at_end() && rh.at_end()) return true;
      }
      return honest(w, s, h, steps);
    };
  } else if (kind == "rejects-everything") {
    v.accepts = [](std::string_view, Tape&, Tape&, StepCounter&) { return false; };
  } else {
    throw UnknownKind(std::string(kind));
  }
  return v;
}

}  // namespace nondec
