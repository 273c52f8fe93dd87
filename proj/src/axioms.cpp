#include <algorithm>
#include <set>
#include <sstream>

#include "nondec/errors.hpp"
#include "nondec/parallel.hpp"
#include "nondec/solvers.hpp"
#include "nondec/verifiers.hpp"

namespace nondec {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

// Number of strings of length <= bound that extend a prefix of length len.
std::uint64_t extensions(std::size_t alphabet, std::size_t len, std::size_t bound) {
  if (len > bound) return 1;
  std::uint64_t total = 0, layer = 1;
  for (std::size_t k = len; k <= bound; ++k) {
    total = sat_add(total, layer);
    layer = sat_mul(layer, alphabet);
  }
  return total;
}

struct InstanceResult {
  bool positive = false;
  std::vector<AxiomRecord> witnesses, a1_failures, a2, a3, halting, strict;
  std::uint64_t runs = 0;
  std::uint64_t covered = 0;
};

class InstanceSearch {
 public:
  InstanceSearch(const Verifier& v, std::string w, const SolutionSet& solutions,
                 std::string alphabet, const AxiomOptions& options)
      : v_(v),
        w_(std::move(w)),
        solutions_(solutions),
        alphabet_(std::move(alphabet)),
        options_(options),
        nominal_(sat_mul(extensions(alphabet_.size(), 0, options.string_bound),
                         extensions(alphabet_.size(), 0, options.string_bound))) {
    result_.positive = !solutions_.is_negative();
  }

  InstanceResult run() {
    // Axioms 2 and 3: every (s, h) pair up to the bound, plus the answers
    // that may fall outside the alphabet or the bound.
    explore(Node{"", false, "", false});
    std::set<std::string> extra(solutions_.begin(), solutions_.end());
    extra.insert(std::string(kYes));
    extra.insert(std::string(kNo));
    for (const auto& s : extra) {
      if (!in_space(s)) explore(Node{s, true, "", false});
    }

    // Axiom 1 (and its strict form): search hints for the known solutions.
    if (result_.positive) {
      bool any = !result_.witnesses.empty();
      for (const auto& s : solutions_) {
        if (any && !options_.strict) break;
        if (accepted_solutions_.count(s)) continue;
        if (auto h = find_hint(s)) {
          record_witness(s, *h);
          any = true;
        } else if (options_.strict) {
          result_.strict.push_back({"1-strict", w_, s, "", "no-witness"});
        }
      }
      if (!any) result_.a1_failures.push_back({"1", w_, "", "", "no-witness"});
    }
    return std::move(result_);
  }

 private:
  struct Node {
    std::string s;
    bool s_closed;
    std::string h;
    bool h_closed;
  };

  bool in_space(const std::string& s) const {
    return s.size() <= options_.string_bound &&
           std::all_of(s.begin(), s.end(), [&](char c) { return alphabet_.find(c) != std::string::npos; });
  }

  VerifierRun call(const std::string& s, const std::string& h) {
    if (++result_.runs > options_.max_runs_per_instance) throw SearchSpaceTooLarge(nominal_);
    return run_verifier(v_, w_, s, h, options_.verifier_budget);
  }

  void record_witness(const std::string& s, const std::string& h) {
    if (accepted_solutions_.insert(s).second && (result_.witnesses.empty() || options_.strict)) {
      result_.witnesses.push_back({"1", w_, s, h, "yes"});
    }
  }

  // Covers every pair (s', h') where s' = s if the node's s is closed and s'
  // extends s otherwise (same for h).
  void explore(const Node& node) {
    VerifierRun r = call(node.s, node.h);
    // A timed-out run tells nothing about unread positions.
    bool s_exact = node.s_closed || r.s_end_observed || r.timed_out;
    bool h_exact = node.h_closed || r.h_end_observed || r.timed_out;
    const std::size_t a = alphabet_.size(), bound = options_.string_bound;
    result_.covered = sat_add(result_.covered,
                              sat_mul(s_exact ? 1 : extensions(a, node.s.size(), bound),
                                      h_exact ? 1 : extensions(a, node.h.size(), bound)));

    if (r.timed_out) result_.halting.push_back({"halt", w_, node.s, node.h, "timeout"});
    if (r.accepted) judge_acceptance(node, s_exact);

    if (s_exact && !node.s_closed && node.s.size() < bound) {
      for (char c : alphabet_) explore(Node{node.s + c, false, node.h, node.h_closed});
    }
    if (h_exact && !node.h_closed && node.h.size() < bound) {
      for (char c : alphabet_) explore(Node{node.s, s_exact, node.h + c, false});
    }
  }

  void judge_acceptance(const Node& node, bool s_exact) {
    if (!result_.positive) {
      result_.a2.push_back({"2", w_, node.s, node.h, "yes"});
      return;
    }
    if (!solutions_.contains(node.s)) {
      result_.a3.push_back({"3", w_, node.s, node.h, "yes"});
      return;
    }
    record_witness(node.s, node.h);
    if (s_exact || node.s.size() >= options_.string_bound) return;
    // The verdict holds for every extension of s as well; report one that is
    // not a solution, confirmed by running it.
    for (char c : alphabet_) {
      std::string longer = node.s + c;
      if (solutions_.contains(longer)) continue;
      if (call(longer, node.h).accepted) {
        result_.a3.push_back({"3", w_, longer, node.h, "yes"});
        return;
      }
    }
  }

  std::optional<std::string> find_hint(const std::string& s) {
    std::vector<std::string> seeds;
    if (v_.suggest_hints) seeds = v_.suggest_hints(w_, s);
    seeds.insert(seeds.begin(), "");
    for (const auto& h : seeds) {
      VerifierRun r = call(s, h);
      if (r.timed_out) result_.halting.push_back({"halt", w_, s, h, "timeout"});
      if (r.accepted) return h;
    }
    return search_hint(s, "");
  }

  std::optional<std::string> search_hint(const std::string& s, const std::string& h) {
    VerifierRun r = call(s, h);
    if (r.accepted) return h;
    if (r.timed_out) result_.halting.push_back({"halt", w_, s, h, "timeout"});
    if (!(r.h_end_observed || r.timed_out) || h.size() >= options_.string_bound) return std::nullopt;
    for (char c : alphabet_) {
      if (auto found = search_hint(s, h + c)) return found;
    }
    return std::nullopt;
  }

  const Verifier& v_;
  std::string w_;
  const SolutionSet& solutions_;
  std::string alphabet_;
  const AxiomOptions& options_;
  std::uint64_t nominal_;
  InstanceResult result_;
  std::set<std::string> accepted_solutions_;
};

std::string sorted_unique(std::string chars) {
  std::sort(chars.begin(), chars.end());
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
  return chars;
}

}  // namespace

std::string default_alphabet(ProblemId p, std::string_view w) {
  std::string chars(w);
  chars += ", no";
  switch (p) {
    case ProblemId::Factor:
    case ProblemId::FactorD:
    case ProblemId::FactorInRangeD: chars += "0123456789"; break;
    case ProblemId::Sat:
    case ProblemId::SatD: chars += "=01"; break;
    default: break;
  }
  if (is_decision(p)) chars += kYes;
  return sorted_unique(std::move(chars));
}

bool AxiomReport::passed() const {
  return axiom1_failures.empty() && axiom2_violations.empty() && axiom3_violations.empty() &&
         halting_failures.empty() && strict_failures.empty();
}

std::vector<AxiomRecord> AxiomReport::failures() const {
  std::vector<AxiomRecord> out;
  for (const auto* list :
       {&axiom1_failures, &axiom2_violations, &axiom3_violations, &halting_failures, &strict_failures}) {
    out.insert(out.end(), list->begin(), list->end());
  }
  return out;
}

std::string AxiomReport::to_records() const {
  std::ostringstream out;
  out << "# axiom\tinstance\ts\th\tverdict\n";
  auto emit = [&](const std::vector<AxiomRecord>& list) {
    for (const auto& r : list) {
      out << r.axiom << '\t' << r.instance << '\t' << r.s << '\t' << r.h << '\t' << r.verdict << '\n';
    }
  };
  emit(axiom1_witnesses);
  emit(failures());
  return out.str();
}

AxiomReport check_verifier_axioms(const Verifier& v, ProblemId p, const InstanceSpace& instances,
                                  const AxiomOptions& options) {
  auto results = parallel_map(instances.size(), options.threads, [&](std::size_t i) {
    const std::string& w = instances[i];
    SolutionSet solutions = enumerate_solutions(p, w, options.oracle_budget);
    std::string alphabet = options.alphabet ? sorted_unique(*options.alphabet) : default_alphabet(p, w);
    return InstanceSearch(v, w, solutions, std::move(alphabet), options).run();
  });

  AxiomReport report;
  report.instances = instances.size();
  for (auto& r : results) {
    if (r.positive) ++report.positive_instances;
    auto append = [](std::vector<AxiomRecord>& to, std::vector<AxiomRecord>& from) {
      to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
    };
    append(report.axiom1_witnesses, r.witnesses);
    append(report.axiom1_failures, r.a1_failures);
    append(report.axiom2_violations, r.a2);
    append(report.axiom3_violations, r.a3);
    append(report.halting_failures, r.halting);
    append(report.strict_failures, r.strict);
    report.verifier_runs += r.runs;
    report.pairs_covered = sat_add(report.pairs_covered, r.covered);
  }
  std::ostringstream bounds;
  bounds << "s,h: all strings of length <= " << options.string_bound << " over "
         << (options.alphabet ? "\"" + sorted_unique(*options.alphabet) + "\"" : std::string("the instance alphabet"))
         << ", plus F(w), \"yes\" and \"no\" as s; " << report.instances << " instances";
  report.search_bounds = bounds.str();
  return report;
}

}  // namespace nondec
