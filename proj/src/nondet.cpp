#include "nondec/nondet.hpp"

#include <algorithm>
#include <atomic>
#include <deque>

#include "nondec/encodings.hpp"
#include "nondec/errors.hpp"
#include "nondec/parallel.hpp"

namespace nondec {

void ComputationSummary::merge(const ComputationSummary& other) {
  leaf_outputs.insert(other.leaf_outputs.begin(), other.leaf_outputs.end());
  paths_explored += other.paths_explored;
  max_steps_on_any_path = std::max(max_steps_on_any_path, other.max_steps_on_any_path);
  timeouts += other.timeouts;
  overruns += other.overruns;
}

std::set<std::string> ComputationSummary::accepting_outputs() const {
  std::set<std::string> out = leaf_outputs;
  out.erase(std::string(kNo));
  return out;
}

namespace {

class Explorer {
 public:
  Explorer(const NProgram& np, std::string_view w, const NondetOptions& options)
      : np_(np), w_(w), options_(options), bound_(np.choice_bound(w.size())) {}

  // Runs the transition on one choice prefix. Returns true when the node is
  // internal (the caller should visit its children).
  bool visit(const Choices& choices, ComputationSummary& out) {
    StepCounter steps(np_.path_budget);
    Transition t;
    try {
      t = np_.transition(w_, choices, steps);
    } catch (const BudgetExceeded&) {
      if (!steps.exhausted()) throw;
      count_path();
      ++out.paths_explored;
      ++out.timeouts;
      out.max_steps_on_any_path = std::max(out.max_steps_on_any_path, steps.used());
      return false;
    }
    if (auto* output = std::get_if<std::string>(&t)) {
      count_path();
      ++out.paths_explored;
      out.leaf_outputs.insert(*output);
      out.max_steps_on_any_path = std::max(out.max_steps_on_any_path, steps.used());
      return false;
    }
    if (choices.size() >= bound_) {
      count_path();
      ++out.paths_explored;
      ++out.overruns;
      return false;
    }
    return true;
  }

  void subtree(Choices& choices, ComputationSummary& out, bool reverse) {
    if (!visit(choices, out)) return;
    for (int k = 0; k < 2; ++k) {
      choices.push_back(reverse ? k == 0 : k == 1);
      subtree(choices, out, reverse);
      choices.pop_back();
    }
  }

  ComputationSummary sequential(bool reverse) {
    ComputationSummary out;
    Choices choices;
    subtree(choices, out, reverse);
    return out;
  }

  // Expands the top of the tree breadth-first until there is enough work to
  // share, then explores the frontier subtrees on worker threads.
  ComputationSummary parallel() {
    unsigned threads = options_.threads ? options_.threads : default_threads();
    ComputationSummary out;
    std::deque<Choices> frontier{Choices{}};
    std::vector<Choices> ready;
    while (!frontier.empty() && frontier.size() < 8u * threads) {
      Choices c = std::move(frontier.front());
      frontier.pop_front();
      if (!visit(c, out)) continue;
      for (bool bit : {false, true}) {
        Choices child = c;
        child.push_back(bit);
        frontier.push_back(std::move(child));
      }
    }
    ready.insert(ready.end(), frontier.begin(), frontier.end());
    auto parts = parallel_map(ready.size(), threads, [&](std::size_t i) {
      ComputationSummary part;
      Choices c = ready[i];
      subtree(c, part, false);
      return part;
    });
    for (const auto& p : parts) out.merge(p);
    return out;
  }

 private:
  void count_path() {
    if (++paths_ > options_.max_paths) throw ChoiceSpaceTooLarge(options_.max_paths);
  }

  const NProgram& np_;
  std::string_view w_;
  const NondetOptions& options_;
  std::size_t bound_;
  std::atomic<std::uint64_t> paths_{0};
};

std::size_t ceil_log2(std::size_t k) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < k) ++bits;
  return bits;
}

std::uint64_t read_bits(const Choices& choices, std::size_t& pos, std::size_t count) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) value = value << 1 | (choices[pos++] ? 1 : 0);
  return value;
}

std::size_t permutation_bits(std::size_t n) {
  std::size_t bits = 0;
  for (std::size_t k = n; k >= 1; --k) bits += ceil_log2(k);
  return bits;
}

// At most (n + 1) / 2 names fit in a string of length n.
std::size_t permutation_bound(std::size_t n) { return permutation_bits((n + 1) / 2); }

std::optional<std::vector<std::string>> decode_permutation(const std::vector<std::string>& names,
                                                           const Choices& choices) {
  std::vector<std::string> remaining = names, order;
  std::size_t pos = 0;
  while (!remaining.empty()) {
    std::size_t width = ceil_log2(remaining.size());
    auto idx = read_bits(choices, pos, width);
    if (idx >= remaining.size()) return std::nullopt;
    order.push_back(remaining[idx]);
    remaining.erase(remaining.begin() + static_cast<long>(idx));
  }
  return order;
}

std::vector<std::string> graph_names(std::string_view w, bool directed) {
  auto g = try_parse_graph(w, directed);
  if (!g) return {};
  return {g->vertices.begin(), g->vertices.end()};
}

Decoder cycle_decoder(bool directed) {
  Decoder d;
  d.name = directed ? "directed-cycle-order" : "cycle-order";
  d.bits = [directed](std::string_view w) { return permutation_bits(graph_names(w, directed).size()); };
  d.bound = permutation_bound;
  d.decode = [directed](std::string_view w, const Choices& c) -> std::optional<Decoder::Candidate> {
    auto names = graph_names(w, directed);
    auto order = decode_permutation(names, c);
    if (!order || order->size() < 2) return std::nullopt;
    return Decoder::Candidate{canonical_cycle(*order, directed), ""};
  };
  return d;
}

Decoder edge_decoder() {
  Decoder d;
  d.name = "edge-with-cycle-hint";
  d.bits = [](std::string_view w) { return permutation_bits(graph_names(w, false).size()); };
  d.bound = permutation_bound;
  d.decode = [](std::string_view w, const Choices& c) -> std::optional<Decoder::Candidate> {
    auto order = decode_permutation(graph_names(w, false), c);
    if (!order || order->size() < 3) return std::nullopt;
    auto& o = *order;
    if (o[1] < o[0]) {
      // Walk the same cycle the other way so the edge comes out ordered.
      std::reverse(o.begin() + 1, o.end());
      std::rotate(o.begin(), o.end() - 1, o.end());
    }
    std::vector<std::string> rest(o.begin() + 2, o.end());
    return Decoder::Candidate{encode_edge(o[0], o[1]), join(rest, ',')};
  };
  return d;
}

std::size_t bit_length(const Natural::Int& v) {
  return v == 0 ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(v)) + 1;
}

std::size_t number_bits(std::string_view number) {
  auto m = Natural::try_parse(number);
  if (!m) return 0;
  return std::min<std::size_t>(bit_length(m->value()), 62);
}

Decoder number_decoder(std::function<std::string_view(std::string_view)> modulus) {
  Decoder d;
  d.name = "binary-number";
  d.bits = [modulus](std::string_view w) { return number_bits(modulus(w)); };
  d.bound = [](std::size_t n) { return std::min<std::size_t>(62, (n * 10 + 2) / 3); };
  d.decode = [modulus](std::string_view w, const Choices& c) -> std::optional<Decoder::Candidate> {
    std::size_t pos = 0;
    return Decoder::Candidate{std::to_string(read_bits(c, pos, number_bits(modulus(w)))), ""};
  };
  return d;
}

Decoder assignment_decoder() {
  Decoder d;
  d.name = "assignment-bits";
  d.bits = [](std::string_view w) {
    auto f = try_parse_cnf(w);
    return f ? f->variables.size() : 0;
  };
  d.bound = [](std::size_t n) { return (n + 1) / 2; };
  d.decode = [](std::string_view w, const Choices& c) -> std::optional<Decoder::Candidate> {
    auto f = try_parse_cnf(w);
    if (!f) return std::nullopt;
    Assignment a;
    std::size_t i = 0;
    for (const auto& v : f->variables) a[v] = c[i++];
    return Decoder::Candidate{encode_assignment(a, f->variables), ""};
  };
  return d;
}

// Decision form: s is "yes" and the underlying guess becomes the hint.
Decoder as_certificate(Decoder inner) {
  Decoder d = inner;
  d.name = inner.name + "-as-certificate";
  d.decode = [inner](std::string_view w, const Choices& c) -> std::optional<Decoder::Candidate> {
    auto cand = inner.decode(w, c);
    if (!cand) return std::nullopt;
    return Decoder::Candidate{std::string(kYes), cand->s};
  };
  return d;
}

std::string_view whole(std::string_view w) { return w; }
std::string_view first_token(std::string_view w) { return w.substr(0, w.find(' ')); }

}  // namespace

ComputationSummary run_nondet(const NProgram& np, std::string_view w, const NondetOptions& options) {
  Explorer explorer(np, w, options);
  switch (options.order) {
    case ExplorationOrder::Forward: return explorer.sequential(false);
    case ExplorationOrder::Reverse: return explorer.sequential(true);
    case ExplorationOrder::Parallel: return explorer.parallel();
  }
  return {};
}

Decoder decoder_for(ProblemId p) {
  switch (p) {
    case ProblemId::Factor: return number_decoder(whole);
    case ProblemId::FactorD: return as_certificate(number_decoder(whole));
    case ProblemId::FactorInRangeD: return as_certificate(number_decoder(first_token));
    case ProblemId::HamCycle: return cycle_decoder(false);
    case ProblemId::DirectedHamCycle: return cycle_decoder(true);
    case ProblemId::HamCycleD: return as_certificate(cycle_decoder(false));
    case ProblemId::DirectedHamCycleD: return as_certificate(cycle_decoder(true));
    case ProblemId::HamCycleEdge: return edge_decoder();
    case ProblemId::Sat: return assignment_decoder();
    case ProblemId::SatD: return as_certificate(assignment_decoder());
  }
  throw UnknownProblem(std::string(to_string(p)));
}

NProgram guess_and_verify(ProblemId p, const Verifier& v, const Decoder& decoder,
                          StepBudget path_budget) {
  NProgram np;
  np.name = "guess-and-verify-" + std::string(to_string(p));
  np.choice_bound = decoder.bound;
  np.path_budget = path_budget;
  np.transition = [v, decoder](std::string_view w, const Choices& choices,
                               StepCounter& steps) -> Transition {
    steps.tick();
    if (choices.size() < decoder.bits(w)) return NeedMoreChoices{};
    steps.tick(choices.size());
    auto cand = decoder.decode(w, choices);
    if (!cand) return std::string(kNo);
    Tape s(cand->s), h(cand->h);
    if (v.accepts(w, s, h, steps)) return cand->s;
    return std::string(kNo);
  };
  return np;
}

SolvesReport nondet_solves(const NProgram& np, ProblemId p, const InstanceSpace& space,
                           const NondetOptions& options, StepBudget oracle_budget) {
  SolvesReport report;
  report.instances_checked = space.size();
  for (const auto& w : space) {
    ComputationSummary summary = run_nondet(np, w, options);
    SolutionSet expected = enumerate_solutions(p, w, oracle_budget);
    std::set<std::string> accepting;
    for (const auto& out : summary.accepting_outputs()) accepting.insert(canonicalize_solution(p, w, out));

    // One verdict per instance. Timeouts make the rest inconclusive.
    if (summary.timeouts > 0) {
      report.violations.push_back({w, "timeout", std::to_string(summary.timeouts) + " paths"});
      continue;
    }
    if (expected.is_negative()) {
      if (!accepting.empty()) {
        report.violations.push_back(
            {w, is_decision(p) ? "accepted-negative" : "unsound-output", *accepting.begin()});
      }
      continue;
    }
    if (accepting.empty()) {
      report.violations.push_back({w, "missed-positive", "all leaves are no"});
      continue;
    }
    for (const auto& out : accepting) {
      if (!expected.contains(out)) {
        report.violations.push_back({w, "unsound-output", out});
        break;
      }
    }
  }
  return report;
}

}  // namespace nondec
