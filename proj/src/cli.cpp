#include "nondec/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "nondec/encodings.hpp"
#include "nondec/errors.hpp"
#include "nondec/nondet.hpp"
#include "nondec/problem_id.hpp"
#include "nondec/problems.hpp"
#include "nondec/reductions.hpp"
#include "nondec/solvers.hpp"
#include "nondec/spaces.hpp"
#include "nondec/verifiers.hpp"

namespace nondec {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_count(std::string_view text, const std::string& what) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw UsageError(what + " must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t default_budget() {
  const char* env = std::getenv("NONDEC_MAX_STEPS");
  if (env == nullptr || *env == '\0') return kDefaultMaxSteps;
  return parse_count(env, "NONDEC_MAX_STEPS");
}

// -w / -f pair shared by the commands that take an instance.
struct InstanceArg {
  std::string text;
  std::string path;
  CLI::Option* inline_opt = nullptr;
  CLI::Option* file_opt = nullptr;

  void attach(CLI::App* cmd) {
    inline_opt = cmd->add_option("-w,--instance", text, "instance text (quote it)");
    file_opt = cmd->add_option("-f,--file", path, "read the instance from a file");
    inline_opt->excludes(file_opt);
  }

  std::string get() const {
    std::string w;
    if (inline_opt->count() > 0) {
      w = text;
    } else if (file_opt->count() > 0) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw UsageError("cannot read " + path);
      std::ostringstream buf;
      buf << in.rdbuf();
      w = buf.str();
      if (!w.empty() && w.back() == '\n') w.pop_back();
      if (!w.empty() && w.back() == '\r') w.pop_back();
    } else {
      throw UsageError("an instance is required (-w TEXT or -f PATH)");
    }
    if (!is_ascii_string(w)) throw UsageError("instance is not printable ASCII");
    return w;
  }
};

struct Settings {
  bool records = false;
  std::uint64_t budget = kDefaultMaxSteps;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_flag("--records", s.records, "tab-separated output with a schema line");
  cmd->add_option("--budget", s.budget, "step budget per program or verifier call")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", s.threads, "worker threads for checkers (0 = all cores)");
}

ProblemId require_problem(const std::string& name) {
  auto id = parse_problem_id(name);
  if (!id) throw UnknownProblem(name);
  return *id;
}

InstanceSpace default_check_space(ProblemId p) {
  if (is_graph_problem(p)) return all_graphs(4, is_directed_graph_problem(p));
  switch (p) {
    case ProblemId::Sat:
    case ProblemId::SatD:
      return all_cnfs(2, 2);
    case ProblemId::FactorInRangeD:
      return {"35 2 34", "35 6 34", "29 2 28", "12 5 5", "4 2 2"};
    default:
      return naturals(0, 60);
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    auto lo = parse_count(text.substr(0, dots), "--sizes");
    auto hi = parse_count(text.substr(dots + 2), "--sizes");
    if (hi < lo) throw UsageError("--sizes range is empty");
    for (auto n = lo; n <= hi; ++n) sizes.push_back(n);
    return sizes;
  }
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) sizes.push_back(parse_count(part, "--sizes"));
  return sizes;
}

std::string lines(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += s + "\n";
  return out;
}

std::string witness_lines(const std::vector<AxiomRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.axiom + "\t" + r.instance + "\t" + r.s + "\t" + r.h + "\t" + r.verdict + "\n";
  }
  return out;
}

std::string reduction_rows(const ReductionReport& report) {
  std::string out;
  for (const auto& r : report.mismatches()) {
    out += r.instance + "\t" + r.source_verdict + "\t" + r.target_verdict + "\t" + r.status;
    if (!r.detail.empty()) out += "\t" + r.detail;
    out += "\n";
  }
  return out;
}

struct Result {
  int code = kExitOk;
  std::string text;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computational problems, verifiers, nondeterminism and reductions at desk scale",
               "nondec"};
  app.require_subcommand(1, 1);

  Settings settings;
  try {
    settings.budget = default_budget();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string problem, solution, hint, space_desc, alphabet, adversarial, reduction, family,
      sizes_text, order = "forward";
  bool strict = false, general = false;
  std::size_t bound = 8;
  std::uint64_t max_paths = std::uint64_t{1} << 20;
  std::uint64_t max_runs = AxiomOptions{}.max_runs_per_instance;
  InstanceArg solve_in, verify_in, reduce_in, search_in, simulate_in;
  std::function<Result()> action;

  auto* list = app.add_subcommand("list-problems", "list registered problems");
  add_common(list, settings);
  list->callback([&] {
    action = [&] {
      Result r;
      if (settings.records) r.text = "# problem\tkind\n";
      for (auto id : all_problem_ids()) {
        r.text += std::string(to_string(id));
        if (settings.records) r.text += is_decision(id) ? "\tdecision" : "\tgeneral";
        r.text += "\n";
      }
      return r;
    };
  });

  auto* solve = app.add_subcommand("solve", "print the solution set of an instance");
  add_common(solve, settings);
  solve->add_option("-p,--problem", problem, "problem name")->required();
  solve_in.attach(solve);
  solve->callback([&] {
    action = [&] {
      ProblemId p = require_problem(problem);
      SolutionSet set = enumerate_solutions(p, solve_in.get(), StepBudget{settings.budget});
      Result r;
      if (settings.records) r.text = "# solution\n";
      r.text += lines(set.members());
      return r;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "run a verifier on (instance, solution, hint)");
  add_common(verify_cmd, settings);
  verify_cmd->add_option("-p,--problem", problem, "problem name");
  verify_cmd->add_option("--adversarial", adversarial, "use a deliberately wrong verifier");
  verify_in.attach(verify_cmd);
  verify_cmd->add_option("-s,--solution", solution, "proposed solution")->required();
  verify_cmd->add_option("-H,--hint", hint, "hint string (default empty)");
  verify_cmd->callback([&] {
    action = [&] {
      if (problem.empty() == adversarial.empty()) {
        throw UsageError("verify needs exactly one of -p and --adversarial");
      }
      Verifier v = adversarial.empty() ? verifier_for(require_problem(problem))
                                       : adversarial_verifier(adversarial);
      std::string w = verify_in.get();
      if (!is_ascii_string(solution) || !is_ascii_string(hint)) {
        throw UsageError("solution and hint must be printable ASCII");
      }
      Result r;
      if (settings.records) r.text = "# verdict\n";
      r.text += verify(v, w, solution, hint, StepBudget{settings.budget}) + "\n";
      return r;
    };
  });

  auto* check_verifier = app.add_subcommand("check-verifier", "certify the three verifier axioms");
  add_common(check_verifier, settings);
  check_verifier->add_option("-p,--problem", problem, "problem name");
  check_verifier->add_option("--adversarial", adversarial, "check a deliberately wrong verifier");
  check_verifier->add_option("--space", space_desc,
                             "graphs:N digraphs:N naturals:LO..HI cnfs:VxC strings:ALPHA:L");
  check_verifier->add_option("--bound", bound, "longest enumerated solution/hint string");
  check_verifier->add_option("--alphabet", alphabet, "characters of enumerated strings");
  check_verifier->add_flag("--strict", strict, "every solution must be verifiable");
  check_verifier->add_option("--max-runs", max_runs, "verifier runs allowed per instance");
  check_verifier->callback([&] {
    action = [&] {
      if (problem.empty() && adversarial.empty()) {
        throw UsageError("check-verifier needs -p or --adversarial");
      }
      Verifier v = adversarial.empty() ? verifier_for(require_problem(problem))
                                       : adversarial_verifier(adversarial);
      ProblemId p = problem.empty() ? v.target : require_problem(problem);
      InstanceSpace space = space_desc.empty() ? default_check_space(p) : parse_space(space_desc);
      AxiomOptions options;
      options.string_bound = bound;
      if (!alphabet.empty()) options.alphabet = alphabet;
      options.strict = strict;
      options.verifier_budget = StepBudget{settings.budget};
      options.threads = settings.threads;
      options.max_runs_per_instance = max_runs;
      AxiomReport report = check_verifier_axioms(v, p, space, options);
      Result r;
      r.code = report.passed() ? kExitOk : kExitFail;
      const char* verdict = report.passed() ? "PASS" : "FAIL";
      if (settings.records) {
        r.text = report.to_records();
        r.text += std::string("# result\t") + verdict + "\n";
      } else {
        r.text = std::string(verdict) + "\n" + witness_lines(report.failures());
        r.text += "# " + report.search_bounds + "\n";
      }
      return r;
    };
  });

  auto* reduce = app.add_subcommand("reduce", "apply a reduction's instance map");
  add_common(reduce, settings);
  reduce->add_option("-r,--reduction", reduction, "reduction name")->required();
  reduce->add_flag("--general", general, "look the name up among general reductions");
  reduce_in.attach(reduce);
  reduce->callback([&] {
    action = [&] {
      std::string w = reduce_in.get();
      std::string mapped;
      if (general) {
        GeneralReduction gr = get_general_reduction(reduction);
        StepCounter steps(gr.budget(w.size()));
        mapped = gr.map(w, steps);
      } else {
        mapped = apply_polyreduction(get_reduction(reduction), w);
      }
      Result r;
      if (settings.records) r.text = "# mapped_instance\n";
      r.text += mapped + "\n";
      return r;
    };
  });

  auto* check_reduction = app.add_subcommand("check-reduction", "check a reduction exhaustively");
  add_common(check_reduction, settings);
  check_reduction->add_option("-r,--reduction", reduction, "reduction name")->required();
  check_reduction->add_flag("--general", general, "check a general reduction and its r'");
  check_reduction->add_option("--space", space_desc, "instance space (default: 4 vertices)");
  check_reduction->callback([&] {
    action = [&] {
      ReductionReport report;
      StepBudget oracle{settings.budget};
      if (general) {
        GeneralReduction gr = get_general_reduction(reduction);
        InstanceSpace space =
            space_desc.empty() ? default_reduction_space(gr.source) : parse_space(space_desc);
        report = check_general_reduction(gr, space, oracle, settings.threads);
      } else {
        Polyreduction red = get_reduction(reduction);
        InstanceSpace space =
            space_desc.empty() ? default_reduction_space(red.source) : parse_space(space_desc);
        report = check_polyreduction(red, space, oracle, settings.threads);
      }
      Result r;
      r.code = report.ok() ? kExitOk : kExitFail;
      if (settings.records) {
        r.text = report.to_records();
      } else {
        r.text = std::string(report.ok() ? "OK" : "MISMATCH") + " " + report.reduction + " (" +
                 std::to_string(report.rows.size()) + " instances, " +
                 std::to_string(report.mismatches().size()) + " mismatches)\n" +
                 reduction_rows(report);
      }
      return r;
    };
  });

  auto* search = app.add_subcommand("search-via-oracle",
                                    "solve Factor, HamCycle or Sat with a decision oracle");
  add_common(search, settings);
  search->add_option("-p,--problem", problem, "Factor, HamCycle, DirectedHamCycle or Sat")
      ->required();
  search_in.attach(search);
  search->callback([&] {
    action = [&] {
      ProblemId p = require_problem(problem);
      std::string w = search_in.get();
      StepBudget budget{settings.budget};
      std::string found = std::string(kNo);
      std::uint64_t calls = 0;
      switch (p) {
        case ProblemId::Factor: {
          auto oracle = DecisionOracle::exact(ProblemId::FactorInRangeD, budget);
          if (auto m = Natural::try_parse(w)) found = factor_search_via_oracle(*m, oracle);
          calls = oracle.call_count();
          break;
        }
        case ProblemId::HamCycle:
        case ProblemId::DirectedHamCycle: {
          bool directed = p == ProblemId::DirectedHamCycle;
          auto oracle = DecisionOracle::exact(decision_of(p), budget);
          if (auto g = try_parse_graph(w, directed)) found = hamcycle_search_via_oracle(*g, oracle);
          calls = oracle.call_count();
          break;
        }
        case ProblemId::Sat: {
          auto oracle = DecisionOracle::exact(ProblemId::SatD, budget);
          if (auto f = try_parse_cnf(w)) found = sat_search_via_oracle(*f, oracle);
          calls = oracle.call_count();
          break;
        }
        default:
          throw UsageError("search-via-oracle supports Factor, HamCycle, DirectedHamCycle, Sat");
      }
      Result r;
      if (settings.records) {
        r.text = "# solution\toracle_calls\n" + found + "\t" + std::to_string(calls) + "\n";
      } else {
        r.text = found + "\noracle calls: " + std::to_string(calls) + "\n";
      }
      return r;
    };
  });

  auto* simulate = app.add_subcommand("simulate", "explore a guess-and-verify program");
  add_common(simulate, settings);
  simulate->add_option("-p,--problem", problem, "problem name")->required();
  simulate_in.attach(simulate);
  simulate->add_option("--order", order, "forward, reverse or parallel")
      ->check(CLI::IsMember({"forward", "reverse", "parallel"}));
  simulate->add_option("--max-paths", max_paths, "ceiling on explored paths");
  simulate->callback([&] {
    action = [&] {
      ProblemId p = require_problem(problem);
      std::string w = simulate_in.get();
      NProgram np = guess_and_verify(p, verifier_for(p), decoder_for(p), StepBudget{settings.budget});
      NondetOptions options;
      options.order = order == "reverse"    ? ExplorationOrder::Reverse
                      : order == "parallel" ? ExplorationOrder::Parallel
                                            : ExplorationOrder::Forward;
      options.max_paths = max_paths;
      options.threads = settings.threads;
      ComputationSummary summary = run_nondet(np, w, options);
      Result r;
      if (settings.records) r.text = "# leaf_output\n";
      r.text += lines(summary.leaf_outputs);
      r.text += "# paths=" + std::to_string(summary.paths_explored) +
                " max_steps=" + std::to_string(summary.max_steps_on_any_path) +
                " timeouts=" + std::to_string(summary.timeouts) +
                " overruns=" + std::to_string(summary.overruns) + "\n";
      r.code = summary.timeouts == 0 ? kExitOk : kExitBudget;
      return r;
    };
  });

  auto* scaling = app.add_subcommand("scaling", "step counts over an instance family, with fits");
  add_common(scaling, settings);
  scaling->add_option("--family", family, "sat-brute-force or cycle-walk")
      ->required()
      ->check(CLI::IsMember({"sat-brute-force", "cycle-walk"}));
  scaling->add_option("--sizes", sizes_text, "LO..HI or a comma list");
  scaling->callback([&] {
    action = [&] {
      StepBudget budget{settings.budget};
      ScalingReport report;
      if (family == "sat-brute-force") {
        auto sizes = parse_sizes(sizes_text.empty() ? "4..10" : sizes_text);
        report = scaling_report(brute_force_program(ProblemId::SatD), unsat_formula_family(), sizes,
                                budget);
      } else {
        auto sizes = parse_sizes(sizes_text.empty() ? "4..12" : sizes_text);
        report = scaling_report(verifier_for(ProblemId::HamCycle), cycle_walk_family(), sizes,
                                budget);
      }
      return Result{kExitOk, report.to_csv()};
    };
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("nondec");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'nondec --help' for usage\n";
    return kExitUsage;
  }

  try {
    Result r = action();
    out << r.text;
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownProblem& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownKind& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotADecisionProblem& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const VerifierTimeout& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const SearchSpaceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ChoiceSpaceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace nondec
