#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "nondec/encodings.hpp"
#include "nondec/errors.hpp"
#include "nondec/nondet.hpp"

namespace nondec {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit needs two or more points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit needs distinct x values");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = y[i] - (fit.intercept + fit.slope * x[i]);
    fit.rss += r * r;
  }
  return fit;
}

ScalingReport make_scaling_report(std::vector<ScalingSample> samples) {
  if (samples.size() < 4) throw std::invalid_argument("scaling report needs at least four sizes");
  std::sort(samples.begin(), samples.end(),
            [](const ScalingSample& a, const ScalingSample& b) { return a.size < b.size; });
  std::vector<double> size, log_size, log_steps;
  for (const auto& s : samples) {
    if (s.size == 0 || s.steps == 0) throw std::invalid_argument("sizes and step counts must be positive");
    size.push_back(static_cast<double>(s.size));
    log_size.push_back(std::log(static_cast<double>(s.size)));
    log_steps.push_back(std::log(static_cast<double>(s.steps)));
  }
  ScalingReport report;
  report.samples = std::move(samples);
  report.log_log = fit_line(log_size, log_steps);
  report.log_linear = fit_line(size, log_steps);
  return report;
}

double ScalingReport::rate_bits() const { return log_linear.slope / std::log(2.0); }

std::string ScalingReport::to_csv() const {
  std::ostringstream out;
  out << "size,steps\n";
  for (const auto& s : samples) out << s.size << ',' << s.steps << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "# log-log: slope=%.4f rss=%.6g\n", log_log.slope, log_log.rss);
  out << line;
  std::snprintf(line, sizeof line, "# log-linear: rate=%.4f bits/size rss=%.6g -> %s fit wins\n",
                rate_bits(), log_linear.rss,
                exponential_fits_better() ? "exponential" : "polynomial");
  out << line;
  return out.str();
}

ScalingReport scaling_report(const Program& prog, const InstanceFamily& family,
                             const std::vector<std::size_t>& sizes, StepBudget budget) {
  std::vector<ScalingSample> samples;
  for (auto size : sizes) {
    std::uint64_t worst = 0;
    for (const auto& w : family(size)) {
      Outcome o = run_program(prog, w, budget);
      if (o.timed_out()) throw BudgetExceeded(budget.max_steps);
      worst = std::max(worst, o.steps_used);
    }
    samples.push_back({size, worst});
  }
  return make_scaling_report(std::move(samples));
}

ScalingReport scaling_report(const NProgram& np, const InstanceFamily& family,
                             const std::vector<std::size_t>& sizes, const NondetOptions& options) {
  std::vector<ScalingSample> samples;
  for (auto size : sizes) {
    std::uint64_t worst = 0;
    for (const auto& w : family(size)) {
      auto summary = run_nondet(np, w, options);
      if (summary.timeouts) throw BudgetExceeded(np.path_budget.max_steps);
      worst = std::max(worst, summary.max_steps_on_any_path);
    }
    samples.push_back({size, worst});
  }
  return make_scaling_report(std::move(samples));
}

ScalingReport scaling_report(const Verifier& v, const VerifierFamily& family,
                             const std::vector<std::size_t>& sizes, StepBudget budget) {
  std::vector<ScalingSample> samples;
  for (auto size : sizes) {
    std::uint64_t worst = 0;
    for (const auto& c : family(size)) {
      auto run = run_verifier(v, c.w, c.s, c.h, budget);
      if (run.timed_out) throw BudgetExceeded(budget.max_steps);
      worst = std::max(worst, run.steps);
    }
    samples.push_back({size, worst});
  }
  return make_scaling_report(std::move(samples));
}

std::string unsat_formula(std::size_t variables) {
  std::vector<std::string> clauses, negated;
  for (std::size_t i = 0; i < variables; ++i) {
    clauses.push_back(vertex_name(i));
    negated.push_back("!" + vertex_name(i));
  }
  clauses.push_back(join(negated, ','));
  return encode_cnf(parse_cnf(join(clauses, ' ')));
}

InstanceFamily unsat_formula_family() {
  return [](std::size_t n) { return std::vector<std::string>{unsat_formula(n)}; };
}

VerifierFamily cycle_walk_family() {
  return [](std::size_t n) {
    std::vector<std::string> order;
    for (std::size_t i = 0; i < n; ++i) order.push_back(vertex_name(i));
    return std::vector<VerifierCase>{{cycle_graph(n), canonical_cycle(order, false), ""}};
  };
}

}  // namespace nondec
