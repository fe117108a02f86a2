#include "extopt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "extopt/combinatorial.hpp"
#include "extopt/continuous.hpp"
#include "extopt/oracle.hpp"
#include "extopt/report_json.hpp"

namespace extopt::cli {
namespace {

struct InstanceFlags {
  int n = 0;
  std::string x;
  std::string w;
};

struct OracleFlags {
  long max_iters = SubgradientConfig{}.max_iters;
  std::uint64_t seed = 0;
  int restarts = SubgradientConfig{}.restarts;
  std::string step_rule = "geometric";
  std::optional<int> resolution;
  std::uint64_t grid_cap = kDefaultGridCap;
  bool no_grid = false;

  SubgradientConfig config() const {
    SubgradientConfig cfg;
    cfg.max_iters = max_iters;
    cfg.seed = seed;
    cfg.restarts = restarts;
    cfg.step_rule = step_rule == "diminishing" ? StepRule::kDiminishing : StepRule::kGeometric;
    return cfg;
  }

  VerifyOptions options() const {
    VerifyOptions opts;
    opts.use_grid = !no_grid;
    opts.resolution = resolution;
    opts.grid_cap = grid_cap;
    return opts;
  }
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags) {
  cmd->add_option("-n", flags.n, "number of waiting customers")->required();
  cmd->add_option("-x", flags.x, "tagged service demand, e.g. 1.1 or 11/10")->required();
  cmd->add_option("-w", flags.w, "total mass budget, e.g. 2.2 or 11/5")->required();
}

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags) {
  cmd->add_option("--max-iters", flags.max_iters, "subgradient iterations per restart");
  cmd->add_option("--seed", flags.seed, "seed for random restarts");
  cmd->add_option("--restarts", flags.restarts, "number of random restarts");
  cmd->add_option("--step-rule", flags.step_rule, "geometric or diminishing")
      ->check(CLI::IsMember({"geometric", "diminishing"}));
  cmd->add_option("--resolution", flags.resolution, "grid oracle resolution (default: duo lattice)");
  cmd->add_option("--cap", flags.grid_cap, "maximum grid points");
  cmd->add_flag("--no-grid", flags.no_grid, "skip the lattice oracle");
}

InstanceSpec to_spec(const InstanceFlags& flags) {
  return {flags.n, parse_rational(flags.x), parse_rational(flags.w), std::nullopt};
}

Instance to_instance(const InstanceSpec& spec) { return Instance(spec.n, spec.x, spec.w); }

void emit(std::ostream& out, const nlohmann::json& envelope) { out << envelope.dump(2) << '\n'; }

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const TrivialRegimeError& e) {
    err << "error: trivial regime: " << e.what() << '\n';
    return kTrivialRegime;
  } catch (const StabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kTrivialRegime;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const WrongBranchError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

int exit_code_for(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::kConfirmed:
      return kOk;
    case VerifyStatus::kInconclusive:
      return kInconclusive;
    case VerifyStatus::kViolated:
      return kViolated;
  }
  return kInternalError;
}

int cmd_solve(const InstanceFlags& flags, const std::string& domain, std::ostream& out) {
  const InstanceSpec spec = to_spec(flags);
  const Instance inst = to_instance(spec);
  const SolveReport report = domain == "combinatorial" ? solve_combinatorial(inst) : solve_continuous(inst);
  nlohmann::json result = to_json(report);
  result["domain"] = domain;
  emit(out, make_envelope("solve", spec, to_string(report.status), std::move(result)));
  return kOk;
}

ServiceVector parse_vector(const std::string& text) {
  ServiceVector v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

int cmd_verify(const InstanceFlags& flags, const OracleFlags& oracle, const std::string& candidate,
               std::ostream& out) {
  const InstanceSpec spec = to_spec(flags);
  const Instance inst = to_instance(spec);
  const VerifyReport report =
      candidate.empty()
          ? verify_conjecture(inst, oracle.config(), oracle.options())
          : verify_candidate(inst, parse_vector(candidate), SolveStatus::kConjectured,
                             oracle.config(), oracle.options());
  emit(out, make_envelope("verify", spec, to_string(report.status), to_json(report)));
  return exit_code_for(report.status);
}

int cmd_enumerate(const InstanceFlags& flags, std::optional<int> delta, int cap, std::ostream& out) {
  const InstanceSpec spec = to_spec(flags);
  const Instance inst = to_instance(spec);
  int max_gap = 0;
  if (delta) {
    const auto [lo, hi] = feasible_max_gaps(inst);
    if (*delta < lo || *delta > hi) {
      throw InputError("--delta must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    max_gap = *delta;
  } else {
    max_gap = inst.m() == 0 ? inst.n() + 1 : search_max_gap(inst).delta_star;
  }
  const auto members = enumerate_structured_solutions(inst, max_gap, cap);
  auto listed = nlohmann::json::array();
  for (const ServiceVector& v : members) {
    listed.push_back({{"vector", to_json(v)}, {"objective", to_string(eval_f(v, inst.x()))}});
  }
  nlohmann::json result = {{"max_gap", max_gap}, {"count", members.size()}, {"members", listed}};
  emit(out, make_envelope("enumerate", spec, "PROVEN", std::move(result)));
  return kOk;
}

int cmd_variance(const InstanceFlags& flags, const std::string& lambda, const std::string& mu1,
                 const std::string& mu2, std::ostream& out) {
  InstanceSpec spec = to_spec(flags);
  spec.queue = QueueParams{parse_rational(lambda), parse_rational(mu1), parse_rational(mu2)};
  if (spec.queue->lambda <= 0) throw InputError("lambda must be positive");
  spec.queue->validate();
  const Instance inst = to_instance(spec);
  const SolveReport best = solve_continuous(inst);
  const ServiceVector worst = supremum_vector(inst);
  const QueueParams& q = *spec.queue;
  nlohmann::json result = {
      {"rho", to_string(q.rho())},
      {"mean", to_string(externality_mean(q, inst.n(), inst.x()))},
      {"variance_min", to_string(externality_variance(q, best.solution, inst.x()))},
      {"variance_sup", to_string(externality_variance(q, worst, inst.x()))},
      {"min_vector", to_json(best.solution)},
      {"sup_vector", to_json(worst)},
      {"strict_sum_min", to_string(strict_interval_sum(best.solution, inst.x()))},
      {"strict_sum_sup", to_string(strict_interval_sum(worst, inst.x()))}};
  emit(out, make_envelope("variance", spec, to_string(best.status), std::move(result)));
  return kOk;
}

std::string csv_row(const Instance& inst, const std::optional<VerifyReport>& verified) {
  const SolveReport closed = solve_continuous(inst);
  const int delta_star = inst.m() == 0 ? inst.n() + 1 : search_max_gap(inst).delta_star;
  const int tau_u1 = equidistant_gap_bounds(inst.n(), inst.m()).tau_u;
  const int tau_u2 = equidistant_gap_bounds(inst.n(), inst.m() + 1).tau_u;
  std::string row = std::to_string(inst.n()) + ',' + to_string(inst.x()) + ',' + to_string(inst.w()) +
                    ',' + std::to_string(inst.m()) + ',' + to_string(inst.r()) + ',' +
                    std::to_string(delta_star) + ',' + std::to_string(tau_u1) + ',' +
                    std::to_string(tau_u2) + ',' + to_string(closed.objective) + ',';
  if (verified) {
    row += nlohmann::json(verified->oracle_objective).dump();
    row += ',';
    row += to_string(verified->status);
  } else {
    row += ',';
    row += to_string(closed.status);
  }
  return row;
}

int cmd_sweep(const SweepPlan& plan, const std::string& output, std::uint64_t cap, bool with_oracle,
              const OracleFlags& oracle, std::ostream& out) {
  if (!(plan.x > 0)) throw InputError("x must be positive");
  if (plan.w_step <= 0) throw InputError("w step must be positive");
  std::vector<Rational> ws;
  if (plan.w_min <= plan.w_max) {
    const Rational span = (plan.w_max - plan.w_min) / plan.w_step;
    const std::int64_t steps = floor_to_int(span);
    const std::int64_t n_count = std::max(0, plan.n_max - plan.n_min + 1);
    if (static_cast<std::uint64_t>(steps + 1) * static_cast<std::uint64_t>(n_count) > cap) {
      throw SizeError("sweep exceeds " + std::to_string(cap) + " instances");
    }
    for (std::int64_t k = 0; k <= steps; ++k) ws.emplace_back(plan.w_min + k * plan.w_step);
  }

  std::ofstream csv(output, std::ios::binary | std::ios::trunc);
  if (!csv) throw InputError("cannot write " + output);
  csv << kSweepHeader << "\r\n";

  std::size_t rows = 0;
  bool all_proven = true;
  int worst = kOk;
  for (int n = plan.n_min; n <= plan.n_max; ++n) {
    for (const Rational& w : ws) {
      if (w <= 0 || w >= n * plan.x) continue;
      const Instance inst(n, plan.x, w);
      std::optional<VerifyReport> verified;
      if (with_oracle) {
        verified = verify_conjecture(inst, oracle.config(), oracle.options());
        worst = std::max(worst, exit_code_for(verified->status));
      } else {
        all_proven = all_proven && solve_continuous(inst).status == SolveStatus::kProven;
      }
      csv << csv_row(inst, verified) << "\r\n";
      ++rows;
    }
  }
  csv.flush();
  if (!csv) throw InputError("failed writing " + output);

  std::string status;
  if (with_oracle) {
    status = worst == kViolated ? "VIOLATED" : worst == kInconclusive ? "INCONCLUSIVE" : "CONFIRMED";
  } else {
    status = all_proven ? "PROVEN" : "CONJECTURED";
  }
  nlohmann::json instance = {{"n", {plan.n_min, plan.n_max}},
                             {"x", to_string(plan.x)},
                             {"w", {to_string(plan.w_min), to_string(plan.w_max), to_string(plan.w_step)}}};
  nlohmann::json result = {{"rows", rows}, {"output", output}, {"columns", kSweepHeader}};
  emit(out, make_envelope("sweep", std::move(instance), status, std::move(result)));
  return kOk;
}

}  // namespace

std::pair<int, int> parse_int_range(const std::string& text) {
  try {
    if (auto dots = text.find(".."); dots != std::string::npos) {
      std::size_t used_lo = 0, used_hi = 0;
      const std::string lo_text = text.substr(0, dots);
      const std::string hi_text = text.substr(dots + 2);
      const int lo = std::stoi(lo_text, &used_lo);
      const int hi = std::stoi(hi_text, &used_hi);
      if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw InputError("");
      return {lo, hi};
    }
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw InputError("");
    return {value, value};
  } catch (const std::exception&) {
    throw InputError("not an integer range: '" + text + "'");
  }
}

std::pair<Rational, Rational> parse_rational_range(const std::string& text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    return {parse_rational(text.substr(0, dots)), parse_rational(text.substr(dots + 2))};
  }
  Rational value = parse_rational(text);
  return {value, value};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers and oracles for the interval-shortfall objective"};
  app.name("extopt");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  InstanceFlags solve_flags;
  std::string domain = "continuous";
  auto* solve = app.add_subcommand("solve", "closed-form optimum (JSON on stdout)");
  add_instance_flags(solve, solve_flags);
  solve->add_option("--domain", domain, "combinatorial or continuous")
      ->check(CLI::IsMember({"combinatorial", "continuous"}));

  InstanceFlags verify_flags;
  OracleFlags verify_oracle;
  auto* verify = app.add_subcommand("verify", "compare the construction against the oracles");
  add_instance_flags(verify, verify_flags);
  add_oracle_flags(verify, verify_oracle);
  std::string verify_candidate_text;
  verify->add_option("--candidate", verify_candidate_text,
                     "comma-separated vector to check instead of the construction");

  std::string sweep_n, sweep_x, sweep_w, sweep_step = "1", sweep_output;
  std::uint64_t sweep_cap = 100'000;
  bool sweep_with_oracle = false;
  OracleFlags sweep_oracle;
  auto* sweep = app.add_subcommand("sweep", "batch table over n and w ranges (CSV via --output)");
  sweep->add_option("-n", sweep_n, "n or n_min..n_max")->required();
  sweep->add_option("-x", sweep_x, "tagged service demand")->required();
  sweep->add_option("-w", sweep_w, "w or w_min..w_max")->required();
  sweep->add_option("--w-step", sweep_step, "increment of w");
  sweep->add_option("--output", sweep_output, "CSV destination")->required();
  sweep->add_option("--cap", sweep_cap, "maximum number of instances");
  sweep->add_flag("--oracle", sweep_with_oracle, "run the verification harness per row");
  sweep->add_option("--max-iters", sweep_oracle.max_iters, "subgradient iterations per restart");
  sweep->add_option("--seed", sweep_oracle.seed, "seed for random restarts");
  sweep->add_option("--restarts", sweep_oracle.restarts, "number of random restarts");
  sweep->add_option("--resolution", sweep_oracle.resolution, "grid oracle resolution");
  sweep->add_option("--grid-cap", sweep_oracle.grid_cap, "maximum grid points");
  sweep->add_flag("--no-grid", sweep_oracle.no_grid, "skip the lattice oracle");

  InstanceFlags variance_flags;
  std::string lambda, mu1, mu2;
  auto* variance = app.add_subcommand("variance", "externality mean and variance range");
  add_instance_flags(variance, variance_flags);
  variance->add_option("--lambda", lambda, "arrival rate")->required();
  variance->add_option("--mu1", mu1, "mean service demand")->required();
  variance->add_option("--mu2", mu2, "second moment of service demand")->required();

  InstanceFlags enumerate_flags;
  std::optional<int> delta;
  int enumerate_cap = 20;
  auto* enumerate = app.add_subcommand("enumerate", "all structured solutions with a given max gap");
  add_instance_flags(enumerate, enumerate_flags);
  enumerate->add_option("--delta", delta, "max gap (default: the optimal one)");
  enumerate->add_option("--cap", enumerate_cap, "largest n accepted");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("extopt");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  if (solve->parsed()) {
    return guarded(err, [&] { return cmd_solve(solve_flags, domain, out); });
  }
  if (verify->parsed()) {
    return guarded(err, [&] { return cmd_verify(verify_flags, verify_oracle, verify_candidate_text, out); });
  }
  if (sweep->parsed()) {
    return guarded(err, [&] {
      SweepPlan plan;
      std::tie(plan.n_min, plan.n_max) = parse_int_range(sweep_n);
      plan.x = parse_rational(sweep_x);
      std::tie(plan.w_min, plan.w_max) = parse_rational_range(sweep_w);
      plan.w_step = parse_rational(sweep_step);
      return cmd_sweep(plan, sweep_output, sweep_cap, sweep_with_oracle, sweep_oracle, out);
    });
  }
  if (variance->parsed()) {
    return guarded(err, [&] { return cmd_variance(variance_flags, lambda, mu1, mu2, out); });
  }
  if (enumerate->parsed()) {
    return guarded(err, [&] { return cmd_enumerate(enumerate_flags, delta, enumerate_cap, out); });
  }
  err << "error: no command\n";
  return kInvalidInput;
}

}  // namespace extopt::cli
