#include <cmath>

#include "extopt/continuous.hpp"
#include "extopt/errors.hpp"
#include "extopt/oracle.hpp"

namespace extopt {
namespace {

// Rationalizes each coordinate, clips at zero and rescales so the entries
// sum to exactly w.
ServiceVector exact_point(const std::vector<double>& point, const Rational& w,
                          std::int64_t max_denominator) {
  ServiceVector v;
  v.reserve(point.size());
  for (double p : point) {
    Rational entry = rationalize(p, max_denominator);
    v.push_back(entry > 0 ? entry : Rational(0));
  }
  const Rational total = vector_sum(v);
  if (total == 0) return v;
  const Rational scale = w / total;
  for (Rational& entry : v) entry *= scale;
  return v;
}

}  // namespace

std::string_view to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::kConfirmed:
      return "CONFIRMED";
    case VerifyStatus::kViolated:
      return "VIOLATED";
    case VerifyStatus::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

VerifyReport verify_conjecture(const Instance& inst, const SubgradientConfig& cfg,
                               const VerifyOptions& options) {
  const SolveReport constructed = solve_continuous(inst);
  return verify_candidate(inst, constructed.solution, constructed.status, cfg, options);
}

VerifyReport verify_candidate(const Instance& inst, const ServiceVector& candidate,
                              SolveStatus status, const SubgradientConfig& cfg,
                              const VerifyOptions& options) {
  if (static_cast<int>(candidate.size()) != inst.n()) {
    throw InputError("candidate length differs from n");
  }
  for (const Rational& entry : candidate) {
    if (entry < 0) throw InputError("candidate entries must be nonnegative");
  }
  if (vector_sum(candidate) > inst.w()) throw InputError("candidate exceeds the budget w");
  VerifyReport report(inst);
  report.constructed = candidate;
  report.constructed_objective = eval_f(candidate, inst.x());
  report.constructed_status = status;

  const SubgradientResult oracle = projected_subgradient(inst, cfg);
  report.oracle_objective = oracle.value;
  report.oracle_minimizer = oracle.point;
  report.oracle_converged = oracle.converged;
  report.oracle_iterations = oracle.iterations;
  const double target = to_double(report.constructed_objective);
  report.gap = oracle.value - target;

  if (options.use_grid) {
    const int resolution = options.resolution.value_or(duo_lattice_resolution(inst));
    if (lattice_size(inst.n(), resolution) <= BigInt(std::to_string(options.grid_cap))) {
      const GridResult grid = grid_search(inst, resolution, options.grid_cap);
      report.grid_resolution = resolution;
      report.grid_objective = grid.value;
      if (grid.value < report.constructed_objective) {
        report.status = VerifyStatus::kViolated;
        report.exact_recheck = grid.value;
        report.note = "lattice point strictly below the construction";
        return report;
      }
    }
  }

  if (oracle.value < target - 10 * cfg.tolerance) {
    const ServiceVector candidate = exact_point(oracle.point, inst.w(), options.max_denominator);
    const Rational exact = eval_f(candidate, inst.x());
    report.exact_recheck = exact;
    if (exact < report.constructed_objective) {
      report.status = VerifyStatus::kViolated;
      report.note = "rationalized oracle point strictly below the construction";
    } else {
      report.status = VerifyStatus::kInconclusive;
      report.note = "float candidate not confirmed in exact arithmetic";
    }
    return report;
  }
  if (!oracle.converged) {
    report.status = VerifyStatus::kInconclusive;
    report.note = "oracle stopped at max_iters before converging";
    return report;
  }
  if (oracle.value >= target - cfg.tolerance) {
    report.status = VerifyStatus::kConfirmed;
  } else {
    report.status = VerifyStatus::kInconclusive;
    report.note = "oracle within 10x tolerance below the construction";
  }
  return report;
}

}  // namespace extopt
