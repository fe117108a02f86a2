#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extopt/model.hpp"
#include "extopt/types.hpp"

namespace extopt {

// ---------------------------------------------------------------------------
// Exhaustive search over the combinatorial set: m entries equal to x, one
// entry equal to r when r > 0, the rest zero.

struct ExactMinimum {
  ServiceVector minimizer;  // lexicographically smallest among minimizers
  Rational value;
  std::uint64_t evaluations = 0;
};

inline constexpr std::uint64_t kDefaultBruteForceCap = 5'000'000;

// Throws SizeError when C(n, m) * n exceeds `cap`.
ExactMinimum brute_force_combinatorial(const Instance& inst,
                                       std::uint64_t cap = kDefaultBruteForceCap);

// Every minimizer over the combinatorial set, sorted lexicographically.
std::vector<ServiceVector> combinatorial_minimizers(const Instance& inst,
                                                    std::uint64_t cap = kDefaultBruteForceCap);

// ---------------------------------------------------------------------------
// Floating-point projected subgradient over {v >= 0, sum v = w}.

enum class StepRule {
  // Normalized steps of length c, halved after every phase, each phase
  // restarting from the best iterate. Converged once the step falls below
  // step_floor * w.
  kGeometric,
  // Steps c / sqrt(k) along the normalized subgradient. Converged once the
  // best value improves by less than `tolerance` over `stagnation_window`
  // iterations.
  kDiminishing,
};

struct SubgradientConfig {
  long max_iters = 200'000;  // per restart
  StepRule step_rule = StepRule::kGeometric;
  double step_scale = 1.0;  // c = step_scale * w
  double tolerance = 1e-7;
  long stagnation_window = 1000;
  long phase_length = 0;  // geometric rule; 0 picks 40 * n
  double step_floor = 1e-12;
  std::uint64_t seed = 0;
  int restarts = 8;

  void validate() const;
};

struct SubgradientResult {
  std::vector<double> point;
  double value = 0.0;
  bool converged = false;
  long iterations = 0;  // summed over restarts
};

// f(v) in double precision; fills `g` with the subgradient that takes -1
// for every interval with positive shortfall, 0 for negative shortfall and
// -1/2 on exact ties.
double objective_and_subgradient(std::span<const double> v, double x, std::span<double> g);

// Euclidean projection onto {v >= 0, sum v = total} (sort and threshold).
std::vector<double> project_to_simplex(std::span<const double> p, double total);

SubgradientResult projected_subgradient(const Instance& inst, const SubgradientConfig& cfg);

// ---------------------------------------------------------------------------
// Exact search over the lattice of compositions of w into multiples of
// w / resolution.

struct GridResult {
  ServiceVector minimizer;  // lexicographically smallest lattice minimizer
  Rational value;
  BigInt lattice_points;
};

inline constexpr std::uint64_t kDefaultGridCap = 10'000'000;
// Disables the size check; the walk prunes most of the lattice.
inline constexpr std::uint64_t kUnlimitedGrid = std::numeric_limits<std::uint64_t>::max();

// C(resolution + n - 1, n - 1).
BigInt lattice_size(int n, int resolution);

// Smallest resolution whose lattice contains every multiple of both y and
// r up to w (hence the duo and equidistant constructions).
int duo_lattice_resolution(const Instance& inst);

// Throws SizeError when the lattice has more than `cap` points.
GridResult grid_search(const Instance& inst, int resolution,
                       std::uint64_t cap = kDefaultGridCap);

// ---------------------------------------------------------------------------
// Conjecture harness: closed-form construction against the oracles.

enum class VerifyStatus { kConfirmed, kViolated, kInconclusive };

std::string_view to_string(VerifyStatus status);

struct VerifyOptions {
  bool use_grid = true;
  std::optional<int> resolution;  // default: duo_lattice_resolution
  std::uint64_t grid_cap = kDefaultGridCap;
  std::int64_t max_denominator = 1'000'000;
};

struct VerifyReport {
  explicit VerifyReport(Instance inst) : instance(std::move(inst)) {}

  Instance instance;
  ServiceVector constructed;
  Rational constructed_objective;
  SolveStatus constructed_status = SolveStatus::kProven;
  double oracle_objective = 0.0;
  double gap = 0.0;  // oracle_objective - constructed_objective
  VerifyStatus status = VerifyStatus::kInconclusive;
  std::vector<double> oracle_minimizer;
  bool oracle_converged = false;
  long oracle_iterations = 0;
  std::optional<int> grid_resolution;
  std::optional<Rational> grid_objective;
  std::optional<Rational> exact_recheck;  // f at the rationalized oracle point
  std::string note;
};

VerifyReport verify_conjecture(const Instance& inst, const SubgradientConfig& cfg,
                               const VerifyOptions& options = {});

// Same comparison for an arbitrary point of {v >= 0, sum v <= w}.
VerifyReport verify_candidate(const Instance& inst, const ServiceVector& candidate,
                              SolveStatus status, const SubgradientConfig& cfg,
                              const VerifyOptions& options = {});

}  // namespace extopt
