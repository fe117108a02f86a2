#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "extopt/oracle.hpp"
#include "extopt/parallel.hpp"

namespace extopt {
namespace {

struct RestartOutcome {
  std::vector<double> point;
  double value = 0.0;
  bool converged = false;
  long iterations = 0;
};

// Subgradient with its component along (1, ..., 1) removed; returns the
// Euclidean norm of what is left.
double tangent_part(std::span<const double> g, std::span<double> out) {
  const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
  double norm2 = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = g[i] - mean;
    norm2 += out[i] * out[i];
  }
  return std::sqrt(norm2);
}

std::vector<double> random_start(int n, double w, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> p(static_cast<std::size_t>(n));
  for (double& pi : p) pi = draw(rng);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& pi : p) pi *= w / total;
  return project_to_simplex(p, w);
}

class Descent {
 public:
  Descent(double x, double w, std::vector<double> start)
      : x_(x), w_(w), v_(std::move(start)), g_(v_.size()), t_(v_.size()), trial_(v_.size()) {
    best_point_ = v_;
    best_ = objective_and_subgradient(v_, x_, g_);
  }

  // Evaluates at the current point, records it, and returns the tangent
  // norm of the subgradient (0 means no descent direction is available).
  double evaluate() {
    const double value = objective_and_subgradient(v_, x_, g_);
    ++iterations_;
    if (value < best_) {
      best_ = value;
      best_point_ = v_;
    }
    return tangent_part(g_, t_);
  }

  void step(double length, double norm) {
    for (std::size_t i = 0; i < v_.size(); ++i) trial_[i] = v_[i] - length * t_[i] / norm;
    v_ = project_to_simplex(trial_, w_);
  }

  void reset_to_best() { v_ = best_point_; }

  double best() const { return best_; }
  long iterations() const { return iterations_; }

  RestartOutcome finish(bool converged) const {
    return {best_point_, best_, converged, iterations_};
  }

 private:
  double x_;
  double w_;
  std::vector<double> v_;
  std::vector<double> g_;
  std::vector<double> t_;
  std::vector<double> trial_;
  std::vector<double> best_point_;
  double best_ = 0.0;
  long iterations_ = 0;
};

RestartOutcome run_geometric(Descent descent, const SubgradientConfig& cfg, int n, double w) {
  const long phase = cfg.phase_length > 0 ? cfg.phase_length : 40L * n;
  const double floor = cfg.step_floor * w;
  for (double s = cfg.step_scale * w; s >= floor; s /= 2) {
    for (long k = 0; k < phase; ++k) {
      if (descent.iterations() >= cfg.max_iters) return descent.finish(false);
      const double norm = descent.evaluate();
      if (norm == 0.0) break;
      descent.step(s, norm);
    }
    descent.reset_to_best();
  }
  return descent.finish(true);
}

RestartOutcome run_diminishing(Descent descent, const SubgradientConfig& cfg, double w) {
  const double c = cfg.step_scale * w;
  double checkpoint = descent.best();
  for (long k = 1; k <= cfg.max_iters; ++k) {
    const double norm = descent.evaluate();
    if (k % cfg.stagnation_window == 0) {
      if (checkpoint - descent.best() < cfg.tolerance) return descent.finish(true);
      checkpoint = descent.best();
    }
    if (norm == 0.0) return descent.finish(true);
    descent.step(c / std::sqrt(static_cast<double>(k)), norm);
  }
  return descent.finish(false);
}

}  // namespace

void SubgradientConfig::validate() const {
  if (max_iters < 1) throw InputError("max_iters must be at least 1");
  if (!(tolerance > 0)) throw InputError("tolerance must be positive");
  if (!(step_scale > 0)) throw InputError("step scale must be positive");
  if (!(step_floor > 0)) throw InputError("step floor must be positive");
  if (restarts < 1) throw InputError("restarts must be at least 1");
  if (stagnation_window < 1) throw InputError("stagnation window must be at least 1");
  if (phase_length < 0) throw InputError("phase length must be nonnegative");
}

double objective_and_subgradient(std::span<const double> v, double x, std::span<double> g) {
  const std::size_t n = v.size();
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v[i];
  std::fill(g.begin(), g.end(), 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    // g[i] collects, for this k, the coefficients of intervals [k, l] with l >= i.
    double suffix = 0.0;
    for (std::size_t l = n; l-- > k;) {
      const double shortfall = x - (prefix[l + 1] - prefix[k]);
      if (shortfall > 0) {
        total += shortfall;
        suffix -= 1.0;
      } else if (shortfall == 0) {
        suffix -= 0.5;
      }
      g[l] += suffix;
    }
  }
  return total;
}

std::vector<double> project_to_simplex(std::span<const double> p, double total) {
  if (p.empty()) throw InputError("cannot project an empty vector");
  if (!(total > 0)) throw InputError("simplex total must be positive");
  std::vector<double> sorted(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double running = 0.0;
  double threshold = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    running += sorted[i];
    const double candidate = (running - total) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0) threshold = candidate;
  }
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::max(p[i] - threshold, 0.0);
  return out;
}

SubgradientResult projected_subgradient(const Instance& inst, const SubgradientConfig& cfg) {
  cfg.validate();
  const int n = inst.n();
  const double x = to_double(inst.x());
  const double w = to_double(inst.w());

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  parallel_for(outcomes.size(), [&](std::size_t i) {
    Descent descent(x, w, random_start(n, w, cfg.seed, static_cast<int>(i)));
    outcomes[i] = cfg.step_rule == StepRule::kGeometric ? run_geometric(std::move(descent), cfg, n, w)
                                                        : run_diminishing(std::move(descent), cfg, w);
  });

  SubgradientResult result;
  result.converged = true;
  const RestartOutcome* best = nullptr;
  for (const RestartOutcome& o : outcomes) {
    result.iterations += o.iterations;
    result.converged = result.converged && o.converged;
    if (best == nullptr || o.value < best->value ||
        (o.value == best->value && o.point < best->point)) {
      best = &o;
    }
  }
  result.point = best->point;
  result.value = best->value;
  return result;
}

}  // namespace extopt
