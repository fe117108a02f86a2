#include "extopt/continuous.hpp"

#include <numeric>
#include <string>

#include "extopt/combinatorial.hpp"

namespace extopt {
namespace {

ServiceVector place_layer(int n, const std::vector<int>& gaps, const Rational& mass) {
  ServiceVector v(static_cast<std::size_t>(n), Rational(0));
  int position = 0;
  for (std::size_t k = 0; k + 1 < gaps.size(); ++k) {
    position += gaps[k];
    v[static_cast<std::size_t>(position - 1)] = mass;
  }
  return v;
}

std::vector<int> small_first_gaps(int n, int masses) {
  const int small = (n + 1) / (masses + 1);
  const int count_small = (masses + 1) * (1 + small) - n - 1;
  std::vector<int> gaps(static_cast<std::size_t>(count_small), small);
  gaps.insert(gaps.end(), static_cast<std::size_t>(masses + 1 - count_small), small + 1);
  return gaps;
}

}  // namespace

TauPair equidistant_gap_bounds(int n, int m) {
  if (n < 1 || m < 0 || m > n) throw InputError("gap bounds require n >= 1 and 0 <= m <= n");
  return {(n + 1 + m) / (m + 1), (n + 1) / (m + 1)};
}

Rational equidistant_objective(const Instance& inst) {
  const int tau_u = equidistant_gap_bounds(inst.n(), inst.m()).tau_u;
  const Rational& x = inst.x();
  return Rational((tau_u - 1) * (x * (inst.n() + 1) - (inst.w() + x) * tau_u / 2));
}

SolveReport solve_equidistant(const Instance& inst) {
  if (inst.r() != 0) {
    throw WrongBranchError("w is not a multiple of x; use solve_continuous");
  }
  SolveReport report;
  report.solver = "continuous/equidistant";
  report.status = SolveStatus::kProven;
  report.tau_m = equidistant_gap_bounds(inst.n(), inst.m());
  report.max_gap = report.tau_m->tau_u;
  report.solution = structured_solution(inst, report.max_gap);
  report.objective = eval_f(report.solution, inst.x());
  report.closed_form = equidistant_objective(inst);
  if (report.objective != *report.closed_form) {
    throw ConstructionError("equidistant solution misses the closed-form objective");
  }
  return report;
}

InterleavedGaps canonical_gap_profiles(int n, int m) {
  if (m < 0 || m >= n) throw InputError("canonical gap profiles require 0 <= m < n");
  return {small_first_gaps(n, m), small_first_gaps(n, m + 1)};
}

bool interleaving_holds(const InterleavedGaps& gaps) {
  const auto& y = gaps.y_gaps;
  const auto& r = gaps.r_gaps;
  if (r.size() != y.size() + 1) return false;
  int y_sum = 0;
  int r_sum = 0;
  for (std::size_t l = 0; l < y.size(); ++l) {
    y_sum += y[l];
    r_sum += r[l];
    if (r_sum > y_sum || y_sum > r_sum + r[l + 1]) return false;
  }
  return true;
}

DuoSolution build_duo(const Instance& inst) {
  if (inst.r() == 0) throw WrongBranchError("duo construction requires r > 0");
  const InterleavedGaps gaps = canonical_gap_profiles(inst.n(), inst.m());
  DuoSolution duo;
  duo.gap_y = gaps.y_gaps;
  duo.gap_r = gaps.r_gaps;
  duo.v_y = place_layer(inst.n(), duo.gap_y, inst.y());
  duo.v_r = place_layer(inst.n(), duo.gap_r, inst.r());
  duo.combined.resize(duo.v_y.size());
  for (std::size_t i = 0; i < duo.combined.size(); ++i) {
    duo.combined[i] = duo.v_y[i] + duo.v_r[i];
    if (duo.combined[i] > inst.x()) {
      throw ConstructionError("duo layers overlap beyond x at position " + std::to_string(i + 1));
    }
  }
  if (vector_sum(duo.combined) != inst.w()) {
    throw ConstructionError("duo solution does not carry total mass w");
  }
  return duo;
}

SolveReport solve_continuous(const Instance& inst) {
  if (inst.r() == 0) return solve_equidistant(inst);

  SolveReport report;
  report.solver = "continuous/duo";
  report.tau_m = equidistant_gap_bounds(inst.n(), inst.m());
  report.tau_m_plus_1 = equidistant_gap_bounds(inst.n(), inst.m() + 1);
  report.max_gap = report.tau_m->tau_u;
  report.duo = build_duo(inst);
  report.solution = report.duo->combined;
  report.objective = eval_f(report.solution, inst.x());

  const bool proven = report.tau_m->tau_u == report.tau_m_plus_1->tau_u ||
                      report.tau_m->tau_l == report.tau_m_plus_1->tau_l;
  if (proven) {
    report.status = SolveStatus::kProven;
    report.closed_form = equidistant_objective(inst);
    if (report.objective != *report.closed_form) {
      throw ConstructionError("duo solution misses the closed-form objective");
    }
  } else {
    report.status = SolveStatus::kConjectured;
  }
  return report;
}

}  // namespace extopt
