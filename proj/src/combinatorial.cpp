#include "extopt/combinatorial.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace extopt {
namespace {

// floor(p / q) for q > 0 and any sign of p.
int floor_div(int p, int q) {
  int quotient = p / q;
  if (p % q != 0 && p < 0) --quotient;
  return quotient;
}

int ceil_div(int p, int q) { return -floor_div(-p, q); }

// Middle points of {first, ..., last}; a single-element stretch is its own
// middle point.
std::vector<int> stretch_middle_points(int first, int last) {
  const int lo = floor_div(first + last, 2);
  const int hi = ceil_div(first + last, 2);
  if (lo == hi) return {lo};
  return {lo, hi};
}

void require_m_positive(const Instance& inst) {
  if (inst.m() < 1) throw InputError("requires m = floor(w/x) >= 1");
}

ServiceVector place_masses(const Instance& inst, const std::vector<int>& gaps, int r_position) {
  ServiceVector v(static_cast<std::size_t>(inst.n()), Rational(0));
  int position = 0;
  for (std::size_t k = 0; k + 1 < gaps.size(); ++k) {
    position += gaps[k];
    v[static_cast<std::size_t>(position - 1)] = inst.x();
  }
  if (inst.r() > 0) {
    v[static_cast<std::size_t>(r_position - 1)] = inst.r();
  }
  return v;
}

int stretch_start(const std::vector<int>& gaps, int t) {
  int start = 0;
  for (int k = 0; k < t; ++k) start += gaps[static_cast<std::size_t>(k)];
  return start;
}

void require_feasible(const Instance& inst, int max_gap) {
  const auto [lo, hi] = feasible_max_gaps(inst);
  if (max_gap < lo || max_gap > hi) {
    throw ConstructionError("no structured solution with max gap " + std::to_string(max_gap) +
                            " (feasible range [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "])");
  }
  if (inst.r() > 0 && max_gap < 2) {
    throw ConstructionError("max gap 1 leaves no room for the remainder mass");
  }
}

}  // namespace

std::vector<int> middle_points(int a, int b) {
  if (a <= 0 || a >= b) throw InputError("middle_points requires 0 < a < b");
  return stretch_middle_points(a, b);
}

Rational equidistant_pair_sum(int parts, int total) {
  if (parts <= 0 || total < parts) {
    throw InputError("equidistant_pair_sum requires 0 < parts <= total");
  }
  const long q = total / parts;
  const long s = total % parts;
  const long twice = s * (q + 1) * q + (parts - s) * q * (q - 1);
  return fraction(twice, 2);
}

std::vector<int> near_equidistant_parts(int parts, int total) {
  if (parts <= 0 || total < parts) {
    throw InputError("near_equidistant_parts requires 0 < parts <= total");
  }
  const int q = total / parts;
  const int s = total % parts;
  std::vector<int> out(static_cast<std::size_t>(parts - s), q);
  out.insert(out.end(), static_cast<std::size_t>(s), q + 1);
  return out;
}

Rational gap_objective(const Instance& inst, int max_gap) {
  require_m_positive(inst);
  const int n = inst.n();
  const int m = inst.m();
  if (max_gap < 1 || max_gap > n + 1 - m) {
    throw InputError("max gap out of range [1, n+1-m]");
  }
  const long d = max_gap;
  Rational inner = equidistant_pair_sum(m, n + 1 - max_gap) + fraction(d * (d - 1), 2);
  const long lower_half = d / 2;
  const long upper_half = (d + 1) / 2;
  return Rational(inst.x() * inner - inst.r() * (lower_half * upper_half));
}

Rational gap_objective_increment(const Instance& inst, int max_gap) {
  require_m_positive(inst);
  const int n = inst.n();
  const int m = inst.m();
  if (max_gap < 1 || max_gap > n - 1) throw InputError("max gap out of range [1, n-1]");
  const Rational half_r = inst.r() / 2;
  const long floors = floor_div(n - max_gap - 1, m) + floor_div(n - max_gap, m);
  return Rational((2L * max_gap + 1) * (inst.x() - half_r) - inst.x() * floors - half_r);
}

std::pair<int, int> feasible_max_gaps(const Instance& inst) {
  const int n = inst.n();
  const int m = inst.m();
  if (m == 0) return {n + 1, n + 1};
  return {ceil_div(n + 1, m + 1), n + 1 - m};
}

DeltaCertificate search_max_gap(const Instance& inst) {
  require_m_positive(inst);
  const int n = inst.n();
  const int m = inst.m();
  const int top = n + 1 - m;
  const Rational& x = inst.x();
  const Rational& r = inst.r();

  DeltaCertificate cert;
  {
    const Rational center = r / 2 + x * fraction(2 * n - 1 - m, 2 * m);
    const Rational slope = x * (1 + fraction(1, m)) - r / 2;
    cert.delta_minus = (center - 1) / slope;
    cert.delta_plus = (center + 1) / slope;
  }

  // Stop at the first class member where A starts increasing, or at the
  // last member of the class inside the range.
  auto stops = [&](int d) { return d + 2 > top || gap_objective_increment(inst, d) > 0; };

  auto search_class = [&](int first) {
    const int last = first + 2 * ((top - first) / 2);
    int lo = static_cast<int>(ceil_to_int(cert.delta_minus));
    int hi = static_cast<int>(floor_to_int(cert.delta_plus));
    lo = std::max(lo, first);
    hi = std::min(hi, last);
    if ((lo - first) % 2 != 0) ++lo;
    if ((hi - first) % 2 != 0) --hi;
    const bool bracketed = lo <= hi && stops(hi) && (lo == first || !stops(lo - 2));
    if (bracketed) {
      while (lo < hi) {
        int mid = lo + 2 * ((hi - lo) / 4);
        if (stops(mid)) {
          hi = mid;
        } else {
          lo = mid + 2;
        }
      }
      return lo;
    }
    cert.used_fallback = true;
    int d = first;
    while (!stops(d)) d += 2;
    return d;
  };

  cert.delta1 = search_class(1);
  cert.delta2 = search_class(2);
  cert.a_delta1 = gap_objective(inst, cert.delta1);
  cert.a_delta2 = gap_objective(inst, cert.delta2);

  const auto [feasible_lo, feasible_hi] = feasible_max_gaps(inst);
  auto feasible = [&](int d) { return d >= feasible_lo && d <= feasible_hi; };
  int pick = cert.a_delta1 < cert.a_delta2 ? cert.delta1 : cert.delta2;
  if (!feasible(pick)) pick = pick == cert.delta1 ? cert.delta2 : cert.delta1;
  if (!feasible(pick)) {
    throw ConstructionError("neither odd nor even max-gap candidate admits a structured solution");
  }
  cert.delta_star = pick;
  return cert;
}

GapProfile canonical_profile(const Instance& inst, int max_gap) {
  require_feasible(inst, max_gap);
  GapProfile profile;
  profile.gaps.push_back(max_gap);
  if (inst.m() > 0) {
    auto rest = near_equidistant_parts(inst.m(), inst.n() + 1 - max_gap);
    profile.gaps.insert(profile.gaps.end(), rest.begin(), rest.end());
  }
  profile.t = 0;
  return profile;
}

ServiceVector structured_solution(const Instance& inst, int max_gap) {
  const GapProfile profile = canonical_profile(inst, max_gap);
  int r_position = 0;
  if (inst.r() > 0) {
    const int start = stretch_start(profile.gaps, profile.t);
    r_position = stretch_middle_points(start + 1, start + max_gap - 1).front();
  }
  return place_masses(inst, profile.gaps, r_position);
}

std::vector<ServiceVector> enumerate_structured_solutions(const Instance& inst, int max_gap,
                                                          int cap) {
  if (inst.n() > cap) {
    throw SizeError("enumeration capped at n <= " + std::to_string(cap));
  }
  GapProfile base = canonical_profile(inst, max_gap);
  std::vector<int> gaps = base.gaps;
  std::sort(gaps.begin(), gaps.end());
  std::set<ServiceVector> found;
  do {
    for (int t = 0; t < static_cast<int>(gaps.size()); ++t) {
      if (gaps[static_cast<std::size_t>(t)] != max_gap) continue;
      if (inst.r() > 0) {
        const int start = stretch_start(gaps, t);
        for (int j : stretch_middle_points(start + 1, start + max_gap - 1)) {
          found.insert(place_masses(inst, gaps, j));
        }
      } else {
        found.insert(place_masses(inst, gaps, 0));
      }
    }
  } while (std::next_permutation(gaps.begin(), gaps.end()));
  return {found.begin(), found.end()};
}

SolveReport solve_combinatorial(const Instance& inst) {
  SolveReport report;
  report.solver = "combinatorial";
  report.status = SolveStatus::kProven;
  if (inst.m() == 0) {
    report.max_gap = inst.n() + 1;
  } else {
    report.certificate = search_max_gap(inst);
    report.max_gap = report.certificate->delta_star;
  }
  report.solution = structured_solution(inst, report.max_gap);
  report.objective = eval_f(report.solution, inst.x());
  return report;
}

}  // namespace extopt
