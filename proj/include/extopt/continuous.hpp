#pragma once

#include <vector>

#include "extopt/model.hpp"
#include "extopt/types.hpp"

namespace extopt {

// ceil((n+1)/(m+1)) and floor((n+1)/(m+1)). Requires n >= 1, 0 <= m <= n.
TauPair equidistant_gap_bounds(int n, int m);

// (tau_u - 1)(x(n+1) - (w+x) tau_u / 2) with tau_u = tau_u(n, m).
Rational equidistant_objective(const Instance& inst);

// Optimum over the continuous set when w = m x. Throws WrongBranchError
// when r != 0.
SolveReport solve_equidistant(const Instance& inst);

struct InterleavedGaps {
  std::vector<int> y_gaps;  // m + 1 gaps, small gaps first
  std::vector<int> r_gaps;  // m + 2 gaps, small gaps first
};

// Gap sequences for the two layers of a duo solution. Requires
// 0 <= m < n.
InterleavedGaps canonical_gap_profiles(int n, int m);

// For every l in 1..m+1:
//   sum_{k<=l} r_gaps[k] <= sum_{k<=l} y_gaps[k] <= sum_{k<=l+1} r_gaps[k].
bool interleaving_holds(const InterleavedGaps& gaps);

// y at the m interior cumulative positions of the y-gaps, r at the m+1
// interior cumulative positions of the r-gaps. Requires r > 0.
DuoSolution build_duo(const Instance& inst);

// Dispatch: r = 0 -> equidistant; r > 0 -> duo, PROVEN when the two gap
// bounds share tau_u or tau_l, CONJECTURED otherwise.
SolveReport solve_continuous(const Instance& inst);

}  // namespace extopt
