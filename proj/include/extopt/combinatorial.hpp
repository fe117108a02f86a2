#pragma once

#include <vector>

#include "extopt/model.hpp"
#include "extopt/types.hpp"

namespace extopt {

// Integers j with floor((a+b)/2) <= j <= ceil((a+b)/2). Requires 0 < a < b.
std::vector<int> middle_points(int a, int b);

// Half the sum of d(d-1) over a near-equidistant split of `total` into
// `parts` positive integers. Requires 0 < parts <= total.
Rational equidistant_pair_sum(int parts, int total);

// Near-equidistant split of `total` into `parts` positive integers,
// ascending.
std::vector<int> near_equidistant_parts(int parts, int total);

// Objective of the best structured solution with maximal gap `max_gap`.
// Requires m >= 1 and 1 <= max_gap <= n + 1 - m.
Rational gap_objective(const Instance& inst, int max_gap);

// gap_objective(d + 2) - gap_objective(d) in closed form; increasing in d.
// Requires m >= 1 and 1 <= max_gap <= n - 1.
Rational gap_objective_increment(const Instance& inst, int max_gap);

// Smallest and largest max-gap values for which a structured solution
// exists: [ceil((n+1)/(m+1)), n+1-m], or {n+1, n+1} when m = 0.
std::pair<int, int> feasible_max_gaps(const Instance& inst);

// Odd/even bisection for the optimal max gap. Requires m >= 1.
DeltaCertificate search_max_gap(const Instance& inst);

// Canonical profile: the max gap first, the rest ascending.
GapProfile canonical_profile(const Instance& inst, int max_gap);

// Mass x at the cumulative gap positions and r at the smallest middle
// point of the stretch opened by the max gap.
ServiceVector structured_solution(const Instance& inst, int max_gap);

// Every structured solution with the given max gap: all orderings of the
// gap multiset, every choice of maximal gap, every middle point. Sorted
// lexicographically without duplicates. Throws SizeError when n > cap.
std::vector<ServiceVector> enumerate_structured_solutions(const Instance& inst, int max_gap,
                                                          int cap = 20);

SolveReport solve_combinatorial(const Instance& inst);

}  // namespace extopt
