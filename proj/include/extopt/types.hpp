#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extopt/model.hpp"
#include "extopt/rational.hpp"

namespace extopt {

// Positive gaps between consecutive x-masses (with virtual masses at 0 and
// n+1). gaps[t] is a maximal gap; all other gaps differ pairwise by <= 1.
struct GapProfile {
  std::vector<int> gaps;
  int t = 0;

  int max_gap() const { return gaps.at(static_cast<std::size_t>(t)); }
  // Sum equals n + 1 and the near-equidistance conditions hold.
  bool is_valid(int n) const;
};

// Outcome of the odd/even max-gap search for m >= 1.
struct DeltaCertificate {
  int delta1 = 0;  // minimal odd candidate
  int delta2 = 0;  // minimal even candidate
  int delta_star = 0;
  Rational a_delta1;
  Rational a_delta2;
  Rational delta_minus;
  Rational delta_plus;
  // Window bracket failed for at least one parity class and a linear scan
  // produced the candidate instead of bisection.
  bool used_fallback = false;
};

// Largest and smallest gap of an equidistant placement of m masses.
struct TauPair {
  int tau_u = 0;
  int tau_l = 0;
};

// Superposition of an m-mass layer of value y and an (m+1)-mass layer of
// value r, with y + r = x.
struct DuoSolution {
  ServiceVector v_y;
  ServiceVector v_r;
  ServiceVector combined;
  std::vector<int> gap_y;  // m + 1 gaps
  std::vector<int> gap_r;  // m + 2 gaps
};

enum class SolveStatus { kProven, kConjectured };

std::string_view to_string(SolveStatus status);

struct SolveReport {
  std::string solver;
  ServiceVector solution;
  Rational objective;
  SolveStatus status = SolveStatus::kProven;
  int max_gap = 0;
  std::optional<DeltaCertificate> certificate;
  std::optional<Rational> closed_form;
  std::optional<TauPair> tau_m;          // gap bounds for m masses
  std::optional<TauPair> tau_m_plus_1;   // and for m + 1 masses
  std::optional<DuoSolution> duo;
};

}  // namespace extopt
