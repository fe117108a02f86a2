#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "extopt/rational.hpp"

namespace extopt::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInvalidInput = 2,
  kTrivialRegime = 3,  // also used for unstable queue parameters
  kInconclusive = 4,
  kViolated = 5,
};

// Runs the command line `args` (without the program name). JSON goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Sweep grid: n_min..n_max crossed with w_min, w_min + w_step, ... <= w_max.
// Instances with w >= n x are skipped.
struct SweepPlan {
  int n_min = 1;
  int n_max = 0;
  Rational x;
  Rational w_min;
  Rational w_max;
  Rational w_step;
};

// "7" or "7..9".
std::pair<int, int> parse_int_range(const std::string& text);
// "2.2" or "0.1..6.9".
std::pair<Rational, Rational> parse_rational_range(const std::string& text);

inline constexpr const char* kSweepHeader =
    "n,x,w,m,r,delta_star,tau_u1,tau_u2,objective_closed,objective_oracle,status";

}  // namespace extopt::cli
