#include "extopt/types.hpp"

#include <algorithm>
#include <numeric>

namespace extopt {

bool GapProfile::is_valid(int n) const {
  if (gaps.empty() || t < 0 || t >= static_cast<int>(gaps.size())) return false;
  if (std::any_of(gaps.begin(), gaps.end(), [](int g) { return g < 1; })) return false;
  if (std::accumulate(gaps.begin(), gaps.end(), 0) != n + 1) return false;
  if (*std::max_element(gaps.begin(), gaps.end()) != max_gap()) return false;
  int lo = max_gap() + 1;
  int hi = 0;
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    if (static_cast<int>(k) == t) continue;
    lo = std::min(lo, gaps[k]);
    hi = std::max(hi, gaps[k]);
  }
  return gaps.size() == 1 || hi - lo <= 1;
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kProven:
      return "PROVEN";
    case SolveStatus::kConjectured:
      return "CONJECTURED";
  }
  return "UNKNOWN";
}

}  // namespace extopt
