#include <algorithm>
#include <limits>
#include <string>

#include "extopt/oracle.hpp"

namespace extopt {
namespace {

using Wide = __int128;

// Depth-first walk of the composition lattice in lexicographic order. A
// branch is cut once the intervals already closed, plus a lower bound for
// the intervals lying wholly in the open suffix, reach the incumbent, so
// the first minimizer found is the lexicographically smallest.
//
// Suffix bound: for t free positions holding R units, each window length j
// covers every unit at most j times, so the t+1-j windows of length j
// contribute at least (t+1-j) p - q j R. The open bound applies the same
// count to every window of length j that ends in the suffix, including the
// ones that start in the fixed prefix.
class LatticeWalk {
 public:
  LatticeWalk(int n, int resolution, std::int64_t p, std::int64_t q)
      : n_(n), resolution_(resolution), p_(p), q_(q),
        counts_(static_cast<std::size_t>(n), 0), prefix_(static_cast<std::size_t>(n) + 1, 0) {
    suffix_bound_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(resolution + 1), 0);
    for (int t = 1; t < n; ++t) {
      for (int units = 0; units <= resolution; ++units) {
        Wide bound = 0;
        for (int j = 1; j <= t; ++j) {
          const Wide rows = static_cast<Wide>(t + 1 - j) * p - static_cast<Wide>(q) * j * units;
          if (rows > 0) bound += rows;
        }
        suffix_bound_[index(t, units)] = bound;
      }
    }
  }

  void run() { descend(0, resolution_, 0); }

  bool found() const { return found_; }
  Wide best() const { return best_; }
  const std::vector<int>& best_counts() const { return best_counts_; }

 private:
  void descend(int i, int remaining, Wide partial) {
    const bool last = i == n_ - 1;
    const int lo = last ? remaining : 0;
    for (int c = lo; c <= remaining; ++c) {
      counts_[static_cast<std::size_t>(i)] = c;
      prefix_[static_cast<std::size_t>(i) + 1] = prefix_[static_cast<std::size_t>(i)] + c;
      Wide closed = partial;
      for (int k = 0; k <= i; ++k) {
        const std::int64_t units = prefix_[static_cast<std::size_t>(i) + 1] - prefix_[static_cast<std::size_t>(k)];
        const Wide shortfall = static_cast<Wide>(p_) - static_cast<Wide>(q_) * units;
        if (shortfall > 0) closed += shortfall;
      }
      if (found_ && !last) {
        if (closed + suffix_bound_[index(n_ - 1 - i, remaining - c)] >= best_) continue;
        if (closed + open_bound(i, remaining - c) >= best_) continue;
      }
      if (found_ && last && closed >= best_) continue;
      if (last) {
        best_ = closed;
        best_counts_ = counts_;
        found_ = true;
      } else {
        descend(i + 1, remaining - c, closed);
      }
    }
  }

  Wide open_bound(int i, int units) const {
    Wide bound = 0;
    for (int j = 2; j <= n_; ++j) {
      const int first_end = std::max(i + 1, j - 1);
      const int windows = n_ - first_end;
      if (windows <= 0) continue;
      Wide covered = static_cast<Wide>(j) * units;
      for (int a = std::max(0, i + 2 - j); a <= i; ++a) {
        const int reach = std::min(a + j - 1, n_ - 1) - i;
        covered += static_cast<Wide>(counts_[static_cast<std::size_t>(a)]) * reach;
      }
      const Wide rows = static_cast<Wide>(windows) * p_ - static_cast<Wide>(q_) * covered;
      if (rows > 0) bound += rows;
    }
    // Singletons in the suffix.
    const Wide singles = static_cast<Wide>(n_ - 1 - i) * p_ - static_cast<Wide>(q_) * units;
    if (singles > 0) bound += singles;
    return bound;
  }

  std::size_t index(int free_positions, int units) const {
    return static_cast<std::size_t>(free_positions) * static_cast<std::size_t>(resolution_ + 1) +
           static_cast<std::size_t>(units);
  }

  int n_;
  int resolution_;
  std::int64_t p_;
  std::int64_t q_;
  std::vector<int> counts_;
  std::vector<std::int64_t> prefix_;
  std::vector<Wide> suffix_bound_;
  bool found_ = false;
  Wide best_ = 0;
  std::vector<int> best_counts_;
};

BigInt rational_gcd_numerator(const Rational& a, const Rational& b, BigInt* denominator) {
  // gcd(a, b) for positive rationals = gcd(a_num * b_den, b_num * a_den) / (a_den * b_den).
  BigInt g;
  BigInt lhs = a.get_num() * b.get_den();
  BigInt rhs = b.get_num() * a.get_den();
  mpz_gcd(g.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  *denominator = a.get_den() * b.get_den();
  return g;
}

}  // namespace

BigInt lattice_size(int n, int resolution) {
  if (n < 1 || resolution < 1) throw InputError("lattice requires n >= 1 and resolution >= 1");
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(resolution + n - 1),
               static_cast<unsigned long>(n - 1));
  return out;
}

int duo_lattice_resolution(const Instance& inst) {
  Rational step = inst.x();
  if (inst.r() > 0) {
    BigInt den;
    BigInt num = rational_gcd_numerator(inst.y(), inst.r(), &den);
    step = Rational(num, den);
    step.canonicalize();
  }
  const Rational resolution = inst.w() / step;
  if (resolution.get_den() != 1 || !resolution.get_num().fits_sint_p()) {
    throw SizeError("duo lattice resolution is not a representable integer");
  }
  return static_cast<int>(resolution.get_num().get_si());
}

GridResult grid_search(const Instance& inst, int resolution, std::uint64_t cap) {
  const BigInt points = lattice_size(inst.n(), resolution);
  if (cap != kUnlimitedGrid && points > BigInt(std::to_string(cap))) {
    throw SizeError("grid has " + points.get_str() + " points, cap is " + std::to_string(cap));
  }
  const Rational step = inst.w() / resolution;
  // (x - step * K)^+ = (step / q) * (p - q K)^+ with x / step = p / q.
  const Rational ratio = inst.x() / step;
  if (!ratio.get_num().fits_slong_p() || !ratio.get_den().fits_slong_p() ||
      abs(ratio.get_num()) > BigInt(std::numeric_limits<std::int32_t>::max()) ||
      ratio.get_den() > BigInt(std::numeric_limits<std::int32_t>::max())) {
    throw SizeError("grid scaling factors exceed the integer kernel range");
  }
  const std::int64_t p = ratio.get_num().get_si();
  const std::int64_t q = ratio.get_den().get_si();

  LatticeWalk walk(inst.n(), resolution, p, q);
  walk.run();

  GridResult result;
  result.lattice_points = points;
  result.minimizer.reserve(static_cast<std::size_t>(inst.n()));
  for (int c : walk.best_counts()) result.minimizer.emplace_back(step * c);
  const auto best = walk.best();
  const BigInt best_big(std::to_string(static_cast<long long>(best)));
  result.value = step / q * Rational(best_big);
  if (result.value != eval_f(result.minimizer, inst.x())) {
    throw ConstructionError("grid kernel disagrees with exact evaluation");
  }
  return result;
}

}  // namespace extopt
