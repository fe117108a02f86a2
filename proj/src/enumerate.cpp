#include <algorithm>
#include <string>

#include "extopt/oracle.hpp"
#include "extopt/parallel.hpp"

namespace extopt {
namespace {

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

struct SubsetOutcome {
  Rational best;
  std::vector<ServiceVector> minimizers;  // ascending
  std::uint64_t evaluations = 0;
};

// Minimizers among all placements of r next to a fixed set of x positions.
SubsetOutcome scan_subset(const Instance& inst, const std::vector<int>& x_positions) {
  ServiceVector v(static_cast<std::size_t>(inst.n()), Rational(0));
  for (int i : x_positions) v[static_cast<std::size_t>(i)] = inst.x();
  SubsetOutcome out;
  auto consider = [&](const ServiceVector& candidate) {
    Rational value = eval_f(candidate, inst.x());
    ++out.evaluations;
    if (out.minimizers.empty() || value < out.best) {
      out.best = value;
      out.minimizers.assign(1, candidate);
    } else if (value == out.best) {
      out.minimizers.push_back(candidate);
    }
  };
  if (inst.r() == 0) {
    consider(v);
  } else {
    for (int j = 0; j < inst.n(); ++j) {
      if (v[static_cast<std::size_t>(j)] != 0) continue;
      v[static_cast<std::size_t>(j)] = inst.r();
      consider(v);
      v[static_cast<std::size_t>(j)] = 0;
    }
  }
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

std::vector<SubsetOutcome> scan_all(const Instance& inst, std::uint64_t cap) {
  const BigInt work = binomial(inst.n(), inst.m()) * inst.n();
  if (work > BigInt(std::to_string(cap))) {
    throw SizeError("combinatorial enumeration needs " + work.get_str() +
                    " evaluations, cap is " + std::to_string(cap));
  }
  const auto subsets = all_subsets(inst.n(), inst.m());
  std::vector<SubsetOutcome> outcomes(subsets.size());
  parallel_for(subsets.size(), [&](std::size_t i) { outcomes[i] = scan_subset(inst, subsets[i]); });
  return outcomes;
}

}  // namespace

ExactMinimum brute_force_combinatorial(const Instance& inst, std::uint64_t cap) {
  const auto outcomes = scan_all(inst, cap);
  ExactMinimum result;
  bool have = false;
  for (const SubsetOutcome& o : outcomes) {
    result.evaluations += o.evaluations;
    if (o.minimizers.empty()) continue;
    const ServiceVector& candidate = o.minimizers.front();
    if (!have || o.best < result.value ||
        (o.best == result.value && candidate < result.minimizer)) {
      result.value = o.best;
      result.minimizer = candidate;
      have = true;
    }
  }
  return result;
}

std::vector<ServiceVector> combinatorial_minimizers(const Instance& inst, std::uint64_t cap) {
  const auto outcomes = scan_all(inst, cap);
  std::vector<ServiceVector> all;
  Rational best;
  for (const SubsetOutcome& o : outcomes) {
    if (o.minimizers.empty()) continue;
    if (all.empty() || o.best < best) {
      best = o.best;
      all = o.minimizers;
    } else if (o.best == best) {
      all.insert(all.end(), o.minimizers.begin(), o.minimizers.end());
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace extopt
