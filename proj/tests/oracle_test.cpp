#include "extopt/oracle.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <random>

#include "extopt/combinatorial.hpp"
#include "extopt/continuous.hpp"
#include "support/reference.hpp"

namespace extopt {
namespace {

using reference::rationals;

Instance make(int n, const char* x, const char* w) {
  return Instance(n, parse_rational(x), parse_rational(w));
}

SubgradientConfig quick(std::uint64_t seed = 0) {
  SubgradientConfig cfg;
  cfg.seed = seed;
  cfg.restarts = 4;
  return cfg;
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_combinatorial(make(7, "1", "2.2")).value, fraction(33, 5));
  const ExactMinimum b = brute_force_combinatorial(make(5, "1", "1"));
  EXPECT_EQ(b.minimizer, rationals({"0", "0", "1", "0", "0"}));
  EXPECT_EQ(b.value, 6);
  const ExactMinimum c = brute_force_combinatorial(make(2, "1", "1"));
  EXPECT_EQ(c.value, 1);
  EXPECT_EQ(c.minimizer, rationals({"0", "1"}));
  EXPECT_EQ(combinatorial_minimizers(make(2, "1", "1")),
            (std::vector<ServiceVector>{rationals({"0", "1"}), rationals({"1", "0"})}));
}

TEST(BruteForce, MinimizersAreTheStructuredSolutions) {
  for (int n = 2; n <= 9; ++n) {
    for (int m = 0; m < n; ++m) {
      for (const Rational& frac : {Rational(0), fraction(1, 3), fraction(4, 5)}) {
        if (m == 0 && frac == 0) continue;
        const Instance inst(n, 1, m + frac);
        const auto minimizers = combinatorial_minimizers(inst);
        const ExactMinimum best = brute_force_combinatorial(inst);
        ASSERT_EQ(best.minimizer, minimizers.front());
        for (const auto& v : minimizers) ASSERT_EQ(eval_f(v, inst.x()), best.value);
        const int d = solve_combinatorial(inst).max_gap;
        for (const auto& v : enumerate_structured_solutions(inst, d)) {
          ASSERT_TRUE(std::binary_search(minimizers.begin(), minimizers.end(), v));
        }
      }
    }
  }
}

TEST(BruteForce, CapIsEnforced) {
  EXPECT_THROW(brute_force_combinatorial(make(30, "1", "10.5"), 1000), SizeError);
}

TEST(Subgradient, Targets) {
  EXPECT_NEAR(projected_subgradient(make(9, "1.1", "2.2"), quick()).value, 13.2, 1e-6);
  EXPECT_NEAR(projected_subgradient(make(7, "1", "2.2"), quick()).value, 6.4, 1e-6);
  EXPECT_NEAR(projected_subgradient(make(2, "1", "1"), quick()).value, 1.0, 1e-6);
}

TEST(Subgradient, DiminishingRuleStillApproaches) {
  SubgradientConfig cfg = quick();
  cfg.step_rule = StepRule::kDiminishing;
  cfg.max_iters = 20000;
  const SubgradientResult result = projected_subgradient(make(7, "1", "2.2"), cfg);
  EXPECT_GE(result.value, 6.4 - 1e-9);
  EXPECT_LT(result.value, 6.5);
}

TEST(Subgradient, ReturnsSimplexPoint) {
  const SubgradientResult result = projected_subgradient(make(12, "1", "3.3"), quick(5));
  ASSERT_EQ(result.point.size(), 12u);
  double total = 0.0;
  for (double p : result.point) {
    EXPECT_GE(p, 0.0);
    total += p;
  }
  EXPECT_NEAR(total, 3.3, 1e-9);
  EXPECT_NEAR(eval_f(std::span<const double>(result.point), 1.0), result.value, 1e-9);
}

TEST(Subgradient, ConfigValidation) {
  SubgradientConfig cfg;
  cfg.max_iters = 0;
  EXPECT_THROW(projected_subgradient(make(3, "1", "1"), cfg), InputError);
  cfg = SubgradientConfig{};
  cfg.tolerance = 0;
  EXPECT_THROW(projected_subgradient(make(3, "1", "1"), cfg), InputError);
  cfg = SubgradientConfig{};
  cfg.restarts = 0;
  EXPECT_THROW(projected_subgradient(make(3, "1", "1"), cfg), InputError);
}

TEST(Subgradient, DeterministicForFixedSeed) {
  const Instance inst = make(10, "1", "2.5");
  setenv("EXTOPT_THREADS", "1", 1);
  const SubgradientResult a = projected_subgradient(inst, quick(42));
  setenv("EXTOPT_THREADS", "3", 1);
  const SubgradientResult b = projected_subgradient(inst, quick(42));
  unsetenv("EXTOPT_THREADS");
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.converged, b.converged);
}

TEST(Subgradient, InequalityHoldsExactly) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const Rational x(1);
    // Coarse entries make ties common.
    const ServiceVector v = reference::random_vector(rng, n, 4, 4);
    std::vector<double> vd(v.size()), g(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) vd[i] = to_double(v[i]);
    const double fd = objective_and_subgradient(vd, 1.0, g);
    const Rational f = eval_f(v, x);
    ASSERT_DOUBLE_EQ(fd, to_double(f));
    // Directions with zero sum keep the total mass.
    ServiceVector d(v.size());
    Rational sum = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      d[i] = fraction(std::uniform_int_distribution<int>(-4, 4)(rng), 8);
      sum += d[i];
    }
    d.back() = -sum;
    Rational slope = 0;
    for (std::size_t i = 0; i < d.size(); ++i) slope += Rational(g[i]) * d[i];
    for (const Rational& t : {fraction(1, 100), fraction(-1, 100), fraction(1, 3), fraction(-1, 2)}) {
      ServiceVector moved(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) moved[i] = v[i] + t * d[i];
      ASSERT_GE(reference::objective(moved, x), f + t * slope);
    }
  }
}

TEST(Projection, KnownCases) {
  EXPECT_EQ(project_to_simplex(std::vector<double>{0.5, 0.5}, 1.0), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(project_to_simplex(std::vector<double>{3.0, 0.0, 0.0}, 1.0), (std::vector<double>{1.0, 0.0, 0.0}));
  const auto p = project_to_simplex(std::vector<double>{1.0, 1.0, -5.0}, 1.0);
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
  EXPECT_EQ(p[2], 0.0);
}

TEST(Projection, NearestAmongSampledSimplexPoints) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coord(-2.0, 3.0);
  std::exponential_distribution<double> expo(1.0);
  auto dist2 = [](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const double total = 0.5 + 2.0 * std::uniform_real_distribution<double>(0, 1)(rng);
    std::vector<double> p(n);
    for (double& c : p) c = coord(rng);
    const auto proj = project_to_simplex(p, total);
    double s = 0;
    for (double c : proj) {
      ASSERT_GE(c, 0.0);
      s += c;
    }
    ASSERT_NEAR(s, total, 1e-12);
    const double best = dist2(p, proj);
    for (int k = 0; k < 500; ++k) {
      std::vector<double> q(n);
      double qs = 0;
      for (double& c : q) qs += (c = expo(rng));
      for (double& c : q) c *= total / qs;
      ASSERT_LE(best, dist2(p, q) + 1e-12);
    }
  }
}

TEST(Grid, Examples) {
  const Instance inst = make(7, "1", "2.2");
  const GridResult a = grid_search(inst, 11);
  EXPECT_EQ(a.value, fraction(32, 5));
  EXPECT_EQ(eval_f(a.minimizer, inst.x()), a.value);
  EXPECT_EQ(eval_f(rationals({"0", "0.2", "0.8", "0.2", "0.8", "0.2", "0"}), Rational(1)), a.value);

  const GridResult b = grid_search(make(3, "1", "1"), 10);
  EXPECT_EQ(b.minimizer, rationals({"0", "1", "0"}));
  EXPECT_EQ(b.value, 2);

  const GridResult c = grid_search(make(4, "1", "0.5"), 1);
  EXPECT_EQ(c.lattice_points, 4);
  EXPECT_EQ(c.value, brute_force_combinatorial(make(4, "1", "0.5")).value);
}

TEST(Grid, MatchesCompositionEnumeration) {
  for (int n = 1; n <= 5; ++n) {
    for (const char* w : {"0.5", "1.5", "2.25"}) {
      const Instance inst = make(n + 2, "1", w);
      const int res = 6;
      Rational best = -1;
      reference::for_each_composition(inst.n(), res, [&](const std::vector<int>& counts) {
        ServiceVector v;
        for (int c : counts) v.push_back(inst.w() * c / res);
        const Rational f = reference::objective(v, inst.x());
        if (best < 0 || f < best) best = f;
      });
      const GridResult g = grid_search(inst, res);
      ASSERT_EQ(g.value, best);
      ASSERT_EQ(g.lattice_points, lattice_size(inst.n(), res));
    }
  }
}

TEST(Grid, PruningKeepsTheExactMinimum) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const int res = std::uniform_int_distribution<int>(1, 9)(rng);
    const Rational x = fraction(std::uniform_int_distribution<int>(1, 9)(rng), 4);
    const Rational w = x * n * fraction(std::uniform_int_distribution<int>(1, 19)(rng), 20);
    const Instance inst(n, x, w);
    Rational best = -1;
    ServiceVector argmin;
    reference::for_each_composition(n, res, [&](const std::vector<int>& counts) {
      ServiceVector v;
      for (int c : counts) v.push_back(w * c / res);
      const Rational f = eval_f(v, x);
      if (best < 0 || f < best) {
        best = f;
        argmin = v;
      }
    });
    const GridResult g = grid_search(inst, res, kUnlimitedGrid);
    ASSERT_EQ(g.value, best) << n << " " << res << " " << x << " " << w;
    ASSERT_EQ(g.minimizer, argmin);
  }
}

TEST(Grid, CapAndResolution) {
  EXPECT_EQ(lattice_size(7, 11), 12376);
  EXPECT_THROW(grid_search(make(20, "1", "2.5"), 40, 1000), SizeError);
  EXPECT_THROW(grid_search(make(3, "1", "1"), 0), InputError);
  EXPECT_EQ(duo_lattice_resolution(make(7, "1", "2.2")), 11);
  EXPECT_EQ(duo_lattice_resolution(make(9, "1", "2.5")), 5);
  EXPECT_EQ(duo_lattice_resolution(make(8, "1", "3")), 3);
}

TEST(Grid, SandwichOnProvenInstances) {
  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; m < n; ++m) {
      for (const Rational& frac : {Rational(0), fraction(1, 2)}) {
        const Instance inst(n, 1, m + frac);
        const SolveReport exact = solve_continuous(inst);
        if (exact.status != SolveStatus::kProven) continue;
        const int res = duo_lattice_resolution(inst);
        if (lattice_size(n, res) > 2'000'000) continue;
        const GridResult grid = grid_search(inst, res);
        ASSERT_EQ(grid.value, exact.objective);
        const double oracle = projected_subgradient(inst, quick()).value;
        ASSERT_GE(oracle, to_double(exact.objective) - 1e-6);
        ASSERT_LE(oracle, to_double(exact.objective) + 1e-6);
      }
    }
  }
}

TEST(Verify, Examples) {
  const VerifyReport a = verify_conjecture(make(7, "1", "2.2"), quick());
  EXPECT_EQ(a.status, VerifyStatus::kConfirmed);
  EXPECT_LE(std::abs(a.gap), 1e-6);
  EXPECT_EQ(a.grid_objective, fraction(32, 5));

  const VerifyReport b = verify_conjecture(make(9, "1", "2.5"), quick());
  EXPECT_EQ(b.status, VerifyStatus::kConfirmed);
  EXPECT_EQ(b.constructed_status, SolveStatus::kConjectured);

  const VerifyReport c = verify_conjecture(make(8, "1", "3"), quick());
  EXPECT_EQ(c.status, VerifyStatus::kConfirmed);
  EXPECT_EQ(c.constructed_objective, 6);
  EXPECT_LE(std::abs(c.gap), 1e-6);
}

TEST(Verify, SuboptimalCandidateIsRefutedExactly) {
  const Instance inst = make(7, "1", "2.2");
  const ServiceVector combinatorial = solve_combinatorial(inst).solution;
  const VerifyReport by_grid = verify_candidate(inst, combinatorial, SolveStatus::kConjectured, quick());
  EXPECT_EQ(by_grid.status, VerifyStatus::kViolated);
  EXPECT_EQ(by_grid.exact_recheck, fraction(32, 5));

  VerifyOptions no_grid;
  no_grid.use_grid = false;
  const VerifyReport by_oracle =
      verify_candidate(inst, combinatorial, SolveStatus::kConjectured, quick(), no_grid);
  EXPECT_EQ(by_oracle.status, VerifyStatus::kViolated);
  ASSERT_TRUE(by_oracle.exact_recheck.has_value());
  EXPECT_LT(*by_oracle.exact_recheck, fraction(33, 5));
  EXPECT_FALSE(by_oracle.grid_objective.has_value());
}

TEST(Verify, CutShortIsInconclusive) {
  SubgradientConfig cfg = quick();
  cfg.max_iters = 10;
  VerifyOptions no_grid;
  no_grid.use_grid = false;
  const VerifyReport report = verify_conjecture(make(9, "1", "2.5"), cfg, no_grid);
  EXPECT_EQ(report.status, VerifyStatus::kInconclusive);
  EXPECT_FALSE(report.oracle_converged);
}

TEST(Verify, CandidateValidation) {
  const Instance inst = make(3, "1", "1");
  EXPECT_THROW(verify_candidate(inst, rationals({"1", "0"}), SolveStatus::kConjectured, quick()),
               InputError);
  EXPECT_THROW(verify_candidate(inst, rationals({"1", "1", "0"}), SolveStatus::kConjectured, quick()),
               InputError);
  EXPECT_THROW(verify_candidate(inst, rationals({"-1", "1", "1"}), SolveStatus::kConjectured, quick()),
               InputError);
}

TEST(Verify, StatusNames) {
  EXPECT_EQ(to_string(VerifyStatus::kConfirmed), "CONFIRMED");
  EXPECT_EQ(to_string(VerifyStatus::kViolated), "VIOLATED");
  EXPECT_EQ(to_string(VerifyStatus::kInconclusive), "INCONCLUSIVE");
}

}  // namespace
}  // namespace extopt
