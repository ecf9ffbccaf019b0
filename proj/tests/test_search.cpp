#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "monocomp/monocomp.hpp"
#include "oracles.hpp"

using namespace monocomp;

namespace {

SearchConfig config(int n, int r, Symmetry s, bool cutoff = true, int jobs = 1) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.r = r;
  cfg.symmetry = s;
  cfg.objective_cutoff = cutoff;
  cfg.jobs = jobs;
  return cfg;
}

}  // namespace

// =============================================================================
// exact_M
// =============================================================================

TEST(ExactM, ReferenceValues) {
  EXPECT_EQ(exact_M(config(3, 2, Symmetry::VertexColor)).value, 2);
  EXPECT_EQ(exact_M(config(4, 2, Symmetry::VertexColor)).value, 3);
  EXPECT_EQ(exact_M(config(4, 3, Symmetry::VertexColor)).value, 1);
  EXPECT_EQ(exact_M(config(2, 1, Symmetry::VertexColor)).value, 1);
}

TEST(ExactM, AllSymmetryModesMatchBruteForce) {
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      const std::int64_t truth = oracle::brute_force_M(n, r);
      for (Symmetry s : {Symmetry::None, Symmetry::Vertex, Symmetry::VertexColor})
        for (bool cutoff : {false, true}) {
          SearchResult res = exact_M(config(n, r, s, cutoff));
          EXPECT_EQ(res.value, truth) << n << " " << r << " " << to_string(s) << " " << cutoff;
          EXPECT_EQ(oracle::bfs_max_edges(res.witness), res.value);
          EXPECT_EQ(res.witness.n(), n);
          EXPECT_EQ(res.witness.r(), r);
        }
    }
}

TEST(ExactM, FiveVerticesTwoColors) {
  const std::int64_t truth = oracle::brute_force_M(5, 2);
  EXPECT_EQ(exact_M(config(5, 2, Symmetry::None)).value, truth);
  EXPECT_EQ(exact_M(config(5, 2, Symmetry::VertexColor)).value, truth);
}

TEST(ExactM, SymmetryPrunesNodes) {
  SearchResult plain = exact_M(config(5, 2, Symmetry::None, false));
  SearchResult reduced = exact_M(config(5, 2, Symmetry::VertexColor, false));
  EXPECT_EQ(plain.leaves, std::uint64_t{1} << 10);
  EXPECT_LT(reduced.leaves, plain.leaves);
}

TEST(ExactM, ParallelGivesSameValueAndWitness) {
  for (auto [n, r] : {std::pair{5, 2}, std::pair{4, 3}, std::pair{6, 2}}) {
    SearchResult one = exact_M(config(n, r, Symmetry::VertexColor, true, 1));
    SearchResult two = exact_M(config(n, r, Symmetry::VertexColor, true, 2));
    SearchResult three = exact_M(config(n, r, Symmetry::VertexColor, true, 3));
    EXPECT_EQ(one.value, two.value);
    EXPECT_EQ(one.witness, two.witness);
    EXPECT_EQ(two.witness, three.witness);
  }
}

TEST(ExactM, RefusesOverBudget) {
  SearchConfig cfg = config(9, 4, Symmetry::VertexColor);
  EXPECT_THROW(exact_M(cfg), BudgetExceeded);
  cfg = config(5, 2, Symmetry::None);
  cfg.budget_nodes = 10;
  try {
    exact_M(cfg);
    FAIL() << "expected refusal";
  } catch (const BudgetExceeded& e) {
    EXPECT_NEAR(e.estimate(), 1024.0, 1e-6);
  }
}

TEST(ExactM, RejectsBadConfig) {
  EXPECT_THROW(exact_M(config(1, 2, Symmetry::None)), Error);
  EXPECT_THROW(exact_M(config(3, 0, Symmetry::None)), Error);
  EXPECT_THROW(exact_M(config(3, 2, Symmetry::None, true, 0)), Error);
  EXPECT_THROW(parse_symmetry("rotations"), Error);
  EXPECT_EQ(parse_symmetry("vertex+color"), Symmetry::VertexColor);
}

TEST(ExactMProperty, TwoColorLowerBoundAndMonotone) {
  std::int64_t prev = 0;
  for (int n = 2; n <= 6; ++n) {
    std::int64_t m = exact_M(config(n, 2, Symmetry::VertexColor)).value;
    std::int64_t lower = (2 * n * n - n - 1 + 8) / 9;
    EXPECT_GE(m, lower) << n;
    EXPECT_GE(m, prev) << n;
    if (n % 3 == 1 && n >= 4) EXPECT_EQ(m, decompose(two_color_extremal(n)).max_edges()) << n;
    prev = m;
  }
  prev = 0;
  for (int n = 2; n <= 5; ++n) {
    std::int64_t m = exact_M(config(n, 3, Symmetry::VertexColor)).value;
    EXPECT_GE(m, prev) << n;
    prev = m;
  }
}

// =============================================================================
// random_coloring
// =============================================================================

TEST(RandomColoring, OneColorIsConstant) {
  for (std::uint64_t seed : {0u, 7u, 99u}) EXPECT_EQ(random_coloring(6, 1, seed), EdgeColoring(6, 1));
}

TEST(RandomColoring, DeterministicUnderSeed) {
  EXPECT_EQ(random_coloring(12, 4, 5), random_coloring(12, 4, 5));
  EXPECT_NE(random_coloring(12, 4, 5), random_coloring(12, 4, 6));
}

TEST(RandomColoring, GoldenFile) {
  std::ifstream in(MONOCOMP_TEST_DATA_DIR "/golden/random_5_3_42.txt");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(to_text(random_coloring(5, 3, 42)), buf.str());
}

TEST(RandomColoring, ColorFrequenciesWithinThreeSigma) {
  const int r = 3;
  std::array<std::int64_t, 3> counts{};
  std::int64_t total = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    random_coloring(5, r, seed).for_each_edge([&](Vertex, Vertex, Color c) {
      ++counts[static_cast<std::size_t>(c)];
      ++total;
    });
  ASSERT_EQ(total, 10000);
  const double mean = total / 3.0, sigma = std::sqrt(total * (1.0 / 3) * (2.0 / 3));
  for (auto c : counts) EXPECT_LE(std::abs(static_cast<double>(c) - mean), 3 * sigma);
}

// =============================================================================
// Soundness scans
// =============================================================================

TEST(SoundnessScan, SmallExhaustiveRunHasNoViolations) {
  SoundnessScanConfig cfg;
  cfg.exhaustive_n_max = 4;
  cfg.exhaustive_r_max = 2;
  cfg.random_samples = 20;
  cfg.random_n = 10;
  cfg.random_r = 3;
  cfg.random_subsets = 50;
  SoundnessReport rep = scan_bound_soundness(cfg);
  EXPECT_EQ(rep.violations, 0);
  EXPECT_EQ(rep.colorings, 1 + 2 + 1 + 8 + 1 + 64 + 20);
  EXPECT_EQ(rep.lp_checks, rep.colorings);
  EXPECT_GT(rep.subsets_checked, rep.colorings);
}

TEST(SoundnessScan, GyarfasIsAnEqualityCase) {
  SoundnessScanConfig cfg;
  SoundnessReport rep = scan_coloring(gyarfas_coloring(4), cfg);
  EXPECT_EQ(rep.violations, 0);
  EXPECT_EQ(rep.equality_cases, 1);
  EXPECT_EQ(rep.subsets_checked, 1 << 12);
}

TEST(SoundnessScan, SubsetCheckMatchesExactInequality) {
  // Every subset of every 2-coloring of K_4 satisfies the main inequality at
  // the true maximum fraction, checked here with exact arithmetic.
  oracle::for_each_coloring(4, 2, [](const EdgeColoring& g) {
    ComponentDecomposition d = decompose(g);
    QuadIrrational z(max_edge_fraction(d));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
      std::int64_t x = 0, vt = 0;
      for (std::size_t i = 0; i < d.size(); ++i)
        if ((mask >> i) & 1u) {
          ++x;
          vt += static_cast<std::int64_t>(d.component(i).size());
        }
      EXPECT_TRUE(check_main_inequality({2, Rational(vt, 4), Rational(x)}, z));
    }
  });
}
