#include <random>

#include <gtest/gtest.h>

#include "ghgeo/errors.hpp"
#include "ghgeo/gh_search.hpp"
#include "support/random_metric.hpp"

namespace ghgeo {
namespace {

using testing::line_space;
using testing::R;
using testing::random_metric;

// Minimum distortion / 2 over every relation with surjective projections,
// by enumerating all subsets of X x Y. Only for |X| |Y| <= 12.
Rational all_relations_gh(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const std::size_t m = x.size(), n = y.size(), cells = m * n;
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
    std::vector<bool> row(m), col(n);
    std::vector<IndexPair> pairs;
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask >> c & 1u) {
        pairs.emplace_back(c / n, c % n);
        row[c / n] = col[c % n] = true;
      }
    }
    if (std::find(row.begin(), row.end(), false) != row.end()) continue;
    if (std::find(col.begin(), col.end(), false) != col.end()) continue;
    Rational dis(0);
    for (const auto& [a, b] : pairs) {
      for (const auto& [c, e] : pairs) dis = std::max(dis, abs(x.distance(a, c) - y.distance(b, e)));
    }
    if (!best || dis < *best) best = dis;
  }
  return *best / Rational(2);
}

TEST(BruteForce, Examples) {
  const auto three = line_space({R("0"), R("1"), R("3")});
  const auto moved = line_space({R("10"), R("12"), R("13")});  // mirror image
  EXPECT_EQ(gh_bruteforce(three, moved), R("0"));
  const auto two = line_space({R("0"), R("1")});
  EXPECT_EQ(gh_bruteforce(two, one_point()), R("1/2"));
  EXPECT_EQ(gh_bruteforce(two, line_space({R("0"), R("2")})), R("1/2"));
  EXPECT_EQ(all_relations_gh(two, line_space({R("0"), R("2")})), R("1/2"));
}

TEST(BruteForce, WitnessAttainsValue) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_metric(rng, 1 + trial % 4);
    const auto y = random_metric(rng, 1 + (trial / 4) % 4);
    const auto res = gh_bruteforce_witness(x, y);
    EXPECT_EQ(gh_upper_from_corr(res.witness, x, y), res.value);
  }
}

TEST(BruteForce, CapRaisesSizeError) {
  std::mt19937_64 rng(67);
  const auto x = random_metric(rng, 8);
  EXPECT_THROW(gh_bruteforce(x, x), SizeError);
  EXPECT_THROW(gh_bruteforce(line_space({R("0"), R("1")}), line_space({R("0"), R("1")}), 3.0),
               SizeError);
}

TEST(BruteForce, MatchesAllRelationsOracle) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + trial % 3, n = 1 + (trial / 3) % 4;
    const auto x = random_metric(rng, m);
    const auto y = random_metric(rng, n);
    EXPECT_EQ(gh_bruteforce(x, y), all_relations_gh(x, y));
  }
}

TEST(BruteForce, TheoremTwoIdentities) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_metric(rng, 1 + trial % 5);
    const auto y = random_metric(rng, 1 + (trial / 5) % 5);
    const auto gh = gh_bruteforce(x, y);
    EXPECT_EQ(gh_bruteforce(x, x), R("0"));
    EXPECT_EQ(gh_bruteforce(x, one_point()), diameter(x) / Rational(2));
    EXPECT_GE(gh, lower_bound_diam(x, y));
    EXPECT_LE(gh, gh_upper_from_corr(Correspondence::full(x.size(), y.size()), x, y));
  }
}

TEST(BruteForce, SymmetryAndTriangle) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_metric(rng, 1 + trial % 4);
    const auto y = random_metric(rng, 1 + (trial / 2) % 4);
    const auto z = random_metric(rng, 1 + (trial / 3) % 4);
    EXPECT_EQ(gh_bruteforce(x, y), gh_bruteforce(y, x));
    EXPECT_LE(gh_bruteforce(x, z), gh_bruteforce(x, y) + gh_bruteforce(y, z));
  }
}

TEST(BranchAndBound, Examples) {
  std::mt19937_64 rng(83);
  const auto x = random_metric(rng, 5);
  const auto same = gh_branch_and_bound(x, x);
  EXPECT_EQ(same.lower, R("0"));
  EXPECT_EQ(same.upper, R("0"));

  const auto path = line_space({R("0"), R("1"), R("2")});
  const auto pt = gh_branch_and_bound(path, one_point());
  EXPECT_EQ(pt.lower, R("1"));
  EXPECT_EQ(pt.upper, R("1"));
  EXPECT_TRUE(pt.exact());
}

TEST(BranchAndBound, AgreesWithBruteForce) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = random_metric(rng, 1 + trial % 5);
    const auto y = random_metric(rng, 1 + (trial / 5) % 5);
    const auto brute = gh_bruteforce(x, y);
    const auto bb = gh_branch_and_bound(x, y);
    EXPECT_FALSE(bb.budget_exhausted);
    EXPECT_TRUE(bb.exact());
    EXPECT_EQ(bb.upper, brute);
    EXPECT_EQ(bb.lower_witness, LowerWitness::kExhaustedSearch);
    EXPECT_EQ(gh_upper_from_corr(bb.upper_witness, x, y), bb.upper);
  }
}

TEST(BranchAndBound, SmallBudgetsStillEncloseValue) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_metric(rng, 4 + trial % 2);
    const auto y = random_metric(rng, 4);
    const auto brute = gh_bruteforce(x, y);
    for (std::uint64_t budget : {0u, 1u, 5u, 30u}) {
      const auto bb = gh_branch_and_bound(x, y, budget);
      EXPECT_LE(bb.lower, brute);
      EXPECT_GE(bb.upper, brute);
      EXPECT_GE(bb.lower, lower_bound_diam(x, y));
      EXPECT_EQ(gh_upper_from_corr(bb.upper_witness, x, y), bb.upper);
    }
  }
}

TEST(BranchAndBound, ZeroBudgetFallsBackToDiameterBound) {
  const auto a = line_space({R("0"), R("1"), R("5/2")});
  const auto b = line_space({R("0"), R("3/2"), R("7/4"), R("4")});
  const auto bb = gh_branch_and_bound(a, b, 0);
  EXPECT_TRUE(bb.budget_exhausted);
  EXPECT_EQ(bb.lower, lower_bound_diam(a, b));
  EXPECT_EQ(bb.lower_witness, LowerWitness::kDiameterBound);
  EXPECT_STREQ(lower_witness_name(bb.lower_witness), "diameter bound");
}

TEST(BranchAndBound, SeedIsUsedAsIncumbent) {
  const auto a = line_space({R("0"), R("1"), R("2"), R("3")});
  const auto bb = gh_branch_and_bound(a, a, 0, Correspondence::identity(4));
  EXPECT_EQ(bb.upper, R("0"));
  EXPECT_THROW(gh_branch_and_bound(a, a, 0, Correspondence::identity(3)), ShapeError);
}

TEST(LowerBoundDiam, Examples) {
  const auto one = line_space({R("0"), R("1")});
  const auto two = line_space({R("0"), R("2")});
  EXPECT_EQ(lower_bound_diam(one, two), R("1/2"));
  EXPECT_EQ(lower_bound_diam(one, one), R("0"));
  EXPECT_EQ(lower_bound_diam(one, scale(one, R("3"))), R("1"));
  EXPECT_EQ(gh_to_point(one_point()), R("0"));
  EXPECT_EQ(gh_to_point(one), R("1/2"));
}

TEST(ScalingCurve, TwoPointSpace) {
  const auto rows = scaling_curve_check(line_space({R("0"), R("1")}), {R("0"), R("1")});
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    if (row.lambda1 == row.lambda2) {
      EXPECT_EQ(row.upper, R("0"));
    } else {
      EXPECT_EQ(row.upper, R("1/2"));
      EXPECT_EQ(row.lower, R("1/2"));
    }
    EXPECT_TRUE(row.exact);
  }
}

TEST(ScalingCurve, LinearInLambdaAgainstBruteForce) {
  const auto x = line_space({R("0"), R("1/3"), R("1")});
  const std::vector<Rational> lambdas{R("0"), R("1/2"), R("1")};
  const auto rows = scaling_curve_check(x, lambdas);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& row : rows) {
    const auto brute = gh_bruteforce(scale(x, row.lambda1), scale(x, row.lambda2));
    EXPECT_EQ(brute, abs(row.lambda1 - row.lambda2) / Rational(2));
    EXPECT_EQ(row.expected, brute);
    EXPECT_TRUE(row.upper_matches);
    EXPECT_TRUE(row.exact);
  }
}

}  // namespace
}  // namespace ghgeo
