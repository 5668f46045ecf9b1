#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghgeo/correspondence.hpp"
#include "ghgeo/metric_space.hpp"
#include "ghgeo/rational.hpp"

namespace ghgeo {

enum class LowerWitness {
  kDiameterBound,    // 1/2 |diam X - diam Y|
  kExhaustedSearch,  // branch-and-bound proved optimality
  kPartialSearch,    // bound over the frontier left open when the budget ran out
};

const char* lower_witness_name(LowerWitness w);

/// Certified enclosure of a Gromov-Hausdorff distance. `upper` is always
/// distortion(upper_witness) / 2.
struct GHInterval {
  Rational lower;
  Rational upper;
  LowerWitness lower_witness = LowerWitness::kDiameterBound;
  Correspondence upper_witness;
  std::uint64_t nodes_expanded = 0;
  bool budget_exhausted = false;

  bool exact() const { return lower == upper; }
};

struct BruteForceResult {
  Rational value;
  Correspondence witness;
  std::uint64_t enumerated = 0;  // number of (f, g) pairs in the search space
};

inline constexpr double kDefaultBruteForceCap = 1e7;
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Exact d_GH by enumerating every pair of maps f: X -> Y, g: Y -> X and
/// scoring the correspondence graph(f) + graph(g)^-1.
///
/// Every correspondence contains one of these, and dropping pairs never
/// increases distortion, so the minimum over them is the minimum over all
/// correspondences. Throws SizeError when |Y|^|X| * |X|^|Y| exceeds `cap`.
BruteForceResult gh_bruteforce_witness(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                       double cap = kDefaultBruteForceCap);
Rational gh_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       double cap = kDefaultBruteForceCap);

/// Depth-first branch-and-bound over the same (f, g) search space.
///
/// Points are assigned in order of decreasing eccentricity (X before Y, then
/// lowest index on ties). A node is pruned once its partial distortion, or
/// the forced increase for some still unassigned point, reaches the
/// incumbent. `budget` caps the number of expanded nodes; when it runs out
/// the interval is left open and `budget_exhausted` is set; a zero budget
/// skips the search and reports the diameter bound. An optional
/// `seed` correspondence provides the starting incumbent.
GHInterval gh_branch_and_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                               std::uint64_t budget = kDefaultBudget,
                               const std::optional<Correspondence>& seed = std::nullopt);

/// 1/2 |diam X - diam Y|.
Rational lower_bound_diam(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// d_GH(X, one point) = diam X / 2.
Rational gh_to_point(const FiniteMetricSpace& x);

struct ScalingRow {
  Rational lambda1;
  Rational lambda2;
  Rational expected;  // |lambda1 - lambda2| diam X / 2
  Rational lower;
  Rational upper;     // from the point-to-same-point correspondence
  bool upper_matches;
  bool exact;         // lower == upper == expected
};

/// Checks that lambda -> lambda X is a geodesic on every pair of the grid.
std::vector<ScalingRow> scaling_curve_check(const FiniteMetricSpace& x,
                                            const std::vector<Rational>& lambdas,
                                            std::uint64_t budget = kDefaultBudget);

}  // namespace ghgeo
