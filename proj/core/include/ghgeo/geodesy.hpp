#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghgeo/gh_search.hpp"
#include "ghgeo/intervals.hpp"
#include "ghgeo/metric_space.hpp"
#include "ghgeo/rational.hpp"

namespace ghgeo {

// The glued curve runs through two families that meet at the real line:
//
//   R_d = R x_l1 (d X),  d in [0, delta]          (R_0 = R)
//   Z_t = union of [n - t, n + t],  t in [1/2 - delta, 1/2]   (Z_{1/2} = R)
//
// where X is a space of diameter 1 and 0 < delta < 1/2.

enum class Leg { kRealLine, kRealProduct, kThickLattice };

/// A point of the glued curve. R_0 and Z_{1/2} are both stored as the
/// distinguished kRealLine point so the gluing point has a single form.
class GeodesicPoint {
 public:
  static GeodesicPoint real_line(const Rational& delta);
  /// R_d; throws DomainError unless 0 <= d <= delta.
  static GeodesicPoint real_product(const Rational& d, const Rational& delta);
  /// Z_t; throws DomainError unless 1/2 - delta <= t <= 1/2.
  static GeodesicPoint thick_lattice(const Rational& t, const Rational& delta);

  Leg leg() const { return leg_; }
  /// Product scale d (0 for the real line; meaningless on the lattice leg).
  const Rational& d() const { return d_; }
  /// Lattice thickness t (1/2 for the real line).
  const Rational& t() const { return t_; }
  const Rational& delta() const { return delta_; }

  /// "R", "R_d(1/5)" or "Z_t(3/10)".
  std::string describe() const;

  friend bool operator==(const GeodesicPoint&, const GeodesicPoint&) = default;

 private:
  GeodesicPoint(Leg leg, Rational d, Rational t, Rational delta)
      : leg_(leg), d_(std::move(d)), t_(std::move(t)), delta_(std::move(delta)) {}

  Leg leg_;
  Rational d_;
  Rational t_;
  Rational delta_;
};

/// Throws DomainError unless 0 < delta < 1/2.
void check_delta(const Rational& delta);

/// A generator space of diameter exactly 1. Path-connectedness, which the
/// continuous construction assumes, cannot hold for a finite space and is
/// not checked.
class GeneratorSpace {
 public:
  explicit GeneratorSpace(FiniteMetricSpace space);
  /// The two-point space {0, 1}.
  static GeneratorSpace two_point();

  const FiniteMetricSpace& space() const { return space_; }

 private:
  FiniteMetricSpace space_;
};

/// Unit-speed parametrization over s in [0, 3 delta / 2]: the product leg
/// R_{delta - 2s} for s <= delta / 2, then the lattice leg
/// Z_{1/2 - (s - delta/2)}.
GeodesicPoint curve_point(const Rational& s, const Rational& delta);
/// Inverse of curve_point.
Rational curve_parameter(const GeodesicPoint& p);

/// Closed-form Gromov-Hausdorff distance between two points of the curve:
///   d(R_a, R_b) = |a - b| / 2
///   d(Z_a, Z_b) = |a - b|
///   d(Z_t, R_d) = d / 2 + 1/2 - t
/// Throws DomainError when the points belong to different families (delta).
Rational formula_distance(const GeodesicPoint& p, const GeodesicPoint& q);

struct GeodesicRow {
  Rational s;
  Rational s_prime;
  GeodesicPoint p;
  GeodesicPoint q;
  Rational formula;
  Rational abs_diff;
  bool equal;
};

/// formula_distance against |s - s'| for every pair of the grid
/// 0, step, ..., 3 delta / 2. `step` must divide 3 delta / 2. Rows are ordered
/// by (s, s') and computed in parallel (see thread_count()).
std::vector<GeodesicRow> geodesic_table(const Rational& delta, const Rational& step);

/// Number of worker threads: GHG_THREADS if set and positive, otherwise the
/// hardware concurrency.
unsigned thread_count();

/// A realized window of a curve point together with the base segment sample
/// that its product factor lives over (empty for the lattice leg).
struct Realization {
  FiniteMetricSpace space;
  std::optional<FiniteMetricSpace> base;
};

/// Finite stand-in for a curve point:
///   Z_t  -> sample(thick_lattice(t, window), step)
///   R_d  -> l1_product(sample(matched_segment(segment_t, window), step), scale(X, d))
///   R    -> sample(matched_segment(segment_t, window), step)
/// `segment_t` sets the half-extent window + segment_t of the segment so that
/// it can be matched to a lattice partner; 1/2 matches Z_{1/2}.
Realization realize_with_base(const GeodesicPoint& p, int window, const Rational& step,
                              const FiniteMetricSpace& generator,
                              const Rational& segment_t = Rational(1, 2));
FiniteMetricSpace realize(const GeodesicPoint& p, int window, const Rational& step,
                          const FiniteMetricSpace& generator,
                          const Rational& segment_t = Rational(1, 2));

struct EmpiricalOptions {
  int window = 3;
  Rational step{1, 20};
  // Tiny realizations used for the search-based lower bound.
  int evidence_window = 1;
  Rational evidence_step{1, 4};
  std::uint64_t budget = 20'000;
};

struct EmpiricalResult {
  GeodesicPoint p;
  GeodesicPoint q;
  Rational formula;
  /// Certified upper bound on d_GH of the realized windows (window, step),
  /// from the explicit matching correspondence.
  Rational upper;
  Rational upper_slack;  // upper - formula
  Rational allowed_slack;  // the sampling step
  /// Lower bound on d_GH of the tiny realizations. Evidence only: truncating
  /// to a window changes the spaces.
  Rational lower;
  LowerWitness lower_witness;
  /// Certified upper bound on d_GH of the tiny realizations.
  Rational evidence_upper;
  std::uint64_t nodes_expanded = 0;

  bool pass() const { return upper_slack <= allowed_slack; }
};

/// Explicit correspondence between realizations of p and q:
///   lattice vs product: nearest-point matching into the segment, composed
///   with the projection of the product onto that segment;
///   two lattices: nearest-point matching;
///   two products: (r, x) <-> (r, x), or the projection when one side is R.
struct MatchedPair {
  FiniteMetricSpace a;
  FiniteMetricSpace b;
  Correspondence corr;
};
MatchedPair matched_realizations(const GeodesicPoint& p, const GeodesicPoint& q, int window,
                                 const Rational& step, const FiniteMetricSpace& generator);

EmpiricalResult empirical_gh(const GeodesicPoint& p, const GeodesicPoint& q,
                             const FiniteMetricSpace& generator,
                             const EmpiricalOptions& options = {});

}  // namespace ghgeo
