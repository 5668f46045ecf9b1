#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ghgeo/metric_space.hpp"
#include "ghgeo/rational.hpp"

namespace ghgeo {

// Closed interval [lo, hi] with lo <= hi; lo == hi is a single point.
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of closed intervals of the real line in canonical form:
/// sorted, with overlapping or touching intervals merged, so that
/// parts[i].hi < parts[i + 1].lo.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  /// Canonicalizes; throws DomainError if some lo > hi.
  explicit IntervalUnion(std::vector<Interval> parts);

  static IntervalUnion segment(const Rational& lo, const Rational& hi);
  static IntervalUnion point(const Rational& x) { return segment(x, x); }

  bool empty() const { return parts_.empty(); }
  std::size_t count() const { return parts_.size(); }
  const std::vector<Interval>& intervals() const { return parts_; }
  const Interval& operator[](std::size_t i) const { return parts_[i]; }
  const Rational& min() const { return parts_.front().lo; }
  const Rational& max() const { return parts_.back().hi; }

  bool contains(const Rational& x) const;
  bool contains(const IntervalUnion& other) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> parts_;
};

/// Union of [n - t, n + t] over |n| <= window. Requires 0 <= t <= 1/2 and
/// window >= 1.
IntervalUnion thick_lattice(const Rational& t, int window);

/// The segment [-(window + t), window + t], i.e. the real line cut to the
/// same extent as thick_lattice(t, window).
IntervalUnion matched_segment(const Rational& t, int window);

/// Closed r-neighbourhood: every [a, b] becomes [a - r, b + r].
IntervalUnion neighborhood(const IntervalUnion& set, const Rational& r);

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);

/// inf |x - y| over x in a, y in b. Both sets must be non-empty.
Rational set_distance(const IntervalUnion& a, const IntervalUnion& b);

/// Distance from a point to a non-empty set.
Rational point_distance(const Rational& x, const IntervalUnion& set);

/// sup over a in `from` of the distance from a to `to`.
///
/// The distance-to-set function is piecewise linear with local maxima only
/// at the midpoints of the gaps of `to`, so the supremum over a closed
/// interval is attained at its endpoints or at one of those midpoints.
Rational directed_hausdorff(const IntervalUnion& from, const IntervalUnion& to);

/// Exact Hausdorff distance between two non-empty interval unions.
Rational hausdorff(const IntervalUnion& a, const IntervalUnion& b);

/// Point of the canonical Hausdorff geodesic from a to b:
/// B_s(a) intersected with B_{d - s}(b), where d = hausdorff(a, b).
/// Requires 0 <= s <= d.
IntervalUnion canonical_slice(const IntervalUnion& a, const IntervalUnion& b, const Rational& s);

/// Discretizes a set: every interval endpoint plus every multiple of `step`
/// inside the set, with the metric induced from the line.
FiniteMetricSpace sample(const IntervalUnion& set, const Rational& step);

struct SliceTableRow {
  Rational s;
  Rational s_prime;
  Rational hausdorff;
  Rational abs_diff;
  bool equal;
};

/// Hausdorff distances between all pairs of canonical slices on the grid
/// 0, step, 2 step, ... up to d (d itself is always included).
std::vector<SliceTableRow> slice_geodesic_table(const IntervalUnion& a, const IntervalUnion& b,
                                                const Rational& step);

/// "a,b;c,d" with rationals in "p/q" form; "empty" for the empty set.
std::string format_interval_union(const IntervalUnion& set);
IntervalUnion parse_interval_union(std::string_view text);

std::ostream& operator<<(std::ostream& os, const IntervalUnion& set);

}  // namespace ghgeo
