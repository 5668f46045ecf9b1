#include "ghgeo/intervals.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

#include "ghgeo/errors.hpp"

namespace ghgeo {

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
  for (const auto& p : parts) {
    if (p.lo > p.hi) throw DomainError("interval [" + p.lo.str() + "," + p.hi.str() + "] is reversed");
  }
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  for (auto& p : parts) {
    if (!parts_.empty() && p.lo <= parts_.back().hi) {
      parts_.back().hi = std::max(parts_.back().hi, p.hi);
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

IntervalUnion IntervalUnion::segment(const Rational& lo, const Rational& hi) {
  return IntervalUnion({Interval{lo, hi}});
}

bool IntervalUnion::contains(const Rational& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& v, const Interval& p) { return v < p.lo; });
  if (it == parts_.begin()) return false;
  return x <= std::prev(it)->hi;
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
  return intersect(*this, other) == other;
}

IntervalUnion thick_lattice(const Rational& t, int window) {
  if (t.sign() < 0 || t > Rational(1, 2)) {
    throw DomainError("lattice thickness must lie in [0, 1/2], got " + t.str());
  }
  if (window < 1) throw DomainError("window must be at least 1");
  std::vector<Interval> parts;
  parts.reserve(2 * static_cast<std::size_t>(window) + 1);
  for (int n = -window; n <= window; ++n) parts.push_back({Rational(n) - t, Rational(n) + t});
  return IntervalUnion(std::move(parts));
}

IntervalUnion matched_segment(const Rational& t, int window) {
  if (window < 1) throw DomainError("window must be at least 1");
  const Rational r = Rational(window) + t;
  return IntervalUnion::segment(-r, r);
}

IntervalUnion neighborhood(const IntervalUnion& set, const Rational& r) {
  if (r.sign() < 0) throw DomainError("neighbourhood radius must be nonnegative");
  std::vector<Interval> parts;
  parts.reserve(set.count());
  for (const auto& p : set.intervals()) parts.push_back({p.lo - r, p.hi + r});
  return IntervalUnion(std::move(parts));
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.count() && j < b.count()) {
    const Rational& lo = std::max(a[i].lo, b[j].lo);
    const Rational& hi = std::min(a[i].hi, b[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalUnion(std::move(out));
}

Rational point_distance(const Rational& x, const IntervalUnion& set) {
  if (set.empty()) throw DomainError("distance to the empty set");
  const auto& parts = set.intervals();
  auto it = std::upper_bound(parts.begin(), parts.end(), x,
                             [](const Rational& v, const Interval& p) { return v < p.lo; });
  // *it is the first interval starting right of x; prev(it) starts at or left of x.
  if (it == parts.begin()) return it->lo - x;
  const Interval& left = *std::prev(it);
  if (x <= left.hi) return Rational(0);
  if (it == parts.end()) return x - left.hi;
  return std::min(it->lo - x, x - left.hi);
}

Rational set_distance(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.empty() || b.empty()) throw DomainError("set distance needs non-empty sets");
  Rational best = abs(a.min() - b.min());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.count() && j < b.count()) {
    if (a[i].hi < b[j].lo) {
      best = std::min(best, b[j].lo - a[i].hi);
      ++i;
    } else if (b[j].hi < a[i].lo) {
      best = std::min(best, a[i].lo - b[j].hi);
      ++j;
    } else {
      return Rational(0);
    }
  }
  return best;
}

Rational directed_hausdorff(const IntervalUnion& from, const IntervalUnion& to) {
  if (from.empty() || to.empty()) throw DomainError("Hausdorff distance needs non-empty sets");
  Rational best(0);
  for (const auto& p : from.intervals()) {
    best = std::max(best, point_distance(p.lo, to));
    best = std::max(best, point_distance(p.hi, to));
  }
  for (std::size_t g = 0; g + 1 < to.count(); ++g) {
    const Rational mid = (to[g].hi + to[g + 1].lo) / Rational(2);
    if (from.contains(mid)) best = std::max(best, mid - to[g].hi);
  }
  return best;
}

Rational hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

IntervalUnion canonical_slice(const IntervalUnion& a, const IntervalUnion& b, const Rational& s) {
  const Rational d = hausdorff(a, b);
  if (s.sign() < 0 || s > d) {
    throw DomainError("slice parameter " + s.str() + " outside [0, " + d.str() + "]");
  }
  return intersect(neighborhood(a, s), neighborhood(b, d - s));
}

FiniteMetricSpace sample(const IntervalUnion& set, const Rational& step) {
  if (step.sign() <= 0) throw DomainError("sampling step must be positive");
  if (set.empty()) throw DomainError("cannot sample the empty set");
  std::set<Rational> points;
  for (const auto& p : set.intervals()) {
    points.insert(p.lo);
    points.insert(p.hi);
    const Rational first = ceil_div(p.lo, step);
    const Rational last = floor_div(p.hi, step);
    for (Rational k = first; k <= last; k += Rational(1)) points.insert(k * step);
  }
  return FiniteMetricSpace::from_line({points.begin(), points.end()});
}

std::vector<SliceTableRow> slice_geodesic_table(const IntervalUnion& a, const IntervalUnion& b,
                                                const Rational& step) {
  if (step.sign() <= 0) throw DomainError("grid step must be positive");
  const Rational d = hausdorff(a, b);
  std::vector<Rational> grid;
  for (Rational s(0); s < d; s += step) grid.push_back(s);
  grid.push_back(d);

  std::vector<IntervalUnion> slices;
  slices.reserve(grid.size());
  for (const auto& s : grid) slices.push_back(canonical_slice(a, b, s));

  std::vector<SliceTableRow> rows;
  rows.reserve(grid.size() * grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      Rational h = hausdorff(slices[i], slices[j]);
      Rational diff = abs(grid[i] - grid[j]);
      const bool eq = h == diff;
      rows.push_back({grid[i], grid[j], std::move(h), std::move(diff), eq});
    }
  }
  return rows;
}

std::string format_interval_union(const IntervalUnion& set) {
  if (set.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < set.count(); ++i) {
    if (i) out += ';';
    out += set[i].lo.str() + "," + set[i].hi.str();
  }
  return out;
}

IntervalUnion parse_interval_union(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "empty") return {};
  std::vector<Interval> parts;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const std::string_view piece = trim(text.substr(0, semi));
    const auto comma = piece.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("interval '" + std::string(piece) + "' is not of the form a,b");
    }
    Rational lo = Rational::parse(trim(piece.substr(0, comma)));
    Rational hi = Rational::parse(trim(piece.substr(comma + 1)));
    if (lo > hi) throw ParseError("interval '" + std::string(piece) + "' has lo > hi");
    parts.push_back({std::move(lo), std::move(hi)});
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return IntervalUnion(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const IntervalUnion& set) {
  return os << format_interval_union(set);
}

}  // namespace ghgeo
