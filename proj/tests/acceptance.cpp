// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ghgeo/correspondence.hpp"
#include "ghgeo/geodesy.hpp"
#include "ghgeo/gh_search.hpp"
#include "ghgeo/intervals.hpp"
#include "ghgeo/metric_space.hpp"
#include "support/random_metric.hpp"

namespace {

using namespace ghgeo;
using testing::random_metric;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const Rational kDelta(1, 5);
const Rational kHalf(1, 2);

// 10 x 10 grid over both legs, endpoints included.
std::vector<Rational> lattice_grid() {
  std::vector<Rational> v;
  for (int k = 0; k <= 9; ++k) v.push_back(kHalf - kDelta + kDelta * Rational(k, 9));
  return v;
}

std::vector<Rational> product_grid() {
  std::vector<Rational> v;
  for (int k = 0; k <= 9; ++k) v.push_back(kDelta * Rational(k, 9));
  return v;
}

Outcome geodesic_additivity() {
  const auto rows = geodesic_table(kDelta, Rational(1, 40));
  std::size_t ok = 0;
  for (const auto& r : rows) ok += r.formula == abs(r.s - r.s_prime);
  std::ostringstream d;
  d << ok << "/" << rows.size() << " pairs exact (delta 1/5, step 1/40)";
  return {ok == rows.size() && rows.size() == 13 * 13, d.str()};
}

Outcome lattice_product_closed_form() {
  const auto r = GeodesicPoint::real_line(kDelta);
  std::size_t closed = 0, triangle = 0, total = 0;
  for (const auto& t : lattice_grid()) {
    for (const auto& d : product_grid()) {
      const auto z = GeodesicPoint::thick_lattice(t, kDelta);
      const auto p = GeodesicPoint::real_product(d, kDelta);
      ++total;
      closed += formula_distance(z, p) == d / Rational(2) + kHalf - t;
      triangle += formula_distance(z, p) == formula_distance(z, r) + formula_distance(r, p);
    }
  }
  std::ostringstream s;
  s << "closed form " << closed << "/" << total << ", triangle equality through R " << triangle
    << "/" << total;
  return {closed == total && triangle == total && total == 100, s.str()};
}

Outcome canonical_hausdorff_geodesic() {
  const auto a = thick_lattice(Rational(3, 10), 5);
  const auto b = matched_segment(Rational(3, 10), 5);
  const auto d = hausdorff(a, b);
  Outcome o;
  if (d != kDelta) return {false, "d_H(A, B) = " + d.str() + ", expected 1/5"};
  const auto rows = slice_geodesic_table(a, b, Rational(1, 100));
  std::size_t ok = 0;
  for (const auto& r : rows) ok += r.hausdorff == abs(r.s - r.s_prime);
  std::size_t interior_ok = 0, slices = 0;
  for (int k = 0; k < 20; ++k) {
    const Rational s(k, 100);
    const auto c = canonical_slice(a, b, s);
    const auto z = thick_lattice(Rational(3, 10) + s, 5);
    bool same = c.count() == z.count();
    for (std::size_t i = 1; same && i + 1 < c.count(); ++i) same = c[i] == z[i];
    ++slices;
    interior_ok += same;
  }
  const bool end_ok = canonical_slice(a, b, d) == b;
  std::ostringstream s;
  s << ok << "/" << rows.size() << " slice pairs exact; interior intervals match Z_{3/10+s} on "
    << interior_ok << "/" << slices << " slices with s < d; C_d = B " << (end_ok ? "yes" : "no");
  o.pass = ok == rows.size() && rows.size() == 21 * 21 && interior_ok == slices && end_ok;
  o.detail = s.str();
  return o;
}

Outcome diameter_identities() {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::size_t> size5(1, 5), size4(1, 4);
  std::size_t point_ok = 0, lower_ok = 0, sym_ok = 0, tri_ok = 0;
  for (int i = 0; i < 20; ++i) {
    const auto x = random_metric(rng, size5(rng));
    point_ok += gh_bruteforce(x, one_point()) == diameter(x) / Rational(2);
  }
  for (int i = 0; i < 50; ++i) {
    const auto x = random_metric(rng, size5(rng));
    const auto y = random_metric(rng, size5(rng));
    lower_ok += gh_bruteforce(x, y) >= lower_bound_diam(x, y);
  }
  for (int i = 0; i < 20; ++i) {
    const auto x = random_metric(rng, size4(rng));
    const auto y = random_metric(rng, size4(rng));
    const auto z = random_metric(rng, size4(rng));
    const auto xy = gh_bruteforce(x, y), yz = gh_bruteforce(y, z), xz = gh_bruteforce(x, z);
    sym_ok += xy == gh_bruteforce(y, x);
    tri_ok += xz <= xy + yz && xy <= xz + yz && yz <= xy + xz;
  }
  std::ostringstream s;
  s << "to point " << point_ok << "/20, diameter lower bound " << lower_ok << "/50, symmetry "
    << sym_ok << "/20, triangle " << tri_ok << "/20";
  return {point_ok == 20 && lower_ok == 50 && sym_ok == 20 && tri_ok == 20, s.str()};
}

Outcome search_equivalence() {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<std::size_t> size5(1, 5);
  std::size_t ok = 0;
  std::uint64_t nodes = 0;
  for (int i = 0; i < 30; ++i) {
    const auto x = random_metric(rng, size5(rng));
    const auto y = random_metric(rng, size5(rng));
    const auto bb = gh_branch_and_bound(x, y);
    nodes += bb.nodes_expanded;
    ok += bb.exact() && bb.lower == gh_bruteforce(x, y);
  }
  std::ostringstream s;
  s << ok << "/30 pairs collapse to the brute-force value (" << nodes << " nodes total)";
  return {ok == 30, s.str()};
}

Outcome projection_upper_bound() {
  const auto two = FiniteMetricSpace::from_line({Rational(0), Rational(1)});
  std::size_t ok = 0, total = 0;
  for (const Rational d : {Rational(1, 10), Rational(1, 5), Rational(3, 10)}) {
    for (int window : {1, 2, 3}) {
      for (const Rational step : {Rational(1, 2), Rational(1, 4), Rational(1, 10)}) {
        const auto base = sample(matched_segment(kHalf, window), step);
        const auto product = l1_product(base, scale(two, d));
        const auto r = projection_corr(product, base);
        ++total;
        ok += distortion(r, product, base) == d &&
              gh_upper_from_corr(r, product, base) == d / Rational(2);
      }
    }
  }
  std::ostringstream s;
  s << ok << "/" << total << " (d, window, step) cases with distortion = d exactly";
  return {ok == total, s.str()};
}

Outcome composite_realization() {
  const Rational t(2, 5), d(1, 5), h(1, 20);
  const auto p = GeodesicPoint::thick_lattice(t, kDelta);
  const auto q = GeodesicPoint::real_product(d, kDelta);
  const auto m = matched_realizations(p, q, 3, h, GeneratorSpace::two_point().space());
  const auto upper = gh_upper_from_corr(m.corr, m.a, m.b);
  const auto formula = d / Rational(2) + kHalf - t;
  const auto slack = upper - formula;
  std::ostringstream s;
  s << "|Z|=" << m.a.size() << " |R_d|=" << m.b.size() << " upper " << upper << ", formula "
    << formula << ", slack " << slack << " (allowed " << h << ")";
  return {slack <= h, s.str()};
}

Outcome evidence_monotonicity() {
  const Rational h(1, 4);
  const auto generator = GeneratorSpace::two_point().space();
  std::size_t ok = 0, total = 0, exhausted = 0;
  Rational worst_excess(-1);
  for (const auto& t : lattice_grid()) {
    for (const auto& d : product_grid()) {
      const auto p = GeodesicPoint::thick_lattice(t, kDelta);
      const auto q = GeodesicPoint::real_product(d, kDelta);
      const auto m = matched_realizations(p, q, 1, h, generator);
      // The search upper bound dominates the exact distance of the realized
      // spaces; an exhausted search makes it equal.
      const auto bb = gh_branch_and_bound(m.a, m.b, 2'000'000, m.corr);
      const auto excess = bb.upper - formula_distance(p, q);
      worst_excess = std::max(worst_excess, excess);
      ++total;
      ok += excess <= h;
      exhausted += bb.exact();
    }
  }
  std::ostringstream s;
  s << ok << "/" << total << " grid pairs with GH(realizations) <= formula + 1/4; "
    << exhausted << "/" << total << " searches exact; max excess " << worst_excess;
  return {ok == total, s.str()};
}

IntervalUnion random_union(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> parts(1, 4), pos(-30, 30), len(0, 12), den(1, 6);
  std::vector<Interval> v;
  const int k = parts(rng);
  for (int i = 0; i < k; ++i) {
    const int q = den(rng);
    const int lo = pos(rng);
    v.push_back({Rational(lo, q), Rational(lo + len(rng), q)});
  }
  return IntervalUnion(std::move(v));
}

// Same set as `u`, rebuilt from pieces that touch or overlap.
IntervalUnion fragmented(const IntervalUnion& u) {
  std::vector<Interval> v;
  for (const auto& part : u.intervals()) {
    const Rational mid = (part.lo + part.hi) / Rational(2);
    v.push_back({mid, part.hi});
    v.push_back({part.lo, mid});
    v.push_back({part.lo, part.lo});
  }
  return IntervalUnion(std::move(v));
}

Outcome hausdorff_axioms() {
  std::mt19937_64 rng(99);
  std::size_t sym = 0, zero_iff = 0, tri = 0;
  for (int i = 0; i < 100; ++i) {
    const auto a = random_union(rng);
    const auto b = i % 5 == 0 ? fragmented(a) : random_union(rng);
    const auto ab = hausdorff(a, b);
    sym += ab == hausdorff(b, a);
    zero_iff += (ab == Rational(0)) == (a == b);
  }
  for (int i = 0; i < 50; ++i) {
    const auto a = random_union(rng), b = random_union(rng), c = random_union(rng);
    tri += hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c);
  }
  std::ostringstream s;
  s << "symmetry " << sym << "/100, zero iff equal " << zero_iff << "/100, triangle " << tri
    << "/50";
  return {sym == 100 && zero_iff == 100 && tri == 50, s.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"geodesic additivity", geodesic_additivity},
      {"lattice/product closed form", lattice_product_closed_form},
      {"canonical Hausdorff geodesic", canonical_hausdorff_geodesic},
      {"diameter identities", diameter_identities},
      {"search equivalence", search_equivalence},
      {"projection upper bound", projection_upper_bound},
      {"composite realization slack", composite_realization},
      {"evidence monotonicity", evidence_monotonicity},
      {"hausdorff axioms", hausdorff_axioms},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("%s %zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), secs);
  }
  std::printf("%s: %zu/%zu criteria\n", failures == 0 ? "PASS" : "FAIL",
              criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
