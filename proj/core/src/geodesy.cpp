#include "ghgeo/geodesy.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "ghgeo/correspondence.hpp"
#include "ghgeo/errors.hpp"

namespace ghgeo {
namespace {

const Rational kHalf(1, 2);

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

unsigned thread_count() {
  if (const char* env = std::getenv("GHG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void check_delta(const Rational& delta) {
  if (delta.sign() <= 0 || delta >= kHalf) {
    throw DomainError("delta must satisfy 0 < delta < 1/2, got " + delta.str());
  }
}

GeodesicPoint GeodesicPoint::real_line(const Rational& delta) {
  check_delta(delta);
  return GeodesicPoint(Leg::kRealLine, Rational(0), kHalf, delta);
}

GeodesicPoint GeodesicPoint::real_product(const Rational& d, const Rational& delta) {
  check_delta(delta);
  if (d.sign() < 0 || d > delta) {
    throw DomainError("product scale d = " + d.str() + " outside [0, " + delta.str() + "]");
  }
  if (d.sign() == 0) return real_line(delta);
  return GeodesicPoint(Leg::kRealProduct, d, kHalf, delta);
}

GeodesicPoint GeodesicPoint::thick_lattice(const Rational& t, const Rational& delta) {
  check_delta(delta);
  if (t < kHalf - delta || t > kHalf) {
    throw DomainError("lattice thickness t = " + t.str() + " outside [" + (kHalf - delta).str() +
                      ", 1/2]");
  }
  if (t == kHalf) return real_line(delta);
  return GeodesicPoint(Leg::kThickLattice, Rational(0), t, delta);
}

std::string GeodesicPoint::describe() const {
  switch (leg_) {
    case Leg::kRealLine: return "R";
    case Leg::kRealProduct: return "R_d(" + d_.str() + ")";
    case Leg::kThickLattice: return "Z_t(" + t_.str() + ")";
  }
  return "?";
}

GeneratorSpace::GeneratorSpace(FiniteMetricSpace space) : space_(std::move(space)) {
  if (diameter(space_) != Rational(1)) {
    throw DomainError("generator space must have diameter 1, got " + diameter(space_).str());
  }
}

GeneratorSpace GeneratorSpace::two_point() {
  return GeneratorSpace(FiniteMetricSpace({"0", "1"}, {{Rational(0), Rational(1)},
                                                       {Rational(1), Rational(0)}}));
}

GeodesicPoint curve_point(const Rational& s, const Rational& delta) {
  check_delta(delta);
  const Rational half_delta = delta / Rational(2);
  const Rational end = Rational(3) * half_delta;
  if (s.sign() < 0 || s > end) {
    throw DomainError("curve parameter " + s.str() + " outside [0, " + end.str() + "]");
  }
  if (s <= half_delta) return GeodesicPoint::real_product(delta - Rational(2) * s, delta);
  return GeodesicPoint::thick_lattice(kHalf - (s - half_delta), delta);
}

Rational curve_parameter(const GeodesicPoint& p) {
  const Rational half_delta = p.delta() / Rational(2);
  switch (p.leg()) {
    case Leg::kRealLine: return half_delta;
    case Leg::kRealProduct: return (p.delta() - p.d()) / Rational(2);
    case Leg::kThickLattice: return half_delta + (kHalf - p.t());
  }
  return half_delta;
}

Rational formula_distance(const GeodesicPoint& p, const GeodesicPoint& q) {
  if (p.delta() != q.delta()) {
    throw DomainError("points from different families: delta " + p.delta().str() + " vs " +
                      q.delta().str());
  }
  // The real line is both R_0 and Z_{1/2}; d() and t() already say so.
  const bool p_lattice = p.leg() == Leg::kThickLattice;
  const bool q_lattice = q.leg() == Leg::kThickLattice;
  if (p_lattice && q_lattice) return abs(p.t() - q.t());
  if (p_lattice) return q.d() / Rational(2) + kHalf - p.t();
  if (q_lattice) return p.d() / Rational(2) + kHalf - q.t();
  // Both on the product leg (either may be R itself). If one is R and the
  // other a lattice point we went through a branch above.
  return abs(p.d() - q.d()) / Rational(2);
}

std::vector<GeodesicRow> geodesic_table(const Rational& delta, const Rational& step) {
  check_delta(delta);
  if (step.sign() <= 0) throw DomainError("grid step must be positive");
  const Rational end = Rational(3) * delta / Rational(2);
  if (!(end / step).is_integer()) {
    throw DomainError("grid step " + step.str() + " does not divide " + end.str());
  }
  std::vector<Rational> grid;
  for (Rational s(0); s <= end; s += step) grid.push_back(s);

  std::vector<GeodesicPoint> points;
  points.reserve(grid.size());
  for (const auto& s : grid) points.push_back(curve_point(s, delta));

  const std::size_t n = grid.size();
  std::vector<std::vector<GeodesicRow>> blocks(n);
  parallel_for(n, [&](std::size_t i) {
    auto& block = blocks[i];
    block.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational formula = formula_distance(points[i], points[j]);
      Rational diff = abs(grid[i] - grid[j]);
      const bool eq = formula == diff;
      block.push_back({grid[i], grid[j], points[i], points[j], std::move(formula), std::move(diff), eq});
    }
  });

  std::vector<GeodesicRow> rows;
  rows.reserve(n * n);
  for (auto& block : blocks) {
    for (auto& row : block) rows.push_back(std::move(row));
  }
  return rows;
}

Realization realize_with_base(const GeodesicPoint& p, int window, const Rational& step,
                              const FiniteMetricSpace& generator, const Rational& segment_t) {
  if (window < 1) throw DomainError("window must be at least 1");
  if (step.sign() <= 0) throw DomainError("sampling step must be positive");
  if (p.leg() == Leg::kThickLattice) {
    return {sample(thick_lattice(p.t(), window), step), std::nullopt};
  }
  FiniteMetricSpace base = sample(matched_segment(segment_t, window), step);
  if (p.leg() == Leg::kRealLine) return {base, base};
  FiniteMetricSpace product = l1_product(base, scale(generator, p.d()));
  return {std::move(product), std::move(base)};
}

FiniteMetricSpace realize(const GeodesicPoint& p, int window, const Rational& step,
                          const FiniteMetricSpace& generator, const Rational& segment_t) {
  return realize_with_base(p, window, step, generator, segment_t).space;
}

namespace {

// Lattice point vs a point on the product leg (R included).
MatchedPair lattice_vs_product(const GeodesicPoint& lattice, const GeodesicPoint& product,
                               int window, const Rational& step,
                               const FiniteMetricSpace& generator) {
  const FiniteMetricSpace l = realize(lattice, window, step, generator);
  // The real line is realized as a product with the one-point space so that
  // the projection below is defined uniformly.
  const FiniteMetricSpace base = sample(matched_segment(lattice.t(), window), step);
  FiniteMetricSpace p = l1_product(base, scale(generator, product.d()));
  const Correspondence to_base = nearest_point_corr(l, base);
  const Correspondence lift = transpose(projection_corr(p, base));
  Correspondence corr = compose(to_base, lift);
  return {l, std::move(p), std::move(corr)};
}

MatchedPair product_vs_product(const GeodesicPoint& p, const GeodesicPoint& q, int window,
                               const Rational& step, const FiniteMetricSpace& generator) {
  const FiniteMetricSpace base = sample(matched_segment(kHalf, window), step);
  FiniteMetricSpace a = l1_product(base, scale(generator, p.d()));
  FiniteMetricSpace b = l1_product(base, scale(generator, q.d()));
  if (a.size() == b.size()) {
    Correspondence id = Correspondence::identity(a.size());
    return {std::move(a), std::move(b), std::move(id)};
  }
  Correspondence corr = compose(projection_corr(a, base), transpose(projection_corr(b, base)));
  return {std::move(a), std::move(b), std::move(corr)};
}

}  // namespace

MatchedPair matched_realizations(const GeodesicPoint& p, const GeodesicPoint& q, int window,
                                 const Rational& step, const FiniteMetricSpace& generator) {
  if (p.delta() != q.delta()) throw DomainError("points from different families");
  const bool p_lattice = p.leg() == Leg::kThickLattice;
  const bool q_lattice = q.leg() == Leg::kThickLattice;
  if (p_lattice && q_lattice) {
    FiniteMetricSpace a = realize(p, window, step, generator);
    FiniteMetricSpace b = realize(q, window, step, generator);
    Correspondence corr = nearest_point_corr(a, b);
    return {std::move(a), std::move(b), std::move(corr)};
  }
  if (p_lattice) return lattice_vs_product(p, q, window, step, generator);
  if (q_lattice) {
    MatchedPair swapped = lattice_vs_product(q, p, window, step, generator);
    return {std::move(swapped.b), std::move(swapped.a), transpose(swapped.corr)};
  }
  return product_vs_product(p, q, window, step, generator);
}

EmpiricalResult empirical_gh(const GeodesicPoint& p, const GeodesicPoint& q,
                             const FiniteMetricSpace& generator, const EmpiricalOptions& options) {
  const Rational formula = formula_distance(p, q);

  const MatchedPair fine = matched_realizations(p, q, options.window, options.step, generator);
  const Rational upper = gh_upper_from_corr(fine.corr, fine.a, fine.b);

  const MatchedPair tiny =
      matched_realizations(p, q, options.evidence_window, options.evidence_step, generator);
  const GHInterval evidence = gh_branch_and_bound(tiny.a, tiny.b, options.budget, tiny.corr);

  return EmpiricalResult{p,
                         q,
                         formula,
                         upper,
                         upper - formula,
                         options.step,
                         evidence.lower,
                         evidence.lower_witness,
                         evidence.upper,
                         evidence.nodes_expanded};
}

}  // namespace ghgeo
