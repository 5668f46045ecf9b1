#include "ghgeo/gh_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ghgeo/errors.hpp"
#include "integer_metric.hpp"

namespace ghgeo {

const char* lower_witness_name(LowerWitness w) {
  switch (w) {
    case LowerWitness::kDiameterBound: return "diameter bound";
    case LowerWitness::kExhaustedSearch: return "exhausted search";
    case LowerWitness::kPartialSearch: return "partial search";
  }
  return "unknown";
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

inline std::int64_t absdiff(std::int64_t a, std::int64_t b) { return a > b ? a - b : b - a; }

detail::IntegerPair integerize(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  auto ints = detail::to_integer_pair(x, y);
  if (!ints) throw SizeError("distances have denominators too large for exact search");
  return std::move(*ints);
}

Correspondence from_maps(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
  std::vector<IndexPair> pairs;
  pairs.reserve(f.size() + g.size());
  for (std::size_t i = 0; i < f.size(); ++i) pairs.emplace_back(i, f[i]);
  for (std::size_t j = 0; j < g.size(); ++j) pairs.emplace_back(g[j], j);
  return Correspondence(f.size(), g.size(), pairs);
}

// All maps from a domain of size `dom` to a codomain of size `cod`, in
// lexicographic order, flattened.
std::vector<std::uint8_t> all_maps(std::size_t dom, std::size_t cod, std::size_t count) {
  std::vector<std::uint8_t> maps(count * dom);
  std::vector<std::uint8_t> cur(dom, 0);
  for (std::size_t k = 0; k < count; ++k) {
    std::copy(cur.begin(), cur.end(), maps.begin() + static_cast<std::ptrdiff_t>(k * dom));
    for (std::size_t p = dom; p-- > 0;) {
      if (++cur[p] < cod) break;
      cur[p] = 0;
    }
  }
  return maps;
}

// Distortion of a map's graph: max over a < b of |d_dom(a, b) - d_cod(h a, h b)|.
std::int64_t map_distortion(const std::uint8_t* h, const detail::IntegerMetric& dom,
                            const detail::IntegerMetric& cod) {
  std::int64_t best = 0;
  for (std::size_t a = 0; a < dom.n; ++a) {
    for (std::size_t b = a + 1; b < dom.n; ++b) best = std::max(best, absdiff(dom(a, b), cod(h[a], h[b])));
  }
  return best;
}

}  // namespace

BruteForceResult gh_bruteforce_witness(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                       double cap) {
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  const double log_count = static_cast<double>(m) * std::log10(static_cast<double>(n)) +
                           static_cast<double>(n) * std::log10(static_cast<double>(m));
  if (log_count > std::log10(cap) + 1e-12 || m > 255 || n > 255) {
    throw SizeError("brute force needs |Y|^|X| * |X|^|Y| <= " + std::to_string(cap) +
                    "; use branch-and-bound for spaces of sizes " + std::to_string(m) + " and " +
                    std::to_string(n));
  }
  const auto ints = integerize(x, y);
  const auto& dx = ints.x;
  const auto& dy = ints.y;

  std::size_t nf = 1;
  for (std::size_t i = 0; i < m; ++i) nf *= n;
  std::size_t ng = 1;
  for (std::size_t j = 0; j < n; ++j) ng *= m;
  const auto fmaps = all_maps(m, n, nf);
  const auto gmaps = all_maps(n, m, ng);

  std::vector<std::int64_t> gdis(ng);
  for (std::size_t k = 0; k < ng; ++k) gdis[k] = map_distortion(&gmaps[k * n], dy, dx);

  std::int64_t best = kInf;
  std::size_t best_f = 0;
  std::size_t best_g = 0;
  for (std::size_t kf = 0; kf < nf; ++kf) {
    const std::uint8_t* f = &fmaps[kf * m];
    const std::int64_t fd = map_distortion(f, dx, dy);
    if (fd >= best) continue;
    for (std::size_t kg = 0; kg < ng; ++kg) {
      std::int64_t cur = std::max(fd, gdis[kg]);
      if (cur >= best) continue;
      const std::uint8_t* g = &gmaps[kg * n];
      // Cross terms between (a, f a) and (g b, b).
      for (std::size_t a = 0; a < m && cur < best; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          cur = std::max(cur, absdiff(dx(a, g[b]), dy(f[a], b)));
        }
      }
      if (cur < best) {
        best = cur;
        best_f = kf;
        best_g = kg;
      }
    }
  }

  std::vector<std::size_t> f(fmaps.begin() + static_cast<std::ptrdiff_t>(best_f * m),
                             fmaps.begin() + static_cast<std::ptrdiff_t>((best_f + 1) * m));
  std::vector<std::size_t> g(gmaps.begin() + static_cast<std::ptrdiff_t>(best_g * n),
                             gmaps.begin() + static_cast<std::ptrdiff_t>((best_g + 1) * n));
  return {ints.to_rational(best) / Rational(2), from_maps(f, g),
          static_cast<std::uint64_t>(nf) * ng};
}

Rational gh_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y, double cap) {
  return gh_bruteforce_witness(x, y, cap).value;
}

namespace {

// Branch-and-bound state. A variable is either a point a of X (choose f(a)
// in Y) or a point b of Y (choose g(b) in X); either choice adds one pair to
// the relation.
class Search {
 public:
  Search(const detail::IntegerPair& ints, std::uint64_t budget)
      : dx_(ints.x), dy_(ints.y), m_(dx_.n), n_(dy_.n), budget_(budget) {
    const std::size_t vars = m_ + n_;
    order_.resize(vars);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::int64_t> ecc(vars, 0);
    for (std::size_t a = 0; a < m_; ++a) {
      for (std::size_t b = 0; b < m_; ++b) ecc[a] = std::max(ecc[a], dx_(a, b));
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) ecc[m_ + a] = std::max(ecc[m_ + a], dy_(a, b));
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t u, std::size_t v) { return ecc[u] > ecc[v]; });

    width_ = std::max(m_, n_);
    // Level k holds, for every variable, the increment each candidate would
    // cause against the pairs fixed at depths < k.
    inc_.assign((vars + 1) * vars * width_, 0);
    choice_.assign(vars, 0);
    best_choice_.assign(vars, 0);
  }

  void set_incumbent(std::int64_t value, const std::vector<std::size_t>& f,
                     const std::vector<std::size_t>& g) {
    if (value >= best_) return;
    best_ = value;
    for (std::size_t a = 0; a < m_; ++a) best_choice_[a] = f[a];
    for (std::size_t b = 0; b < n_; ++b) best_choice_[m_ + b] = g[b];
  }

  std::int64_t evaluate(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) const {
    std::vector<IndexPair> pairs;
    for (std::size_t a = 0; a < m_; ++a) pairs.emplace_back(a, f[a]);
    for (std::size_t b = 0; b < n_; ++b) pairs.emplace_back(g[b], b);
    std::int64_t out = 0;
    for (std::size_t u = 0; u < pairs.size(); ++u) {
      for (std::size_t v = u + 1; v < pairs.size(); ++v) {
        out = std::max(out, absdiff(dx_(pairs[u].first, pairs[v].first),
                                    dy_(pairs[u].second, pairs[v].second)));
      }
    }
    return out;
  }

  void run() { descend(0, 0); }

  std::int64_t best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted_budget() const { return hit_budget_; }
  std::int64_t open_bound() const { return open_min_; }

  void best_maps(std::vector<std::size_t>& f, std::vector<std::size_t>& g) const {
    f.assign(best_choice_.begin(), best_choice_.begin() + static_cast<std::ptrdiff_t>(m_));
    g.assign(best_choice_.begin() + static_cast<std::ptrdiff_t>(m_), best_choice_.end());
  }

 private:
  std::size_t candidates(std::size_t var) const { return var < m_ ? n_ : m_; }

  // The pair created by assigning candidate c to variable var.
  IndexPair pair_of(std::size_t var, std::size_t c) const {
    return var < m_ ? IndexPair{var, c} : IndexPair{c, var - m_};
  }

  std::int64_t* inc(std::size_t level, std::size_t var) {
    const std::size_t vars = m_ + n_;
    return &inc_[(level * vars + var) * width_];
  }

  // Lower bound for the subtree at `depth`: the partial distortion, raised
  // by the cheapest choice of every unassigned variable.
  std::int64_t lookahead(std::size_t depth, std::int64_t partial) {
    std::int64_t bound = partial;
    for (std::size_t k = depth; k < order_.size(); ++k) {
      const std::size_t var = order_[k];
      const std::int64_t* row = inc(depth, var);
      std::int64_t cheapest = kInf;
      for (std::size_t c = 0; c < candidates(var); ++c) cheapest = std::min(cheapest, row[c]);
      bound = std::max(bound, cheapest);
    }
    return bound;
  }

  void descend(std::size_t depth, std::int64_t partial) {
    const std::int64_t bound = lookahead(depth, partial);
    if (bound >= best_) return;
    if (depth == order_.size()) {
      best_ = partial;
      for (std::size_t k = 0; k < order_.size(); ++k) best_choice_[order_[k]] = choice_[order_[k]];
      return;
    }
    if (nodes_ >= budget_) {
      hit_budget_ = true;
      open_min_ = std::min(open_min_, bound);
      return;
    }
    ++nodes_;

    const std::size_t var = order_[depth];
    const std::int64_t* row = inc(depth, var);
    std::vector<std::pair<std::int64_t, std::size_t>> cands;
    cands.reserve(candidates(var));
    for (std::size_t c = 0; c < candidates(var); ++c) {
      const std::int64_t next = std::max(partial, row[c]);
      if (next < best_) cands.emplace_back(next, c);
    }
    std::sort(cands.begin(), cands.end());

    for (const auto& [next, c] : cands) {
      if (next >= best_) break;
      const auto [pa, pb] = pair_of(var, c);
      choice_[var] = c;
      // Propagate the new pair into the increment table of the next level.
      for (std::size_t k = depth + 1; k < order_.size(); ++k) {
        const std::size_t w = order_[k];
        const std::int64_t* src = inc(depth, w);
        std::int64_t* dst = inc(depth + 1, w);
        for (std::size_t c2 = 0; c2 < candidates(w); ++c2) {
          const auto [qa, qb] = pair_of(w, c2);
          dst[c2] = std::max(src[c2], absdiff(dx_(pa, qa), dy_(pb, qb)));
        }
      }
      descend(depth + 1, next);
    }
  }

  const detail::IntegerMetric& dx_;
  const detail::IntegerMetric& dy_;
  std::size_t m_;
  std::size_t n_;
  std::size_t width_ = 0;
  std::uint64_t budget_;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> inc_;
  std::vector<std::size_t> choice_;
  std::vector<std::size_t> best_choice_;
  std::int64_t best_ = kInf;
  std::int64_t open_min_ = kInf;
  std::uint64_t nodes_ = 0;
  bool hit_budget_ = false;
};

}  // namespace

GHInterval gh_branch_and_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                               std::uint64_t budget, const std::optional<Correspondence>& seed) {
  const auto ints = integerize(x, y);
  Search search(ints, budget);

  // Constant maps give an incumbent of distortion max(diam X, diam Y).
  std::vector<std::size_t> f(x.size(), 0);
  std::vector<std::size_t> g(y.size(), 0);
  search.set_incumbent(search.evaluate(f, g), f, g);

  if (seed) {
    if (seed->source_size() != x.size() || seed->target_size() != y.size()) {
      throw ShapeError("seed correspondence does not match the spaces");
    }
    // pairs() is lexicographic, so each point keeps its lowest-index partner.
    std::vector<bool> seen_x(x.size(), false);
    std::vector<bool> seen_y(y.size(), false);
    for (const auto& [i, j] : seed->pairs()) {
      if (!seen_x[i]) f[i] = j, seen_x[i] = true;
      if (!seen_y[j]) g[j] = i, seen_y[j] = true;
    }
    search.set_incumbent(search.evaluate(f, g), f, g);
  }

  // A zero budget means no search at all: only the diameter bound is certified.
  const bool searched_any = budget > 0;
  if (searched_any) search.run();

  std::int64_t diam_gap = 0;
  {
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (auto v : ints.x.d) a = std::max(a, v);
    for (auto v : ints.y.d) b = std::max(b, v);
    diam_gap = absdiff(a, b);
  }

  const std::int64_t upper = search.best();
  std::int64_t lower = diam_gap;
  LowerWitness witness = LowerWitness::kDiameterBound;
  if (!searched_any) {
    lower = std::min(lower, upper);
  } else if (!search.exhausted_budget()) {
    lower = upper;
    witness = LowerWitness::kExhaustedSearch;
  } else {
    const std::int64_t searched = std::min(upper, search.open_bound());
    if (searched > lower) {
      lower = searched;
      witness = LowerWitness::kPartialSearch;
    }
  }

  search.best_maps(f, g);
  return GHInterval{ints.to_rational(lower) / Rational(2),
                    ints.to_rational(upper) / Rational(2),
                    witness,
                    from_maps(f, g),
                    search.nodes(),
                    !searched_any || search.exhausted_budget()};
}

Rational lower_bound_diam(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return abs(diameter(x) - diameter(y)) / Rational(2);
}

Rational gh_to_point(const FiniteMetricSpace& x) { return diameter(x) / Rational(2); }

std::vector<ScalingRow> scaling_curve_check(const FiniteMetricSpace& x,
                                            const std::vector<Rational>& lambdas,
                                            std::uint64_t budget) {
  const Rational diam = diameter(x);
  std::vector<ScalingRow> rows;
  rows.reserve(lambdas.size() * lambdas.size());
  for (const auto& l1 : lambdas) {
    for (const auto& l2 : lambdas) {
      const FiniteMetricSpace a = scale(x, l1);
      const FiniteMetricSpace b = scale(x, l2);
      // Each point goes to its own image; a collapsed side takes everything.
      const Correspondence same_point = a.size() == b.size()
                                            ? Correspondence::identity(a.size())
                                            : Correspondence::full(a.size(), b.size());
      const Rational upper = gh_upper_from_corr(same_point, a, b);
      const GHInterval gh = gh_branch_and_bound(a, b, budget, same_point);
      Rational expected = abs(l1 - l2) * diam / Rational(2);
      const bool matches = upper == expected;
      const bool exact = gh.exact() && gh.lower == expected;
      rows.push_back({l1, l2, std::move(expected), gh.lower, upper, matches, exact});
    }
  }
  return rows;
}

}  // namespace ghgeo
