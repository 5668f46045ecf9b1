#include "ghgeo/correspondence.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ghgeo/errors.hpp"
#include "integer_metric.hpp"

namespace ghgeo {

Correspondence::Correspondence(std::size_t m, std::size_t n, const std::vector<IndexPair>& pairs)
    : m_(m), n_(n), incidence_(m * n, 0) {
  if (m == 0 || n == 0) throw ShapeError("correspondence between empty spaces");
  for (const auto& [i, j] : pairs) {
    if (i >= m || j >= n) {
      throw ShapeError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range for " + std::to_string(m) + "x" + std::to_string(n));
    }
    incidence_[i * n + j] = 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < n && !hit; ++j) hit = contains(i, j);
    if (!hit) throw DomainError("source point " + std::to_string(i) + " is unmatched");
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool hit = false;
    for (std::size_t i = 0; i < m && !hit; ++i) hit = contains(i, j);
    if (!hit) throw DomainError("target point " + std::to_string(j) + " is unmatched");
  }
}

Correspondence Correspondence::identity(std::size_t n) {
  std::vector<IndexPair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return Correspondence(n, n, pairs);
}

Correspondence Correspondence::full(std::size_t m, std::size_t n) {
  std::vector<IndexPair> pairs;
  pairs.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Correspondence(m, n, pairs);
}

std::vector<IndexPair> Correspondence::pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t Correspondence::pair_count() const {
  return static_cast<std::size_t>(std::count(incidence_.begin(), incidence_.end(), 1));
}

Rational distortion(const Correspondence& r, const FiniteMetricSpace& x,
                    const FiniteMetricSpace& y) {
  if (r.source_size() != x.size() || r.target_size() != y.size()) {
    throw ShapeError("correspondence is " + std::to_string(r.source_size()) + "x" +
                     std::to_string(r.target_size()) + " but spaces have sizes " +
                     std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  const auto pairs = r.pairs();
  if (const auto ints = detail::to_integer_pair(x, y)) {
    std::int64_t best = 0;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      const auto [xa, ya] = pairs[a];
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        const auto [xb, yb] = pairs[b];
        const std::int64_t diff = ints->x(xa, xb) - ints->y(ya, yb);
        best = std::max(best, diff < 0 ? -diff : diff);
      }
    }
    return ints->to_rational(best);
  }
  Rational best(0);
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      best = std::max(best, abs(x.distance(pairs[a].first, pairs[b].first) -
                                y.distance(pairs[a].second, pairs[b].second)));
    }
  }
  return best;
}

Correspondence compose(const Correspondence& r, const Correspondence& s) {
  if (r.target_size() != s.source_size()) {
    throw ShapeError("cannot compose " + std::to_string(r.source_size()) + "x" +
                     std::to_string(r.target_size()) + " with " +
                     std::to_string(s.source_size()) + "x" + std::to_string(s.target_size()));
  }
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < r.source_size(); ++i) {
    for (std::size_t k = 0; k < s.target_size(); ++k) {
      for (std::size_t j = 0; j < r.target_size(); ++j) {
        if (r.contains(i, j) && s.contains(j, k)) {
          out.emplace_back(i, k);
          break;
        }
      }
    }
  }
  return Correspondence(r.source_size(), s.target_size(), out);
}

Correspondence transpose(const Correspondence& r) {
  auto pairs = r.pairs();
  for (auto& p : pairs) std::swap(p.first, p.second);
  return Correspondence(r.target_size(), r.source_size(), pairs);
}

namespace {

const std::vector<Rational>& line_coordinates(const FiniteMetricSpace& s, const char* which) {
  if (!s.coordinates()) {
    throw ShapeError(std::string(which) + " space has no line coordinates");
  }
  return *s.coordinates();
}

// For each p in `from`, every index in `to` attaining the minimal distance.
void add_nearest(const std::vector<Rational>& from, const std::vector<Rational>& to,
                 bool swapped, std::vector<IndexPair>& out) {
  for (std::size_t i = 0; i < from.size(); ++i) {
    Rational best = abs(from[i] - to[0]);
    for (std::size_t j = 1; j < to.size(); ++j) best = std::min(best, abs(from[i] - to[j]));
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (abs(from[i] - to[j]) == best) out.push_back(swapped ? IndexPair{j, i} : IndexPair{i, j});
    }
  }
}

}  // namespace

Correspondence nearest_point_corr(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
  const auto& ca = line_coordinates(a, "source");
  const auto& cb = line_coordinates(b, "target");
  std::vector<IndexPair> pairs;
  add_nearest(ca, cb, false, pairs);
  add_nearest(cb, ca, true, pairs);
  return Correspondence(a.size(), b.size(), pairs);
}

Correspondence projection_corr(const FiniteMetricSpace& product, const FiniteMetricSpace& base) {
  const std::size_t nb = base.size();
  if (product.size() % nb != 0) {
    throw ShapeError("product size " + std::to_string(product.size()) +
                     " is not a multiple of the base size " + std::to_string(nb));
  }
  const std::size_t fiber = product.size() / nb;
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t i2 = 0; i2 < nb; ++i2) {
      for (std::size_t j = 0; j < fiber; ++j) {
        if (product.distance(i * fiber + j, i2 * fiber + j) != base.distance(i, i2)) {
          throw ShapeError("space is not an l1 product over the given base");
        }
      }
    }
  }
  std::vector<IndexPair> pairs;
  pairs.reserve(product.size());
  for (std::size_t u = 0; u < product.size(); ++u) pairs.emplace_back(u, u / fiber);
  return Correspondence(product.size(), nb, pairs);
}

Rational gh_upper_from_corr(const Correspondence& r, const FiniteMetricSpace& x,
                            const FiniteMetricSpace& y) {
  return distortion(r, x, y) / Rational(2);
}

Correspondence read_correspondence(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next = [&](std::istringstream& is) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      is = std::istringstream(line);
      return true;
    }
    return false;
  };
  std::istringstream is;
  long long m = 0;
  long long n = 0;
  if (!next(is) || !(is >> m >> n) || m <= 0 || n <= 0) {
    throw ParseError("expected header 'm n' with positive sizes", line_no);
  }
  std::vector<IndexPair> pairs;
  while (next(is)) {
    long long i = -1;
    long long j = -1;
    std::string extra;
    if (!(is >> i >> j) || (is >> extra) || i < 0 || j < 0) {
      throw ParseError("expected pair 'i j'", line_no);
    }
    pairs.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return Correspondence(static_cast<std::size_t>(m), static_cast<std::size_t>(n), pairs);
}

void write_correspondence(std::ostream& out, const Correspondence& r) {
  out << r.source_size() << ' ' << r.target_size() << '\n';
  for (const auto& [i, j] : r.pairs()) out << i << ' ' << j << '\n';
}

}  // namespace ghgeo
