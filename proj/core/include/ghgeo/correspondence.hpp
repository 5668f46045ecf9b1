#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "ghgeo/metric_space.hpp"
#include "ghgeo/rational.hpp"

namespace ghgeo {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A relation between a source space of size m and a target space of size n
/// whose projections onto both factors are surjective. Stored as a dense
/// m x n incidence matrix.
class Correspondence {
 public:
  /// Throws ShapeError on out-of-range indices and DomainError when some row
  /// or column is left uncovered.
  Correspondence(std::size_t m, std::size_t n, const std::vector<IndexPair>& pairs);

  static Correspondence identity(std::size_t n);
  static Correspondence full(std::size_t m, std::size_t n);

  std::size_t source_size() const { return m_; }
  std::size_t target_size() const { return n_; }
  bool contains(std::size_t i, std::size_t j) const { return incidence_[i * n_ + j] != 0; }
  /// Pairs in lexicographic order.
  std::vector<IndexPair> pairs() const;
  std::size_t pair_count() const;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::uint8_t> incidence_;
};

/// max | |xx'| - |yy'| | over all (x, y), (x', y') in the relation.
Rational distortion(const Correspondence& r, const FiniteMetricSpace& x,
                    const FiniteMetricSpace& y);

/// Pairs (x, z) such that some y is related to both.
Correspondence compose(const Correspondence& r, const Correspondence& s);

Correspondence transpose(const Correspondence& r);

/// Pairs every point of a with all of its nearest points in b and every
/// point of b with all of its nearest points in a. Both spaces must carry
/// line coordinates (see FiniteMetricSpace::from_line).
Correspondence nearest_point_corr(const FiniteMetricSpace& a, const FiniteMetricSpace& b);

/// Projection of l1_product(base, F) onto its first factor: every (r, x) is
/// paired with r. Throws ShapeError when `product` is not a product over
/// `base` in the layout l1_product produces.
Correspondence projection_corr(const FiniteMetricSpace& product, const FiniteMetricSpace& base);

/// distortion / 2, an upper bound on the Gromov-Hausdorff distance.
Rational gh_upper_from_corr(const Correspondence& r, const FiniteMetricSpace& x,
                            const FiniteMetricSpace& y);

/// "m n" header followed by one "i j" line per pair.
Correspondence read_correspondence(std::istream& in);
void write_correspondence(std::ostream& out, const Correspondence& r);

}  // namespace ghgeo
