#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghgeo/rational.hpp"

namespace ghgeo {

using RationalMatrix = std::vector<std::vector<Rational>>;

enum class Axiom { kZeroDiagonal, kSymmetry, kPositivity, kTriangle };

const char* axiom_name(Axiom axiom);

// One violated axiom instance. For kTriangle the offending inequality is
// dist[i][k] > dist[i][j] + dist[j][k]; otherwise k is unused.
struct Violation {
  Axiom axiom;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  std::string describe(const RationalMatrix& matrix) const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

/// Checks the metric axioms on a square matrix and lists every violated
/// instance. Throws ShapeError when the matrix is empty or not square.
ValidationReport validate_metric(const RationalMatrix& matrix);

/// A finite metric space with exact rational distances. Instances are
/// immutable and always satisfy the metric axioms.
///
/// Spaces sampled from the real line additionally remember the coordinate of
/// each point, which nearest-point matching relies on.
class FiniteMetricSpace {
 public:
  /// Throws ShapeError on size mismatch, DomainError if the matrix is not a
  /// metric (message lists the first violation).
  FiniteMetricSpace(std::vector<std::string> labels, const RationalMatrix& matrix);

  /// Points on the real line with the induced metric |a - b|. Coordinates
  /// must be pairwise distinct.
  static FiniteMetricSpace from_line(std::vector<Rational> coordinates);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& distance(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  RationalMatrix matrix() const;

  const std::optional<std::vector<Rational>>& coordinates() const { return coords_; }

  // Labels and distances; coordinates are auxiliary and not compared.
  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.labels_ == b.labels_ && a.dist_ == b.dist_;
  }

 private:
  FiniteMetricSpace() = default;

  std::vector<std::string> labels_;
  std::vector<Rational> dist_;  // row-major, size() x size()
  std::optional<std::vector<Rational>> coords_;

  friend FiniteMetricSpace scale(const FiniteMetricSpace&, const Rational&);
  friend FiniteMetricSpace l1_product(const FiniteMetricSpace&, const FiniteMetricSpace&);
};

/// The single-point space.
FiniteMetricSpace one_point();

/// Multiplies every distance by lambda. lambda = 0 collapses to one_point().
/// Throws DomainError for negative lambda.
FiniteMetricSpace scale(const FiniteMetricSpace& space, const Rational& lambda);

/// Cartesian product with the sum metric. Point (i, j) sits at index
/// i * b.size() + j and is labelled "label_a|label_b".
FiniteMetricSpace l1_product(const FiniteMetricSpace& a, const FiniteMetricSpace& b);

Rational diameter(const FiniteMetricSpace& space);

// Largest distance from point i to any other point.
Rational eccentricity(const FiniteMetricSpace& space, std::size_t i);

/// Text format: point count, then the labels, then the rows of the distance
/// matrix as "p/q" or integer tokens. Parse errors carry line numbers.
FiniteMetricSpace read_metric_space(std::istream& in);
/// Like read_metric_space but returns the raw matrix so that invalid metrics
/// can still be reported on.
std::pair<std::vector<std::string>, RationalMatrix> read_metric_matrix(std::istream& in);
void write_metric_space(std::ostream& out, const FiniteMetricSpace& space);

FiniteMetricSpace load_metric_space(const std::string& path);

}  // namespace ghgeo
