#pragma once

// Private helper: a pair of finite metric spaces rescaled by the least common
// denominator of all their distances, so that inner loops compare int64
// values exactly. Values are kept well below INT64_MAX / 4 so sums and
// differences of two entries cannot overflow.

#include <cstdint>
#include <optional>
#include <vector>

#include "ghgeo/metric_space.hpp"
#include "ghgeo/rational.hpp"

namespace ghgeo::detail {

struct IntegerMetric {
  std::size_t n = 0;
  std::vector<std::int64_t> d;  // row-major

  std::int64_t operator()(std::size_t i, std::size_t j) const { return d[i * n + j]; }
};

struct IntegerPair {
  IntegerMetric x;
  IntegerMetric y;
  mpz_class scale;  // common denominator; true distance = value / scale

  Rational to_rational(std::int64_t value) const;
};

// nullopt when the rescaled values would not fit comfortably in int64.
std::optional<IntegerPair> to_integer_pair(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace ghgeo::detail
