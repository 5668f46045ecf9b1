#include "integer_metric.hpp"

#include <limits>

namespace ghgeo::detail {
namespace {

constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 8;

bool fill(const FiniteMetricSpace& space, const mpz_class& scale, IntegerMetric& out) {
  out.n = space.size();
  out.d.resize(out.n * out.n);
  for (std::size_t i = 0; i < out.n; ++i) {
    for (std::size_t j = 0; j < out.n; ++j) {
      const mpq_class& q = space.distance(i, j).raw();
      mpz_class v = q.get_num() * (scale / q.get_den());
      if (!v.fits_slong_p() || v.get_si() > kLimit) return false;
      out.d[i * out.n + j] = v.get_si();
    }
  }
  return true;
}

}  // namespace

Rational IntegerPair::to_rational(std::int64_t value) const {
  return Rational(value) / Rational::parse(scale.get_str());
}

std::optional<IntegerPair> to_integer_pair(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  IntegerPair out;
  out.scale = 1;
  for (const FiniteMetricSpace* s : {&x, &y}) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      for (std::size_t j = 0; j < s->size(); ++j) {
        mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(),
                s->distance(i, j).raw().get_den_mpz_t());
      }
    }
  }
  if (!out.scale.fits_slong_p()) return std::nullopt;
  if (!fill(x, out.scale, out.x) || !fill(y, out.scale, out.y)) return std::nullopt;
  return out;
}

}  // namespace ghgeo::detail
