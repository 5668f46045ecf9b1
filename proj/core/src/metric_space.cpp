#include "ghgeo/metric_space.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ghgeo/errors.hpp"

namespace ghgeo {

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kZeroDiagonal: return "zero-diagonal";
    case Axiom::kSymmetry: return "symmetry";
    case Axiom::kPositivity: return "positivity";
    case Axiom::kTriangle: return "triangle";
  }
  return "unknown";
}

std::string Violation::describe(const RationalMatrix& m) const {
  std::ostringstream os;
  os << axiom_name(axiom) << ' ';
  switch (axiom) {
    case Axiom::kZeroDiagonal:
      os << "(" << i << ") dist = " << m[i][i] << " != 0";
      break;
    case Axiom::kSymmetry:
      os << "(" << i << "," << j << ") " << m[i][j] << " != " << m[j][i];
      break;
    case Axiom::kPositivity:
      os << "(" << i << "," << j << ") dist = " << m[i][j] << " <= 0";
      break;
    case Axiom::kTriangle:
      os << "(" << i << "," << j << "," << k << ") " << m[i][k] << " > " << m[i][j] << " + "
         << m[j][k];
      break;
  }
  return os.str();
}

ValidationReport validate_metric(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw ShapeError("metric matrix is empty");
  for (const auto& row : m) {
    if (row.size() != n) throw ShapeError("metric matrix is not square");
  }

  ValidationReport report;
  auto& out = report.violations;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i].sign() != 0) out.push_back({Axiom::kZeroDiagonal, i, i, 0});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) out.push_back({Axiom::kSymmetry, i, j, 0});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m[i][j].sign() <= 0) out.push_back({Axiom::kPositivity, i, j, 0});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (m[i][k] > m[i][j] + m[j][k]) out.push_back({Axiom::kTriangle, i, j, k});
      }
    }
  }
  return report;
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, const RationalMatrix& matrix)
    : labels_(std::move(labels)) {
  if (labels_.size() != matrix.size()) {
    throw ShapeError("label count does not match matrix size");
  }
  const ValidationReport report = validate_metric(matrix);
  if (!report.valid()) {
    throw DomainError("not a metric: " + report.violations.front().describe(matrix));
  }
  dist_.reserve(size() * size());
  for (const auto& row : matrix) dist_.insert(dist_.end(), row.begin(), row.end());
}

FiniteMetricSpace FiniteMetricSpace::from_line(std::vector<Rational> coordinates) {
  if (coordinates.empty()) throw ShapeError("line sample is empty");
  FiniteMetricSpace s;
  const std::size_t n = coordinates.size();
  s.labels_.reserve(n);
  s.dist_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    s.labels_.push_back(coordinates[i].str());
    for (std::size_t j = 0; j < n; ++j) {
      s.dist_[i * n + j] = abs(coordinates[i] - coordinates[j]);
      if (i != j && s.dist_[i * n + j].sign() == 0) {
        throw DomainError("duplicate coordinate " + coordinates[i].str());
      }
    }
  }
  s.coords_ = std::move(coordinates);
  return s;
}

RationalMatrix FiniteMetricSpace::matrix() const {
  RationalMatrix m(size());
  for (std::size_t i = 0; i < size(); ++i) {
    m[i].assign(dist_.begin() + static_cast<std::ptrdiff_t>(i * size()),
                dist_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size()));
  }
  return m;
}

FiniteMetricSpace one_point() { return FiniteMetricSpace({"*"}, {{Rational(0)}}); }

FiniteMetricSpace scale(const FiniteMetricSpace& space, const Rational& lambda) {
  if (lambda.sign() < 0) throw DomainError("scale factor must be nonnegative");
  if (lambda.sign() == 0) return one_point();
  FiniteMetricSpace s = space;
  for (auto& d : s.dist_) d *= lambda;
  if (s.coords_) {
    for (auto& c : *s.coords_) c *= lambda;
  }
  return s;
}

FiniteMetricSpace l1_product(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
  FiniteMetricSpace p;
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  p.labels_.reserve(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) p.labels_.push_back(a.label(i) + "|" + b.label(j));
  }
  p.dist_.resize(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      p.dist_[u * n + v] = a.distance(u / nb, v / nb) + b.distance(u % nb, v % nb);
    }
  }
  return p;
}

Rational diameter(const FiniteMetricSpace& space) {
  Rational best(0);
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) best = std::max(best, space.distance(i, j));
  }
  return best;
}

Rational eccentricity(const FiniteMetricSpace& space, std::size_t i) {
  Rational best(0);
  for (std::size_t j = 0; j < space.size(); ++j) best = std::max(best, space.distance(i, j));
  return best;
}

namespace {

// Line reader that skips blank lines and '#' comments and tracks numbering.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> next_tokens(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream is(line);
      std::vector<std::string> tokens;
      for (std::string tok; is >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    throw ParseError(std::string("unexpected end of input, expected ") + what, line_no_ + 1);
  }

  int line() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

}  // namespace

std::pair<std::vector<std::string>, RationalMatrix> read_metric_matrix(std::istream& in) {
  LineReader reader(in);
  auto head = reader.next_tokens("point count");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(head.at(0), &used);
    if (used != head[0].size() || v <= 0 || head.size() != 1) throw std::invalid_argument("");
    n = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError("expected a positive point count", reader.line());
  }

  auto labels = reader.next_tokens("labels");
  if (labels.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " labels, got " +
                         std::to_string(labels.size()),
                     reader.line());
  }

  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = reader.next_tokens("matrix row");
    if (row.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " entries, got " +
                           std::to_string(row.size()),
                       reader.line());
    }
    m[i].reserve(n);
    for (const auto& tok : row) {
      try {
        m[i].push_back(Rational::parse(tok));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), reader.line());
      }
    }
  }
  return {std::move(labels), std::move(m)};
}

FiniteMetricSpace read_metric_space(std::istream& in) {
  auto [labels, matrix] = read_metric_matrix(in);
  return FiniteMetricSpace(std::move(labels), matrix);
}

void write_metric_space(std::ostream& out, const FiniteMetricSpace& space) {
  out << space.size() << '\n';
  for (std::size_t i = 0; i < space.size(); ++i) out << (i ? " " : "") << space.label(i);
  out << '\n';
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) out << (j ? " " : "") << space.distance(i, j);
    out << '\n';
  }
}

FiniteMetricSpace load_metric_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_metric_space(in);
}

}  // namespace ghgeo
