#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghgeo/geodesy.hpp"
#include "ghgeo/rational.hpp"

namespace ghgeo::cli {

// An explicitly listed curve point: {"leg": "real" | "product" | "lattice",
// "d": ..., "t": ..., "delta": ...}. delta defaults to the config's delta.
struct PointSpec {
  std::string leg;
  std::optional<Rational> value;
  std::optional<Rational> delta;

  friend bool operator==(const PointSpec&, const PointSpec&) = default;
};

/// Experiment configuration read from JSON. All numbers are exact: rationals
/// are written as "p/q" strings or JSON integers.
struct ExperimentConfig {
  Rational delta{1, 5};
  std::optional<Rational> grid_step;
  int window = 3;
  Rational sample_step{1, 20};
  std::optional<std::string> generator_space_file;
  std::uint64_t budget = 20'000;
  int evidence_window = 1;
  Rational evidence_step{1, 4};
  std::vector<PointSpec> points;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws ParseError on unknown keys, non-exact numbers or malformed values.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::json to_json(const ExperimentConfig& config);

/// Throws DomainError when the point is outside its leg, or its delta
/// differs from `family_delta`.
GeodesicPoint resolve_point(const PointSpec& spec, const Rational& family_delta);

/// Generator space named by the config (resolved relative to `base_dir`), or
/// the two-point space.
GeneratorSpace load_generator(const ExperimentConfig& config, const std::string& base_dir);

}  // namespace ghgeo::cli
