#include "config.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include "ghgeo/errors.hpp"

namespace ghgeo::cli {
namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& key) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("config field '" + key + "': " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("config field '" + key + "' must be a \"p/q\" string or an integer");
}

std::int64_t integer_field(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ParseError("config field '" + key + "' must be an integer");
  return j.get<std::int64_t>();
}

PointSpec parse_point(const json& j) {
  if (!j.is_object()) throw ParseError("each entry of 'points' must be an object");
  PointSpec spec;
  for (const auto& [key, value] : j.items()) {
    if (key == "leg") {
      if (!value.is_string()) throw ParseError("point 'leg' must be a string");
      spec.leg = value.get<std::string>();
    } else if (key == "d" || key == "t") {
      spec.value = rational_field(value, key);
    } else if (key == "delta") {
      spec.delta = rational_field(value, key);
    } else {
      throw ParseError("unknown point field '" + key + "'");
    }
  }
  if (spec.leg != "real" && spec.leg != "product" && spec.leg != "lattice") {
    throw ParseError("point 'leg' must be one of real, product, lattice");
  }
  if (spec.leg != "real" && !spec.value) {
    throw ParseError("point on the " + spec.leg + " leg needs '" +
                     (spec.leg == "product" ? "d" : "t") + "'");
  }
  return spec;
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  ExperimentConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "delta") {
      c.delta = rational_field(value, key);
    } else if (key == "grid_step") {
      c.grid_step = rational_field(value, key);
    } else if (key == "window") {
      c.window = static_cast<int>(integer_field(value, key));
    } else if (key == "sample_step") {
      c.sample_step = rational_field(value, key);
    } else if (key == "generator_space_file") {
      if (value.is_null()) continue;
      if (!value.is_string()) throw ParseError("'generator_space_file' must be a string");
      c.generator_space_file = value.get<std::string>();
    } else if (key == "budget") {
      const auto b = integer_field(value, key);
      if (b < 0) throw ParseError("'budget' must be nonnegative");
      c.budget = static_cast<std::uint64_t>(b);
    } else if (key == "evidence_window") {
      c.evidence_window = static_cast<int>(integer_field(value, key));
    } else if (key == "evidence_step") {
      c.evidence_step = rational_field(value, key);
    } else if (key == "points") {
      if (!value.is_array()) throw ParseError("'points' must be an array");
      for (const auto& p : value) c.points.push_back(parse_point(p));
    } else {
      throw ParseError("unknown config field '" + key + "'");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("config '" + path + "': " + e.what());
  }
  return parse_config(j);
}

json to_json(const ExperimentConfig& c) {
  json j;
  j["delta"] = c.delta.str();
  if (c.grid_step) j["grid_step"] = c.grid_step->str();
  j["window"] = c.window;
  j["sample_step"] = c.sample_step.str();
  if (c.generator_space_file) j["generator_space_file"] = *c.generator_space_file;
  j["budget"] = c.budget;
  j["evidence_window"] = c.evidence_window;
  j["evidence_step"] = c.evidence_step.str();
  if (!c.points.empty()) {
    json points = json::array();
    for (const auto& p : c.points) {
      json e;
      e["leg"] = p.leg;
      if (p.value) e[p.leg == "product" ? "d" : "t"] = p.value->str();
      if (p.delta) e["delta"] = p.delta->str();
      points.push_back(std::move(e));
    }
    j["points"] = std::move(points);
  }
  return j;
}

GeodesicPoint resolve_point(const PointSpec& spec, const Rational& family_delta) {
  const Rational delta = spec.delta.value_or(family_delta);
  if (delta != family_delta) {
    throw DomainError("point delta " + delta.str() + " does not match the family delta " +
                      family_delta.str());
  }
  if (spec.leg == "real") return GeodesicPoint::real_line(delta);
  if (spec.leg == "product") return GeodesicPoint::real_product(*spec.value, delta);
  return GeodesicPoint::thick_lattice(*spec.value, delta);
}

GeneratorSpace load_generator(const ExperimentConfig& config, const std::string& base_dir) {
  if (!config.generator_space_file) return GeneratorSpace::two_point();
  std::filesystem::path path(*config.generator_space_file);
  if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
  return GeneratorSpace(load_metric_space(path.string()));
}

}  // namespace ghgeo::cli
