#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wreal/fixtures.hpp"

namespace wreal {

inline constexpr int kFileFormatVersion = 1;

/// Parsed input file. Files carry a "kind" field: "spherical_system"
/// (default when absent), "luna_vust" or "weight_monoid".
struct InputData {
  FixtureKind kind = FixtureKind::SphericalSystem;
  std::optional<SphericalSystem> system;
  std::optional<LunaVustDatum> datum;
  std::optional<WeightMonoid> monoid;
  std::optional<Weight> omega_x;
  std::string source;  // file path or "fixture:<name>"
};

/// Throws Error(InvalidInput) naming the offending field; parse errors
/// report line and column.
InputData parse_input(const std::string& text, const std::string& source);
InputData load_input(const std::string& path);
InputData input_from_fixture(const Fixture& f);

nlohmann::json to_json(const SphericalSystem& sys);
nlohmann::json to_json(const LunaVustDatum& d);
nlohmann::json to_json(const WeightMonoid& m);
/// The file form of the fixture, readable by parse_input.
nlohmann::json to_json(const InputData& in);

}  // namespace wreal
