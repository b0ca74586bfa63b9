#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreal/spherical_data.hpp"

namespace wreal {

enum class FixtureKind { SphericalSystem, LunaVust, WeightMonoid };

const char* to_string(FixtureKind kind);

/// A named test case. Exactly one of system / datum / monoid is set,
/// according to `kind`. Node labels are those of the Satake catalog.
struct Fixture {
  std::string name;
  std::string description;
  /// Which fields were transcribed and which were completed or chosen.
  std::string data_note;
  FixtureKind kind = FixtureKind::SphericalSystem;
  std::optional<SphericalSystem> system;
  std::optional<LunaVustDatum> datum;
  std::optional<WeightMonoid> monoid;
  /// Spherical roots as given, before `relabel`.
  std::vector<RootVector> original_sigma;
  /// Diagram automorphism taking the given labels to catalog labels.
  std::optional<DiagramAutomorphism> relabel;
  /// Explicit omega_X, overriding the sum of color weights.
  std::optional<Weight> omega_x;
  /// Member of the family list checked by the D-type scan.
  bool primitive = false;
  bool labeling_reconciled = false;
};

/// The static fixtures, in a fixed order.
const std::vector<Fixture>& fixture_catalog();

/// A static fixture or a generated one: "rank0-<T>" (the wonderful variety
/// G/B), "GBminus-<T>" (Luna-Vust datum of G/B^-), for any type such as A3.
/// Throws NotFound.
Fixture find_fixture(const std::string& name);

}  // namespace wreal
