// Seeded generators for property tests.
#pragma once

#include <random>

#include "wreal/spherical_data.hpp"

namespace testdata {

/// A random simple type of rank at most max_rank.
std::shared_ptr<const wreal::RootSystem> random_root_system(std::mt19937& gen, int max_rank = 8);

/// A valid spherically closed system whose spherical roots are non-simple
/// positive roots (so A is empty).
wreal::SphericalSystem random_system(std::mt19937& gen, std::shared_ptr<const wreal::RootSystem> rs);

/// A valid Luna-Vust datum with small random entries.
wreal::LunaVustDatum random_datum(std::mt19937& gen, std::shared_ptr<const wreal::RootSystem> rs);

wreal::DiagramAutomorphism random_automorphism(std::mt19937& gen, const wreal::RootSystem& rs);

}  // namespace testdata
