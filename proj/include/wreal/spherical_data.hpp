#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wreal/root_system.hpp"

namespace wreal {

/// An element of A: its pairings with the spherical roots (same order as
/// `SphericalSystem::sigma`) and the simple spherical roots that own it.
struct AElement {
  std::vector<int> pairings;
  NodeSet owners;

  bool operator==(const AElement&) const = default;
  auto operator<=>(const AElement&) const = default;
};

/// Spherical system (S^p, Sigma, A) of a wonderful variety.
struct SphericalSystem {
  std::shared_ptr<const RootSystem> root_system;
  NodeSet sp;
  std::vector<RootVector> sigma;
  std::vector<AElement> a;
  bool spherically_closed = false;
  /// Whether every point has a self-normalizing stabilizer; unset when unknown.
  std::optional<bool> strict;

  int rank() const { return static_cast<int>(sigma.size()); }
};

/// Every violated invariant, as a message; empty means valid. Luna's full
/// axiom system is not checked.
std::vector<std::string> validate_system(const SphericalSystem& sys);

/// Image under a diagram automorphism. Spherical roots keep their positions,
/// so A-element pairings are carried over unchanged.
SphericalSystem apply_epsilon(const DiagramAutomorphism& eps, const SphericalSystem& sys);

/// Result of a stability test: the unmatched elements, in input order.
struct StabilityCheck {
  bool stable = true;
  std::vector<Witness> witnesses;
};

/// Equality as (set, set, multiset) data: the order of spherical roots and
/// A-elements is irrelevant.
bool same_system(const SphericalSystem& x, const SphericalSystem& y);

/// Stability of (S^p, Sigma, A) under eps. Spherical roots are checked first,
/// then S^p, then A.
StabilityCheck is_epsilon_stable(const DiagramAutomorphism& eps, const SphericalSystem& sys);

NodeSet support(std::span<const RootVector> roots);

/// G-orbit closure X_I, I a subset of {1..r}: bit k of index_set is root k.
struct OrbitDescriptor {
  NodeSet index_set;
  std::vector<RootVector> sigma_sub;
  NodeSet s_sub;
};

inline constexpr int kMaxOrbitRank = 20;

/// All 2^r descriptors in increasing bitmask order of I (open orbit first,
/// closed orbit last). Throws SizeLimit for r > kMaxOrbitRank.
std::vector<OrbitDescriptor> orbit_closures(const SphericalSystem& sys);

/// A color of the wonderful variety, recovered from its spherical system.
struct SystemColor {
  std::string kind;          // "a", "a'" or "b"
  NodeSet moved;
  std::vector<int> rho;      // pairings with the spherical roots
  Weight weight;             // B-weight of the defining equation
};

/// Colors by Luna's recipe: one per A-element (type a); one per alpha with
/// 2 alpha in Sigma (type a', weight 2 omega_alpha); and one per class of the
/// remaining non-parabolic simple roots (type b), where orthogonal alpha,
/// beta with alpha + beta in Sigma share a color.
std::vector<SystemColor> colors(const SphericalSystem& sys);

/// omega_X: the B-weight of the sum of all colors.
Weight color_weight_sum(const SphericalSystem& sys);

// ---------------------------------------------------------------------------
// Luna-Vust invariants of an arbitrary spherical homogeneous space.

struct ColorDatum {
  /// rho_D on the lattice basis, i.e. coordinates in the dual basis.
  std::vector<int> rho;
  NodeSet moved;

  bool operator==(const ColorDatum&) const = default;
  auto operator<=>(const ColorDatum&) const = default;
};

struct LunaVustDatum {
  std::shared_ptr<const RootSystem> root_system;
  std::vector<Weight> lattice_basis;
  /// Generators of the valuation cone, in the dual basis of lattice_basis.
  std::vector<std::vector<int>> valuation_generators;
  std::vector<ColorDatum> colors;

  int lattice_rank() const { return static_cast<int>(lattice_basis.size()); }
};

std::vector<std::string> validate_datum(const LunaVustDatum& d);

/// The image lattice has basis eps(b_k); functionals keep their coordinates
/// with respect to the transported basis.
LunaVustDatum apply_epsilon_lv(const DiagramAutomorphism& eps, const LunaVustDatum& d);

/// Equality of lattices, valuation cones (as sets of rays) and colors (as a
/// multiset of (rho, moved) pairs, rho compared after identifying lattices).
StabilityCheck compare_data(const LunaVustDatum& base, const LunaVustDatum& image);

StabilityCheck is_epsilon_stable_lv(const DiagramAutomorphism& eps, const LunaVustDatum& d);

/// Whether the valuation cone is generated by a basis of V (simplicial and
/// strictly convex, full dimension). The rank-0 datum counts as wonderful.
bool has_wonderful_cone(const LunaVustDatum& d);

/// Datum of the wonderful variety: lattice spanned by Sigma, valuation cone
/// {v : v(gamma) <= 0}, colors as in colors().
LunaVustDatum luna_vust_from_system(const SphericalSystem& sys);

/// G/B^-: trivial lattice and cone, one color moved by each simple root.
LunaVustDatum flag_variety_datum(std::shared_ptr<const RootSystem> rs);

// ---------------------------------------------------------------------------
// Weight monoids of affine spherical spaces.

struct WeightMonoid {
  std::shared_ptr<const RootSystem> root_system;
  std::vector<Weight> generators;
};

/// Dominance and minimality (no generator is a nonnegative integer
/// combination of the others).
std::vector<std::string> validate_monoid(const WeightMonoid& m);

/// Throws InvalidInput if the generators are not minimal.
StabilityCheck is_epsilon_stable_monoid(const DiagramAutomorphism& eps, const WeightMonoid& m);

}  // namespace wreal
