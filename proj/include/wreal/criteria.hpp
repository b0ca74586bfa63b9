#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreal/fixtures.hpp"
#include "wreal/real_form.hpp"
#include "wreal/spherical_data.hpp"

namespace wreal {

enum class Answer { Yes, No, Undetermined };

const char* to_string(Answer a);

struct Reason {
  std::string criterion;  // e.g. "real_structure.spherical_system"
  std::string condition;  // the tested condition, in words
  std::vector<Witness> witnesses;
};

/// A structured answer. `No` always carries a reason with a witness;
/// `Undetermined` comes only from necessary-condition tests.
struct Verdict {
  Answer answer = Answer::Undetermined;
  std::vector<Reason> reasons;
  std::optional<std::string> uniqueness_note;
};

/// H and sigma(H) conjugate iff the Luna-Vust invariants are eps-stable.
Verdict conjugate_general(const LunaVustDatum& d, const SatakeDiagram& sd);

/// Affine case: iff the weight monoid is eps-stable. Throws InvalidInput for
/// non-minimal generators.
Verdict conjugate_affine(const WeightMonoid& m, const SatakeDiagram& sd);

/// Whether d and its eps-image agree on having a wonderful valuation cone.
/// The image cone is re-expressed on the original lattice basis when the two
/// lattices coincide.
bool wonderfulness_preserved(const LunaVustDatum& d, const DiagramAutomorphism& eps);

/// Throws Inapplicable unless the system is spherically closed, InvalidInput
/// if it is malformed.
Verdict real_structure_exists(const SphericalSystem& sys, const SatakeDiagram& sd);

struct FlagPoint {
  bool structure_defined = false;  // eps(J) = J
  bool contains_black = false;     // S_0 subset of J
  bool real_point() const { return structure_defined && contains_black; }
};

/// Real point on G/P^-_J for the standard structure.
FlagPoint flag_real_point(NodeSet J, const SatakeDiagram& sd);

struct OrbitRow {
  OrbitDescriptor orbit;
  bool sigma_stable = false;    // Sigma_I = eps(Sigma_I)
  bool contains_black = false;  // S_0 subset of S_I
  bool candidate() const { return sigma_stable && contains_black; }
};

struct OrbitFilter {
  std::vector<OrbitRow> rows;  // all 2^r orbits, in orbit_closures order
  Verdict verdict;             // No if no orbit passes, else Undetermined
  std::vector<OrbitDescriptor> candidates() const;
};

/// Orbits that may carry real points. Throws Inapplicable when no real
/// structure exists.
OrbitFilter real_point_orbit_filter(const SphericalSystem& sys, const SatakeDiagram& sd);

/// Yes iff S_0 is contained in S^p: every stable orbit then has real points.
Verdict guaranteed_real_points(const SphericalSystem& sys, const SatakeDiagram& sd);

/// No (no real points) when the simple module of highest weight omega_X has
/// Cartan index -1, else Undetermined. Needs a strict system; throws
/// Inapplicable otherwise, IndexUnavailable without index data.
Verdict cartan_index_obstruction(const SphericalSystem& sys, const SatakeDiagram& sd,
                                 const std::optional<Weight>& omega_x = std::nullopt);

/// omega_X of a system, honoring an explicit override.
Weight omega_x(const SphericalSystem& sys, const std::optional<Weight>& override_weight = std::nullopt);

struct ScanRow {
  std::string fixture;
  std::string form;
  bool stable = true;
  bool expected_failure = false;
  bool labeling_reconciled = false;
  std::vector<Witness> witnesses;
};

struct ScanReport {
  int n_max = 0;
  std::vector<ScanRow> rows;  // sorted by fixture, then form name
  bool matches_expected() const;
};

/// Runs real_structure_exists over the D-type families up to D_{2 n_max}
/// and the exceptional control fixtures, against every catalog form of the
/// ambient type. Failures are expected exactly for so(p,q), p and q odd, on
/// the D-type families. Throws InvalidInput unless 2 <= n_max <= 4.
ScanReport scan_d_families(int n_max, const SatakeCatalog& catalog = SatakeCatalog::builtin());

/// Whether the form is so(p,q) with p and q odd.
bool is_odd_signature(const SatakeDiagram& sd);

}  // namespace wreal
