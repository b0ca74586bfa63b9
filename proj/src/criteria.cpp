#include "wreal/criteria.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "linalg.hpp"

namespace wreal {

namespace {

std::vector<int> one_based(NodeSet s) {
  auto v = s.indices();
  for (int& x : v) ++x;
  return v;
}

void require_valid(const SphericalSystem& sys) {
  auto bad = validate_system(sys);
  if (!bad.empty()) throw Error(ErrorKind::InvalidInput, "spherical system: " + bad.front());
}

Verdict from_stability(const StabilityCheck& check, std::string criterion, std::string condition) {
  Verdict v;
  v.answer = check.stable ? Answer::Yes : Answer::No;
  v.reasons.push_back({std::move(criterion), std::move(condition), check.witnesses});
  return v;
}

// Integer vector on the same ray as a rational one.
std::vector<int> clear_denominators(const linalg::RatVector& v) {
  long long l = 1;
  for (const auto& x : v) l = std::lcm(l, x.denominator());
  std::vector<int> out;
  for (const auto& x : v) out.push_back(static_cast<int>(x.numerator() * (l / x.denominator())));
  return out;
}

}  // namespace

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Undetermined: return "undetermined";
  }
  return "unknown";
}

Verdict conjugate_general(const LunaVustDatum& d, const SatakeDiagram& sd) {
  auto bad = validate_datum(d);
  if (!bad.empty()) throw Error(ErrorKind::InvalidInput, "Luna-Vust datum: " + bad.front());
  return from_stability(is_epsilon_stable_lv(epsilon_sigma(sd), d), "conjugacy.luna_vust",
                        "lattice, valuation cone and colors are epsilon-stable");
}

Verdict conjugate_affine(const WeightMonoid& m, const SatakeDiagram& sd) {
  return from_stability(is_epsilon_stable_monoid(epsilon_sigma(sd), m), "conjugacy.weight_monoid",
                        "the weight monoid is epsilon-stable");
}

bool wonderfulness_preserved(const LunaVustDatum& d, const DiagramAutomorphism& eps) {
  const bool before = has_wonderful_cone(d);
  LunaVustDatum image = apply_epsilon_lv(eps, d);

  std::vector<std::vector<int>> base, moved;
  for (const auto& b : d.lattice_basis) base.push_back(b.coords);
  for (const auto& b : image.lattice_basis) moved.push_back(b.coords);
  std::vector<std::vector<int>> columns;
  for (const auto& b : moved)
    if (auto c = linalg::lattice_coords(base, b)) columns.push_back(*c);
  const int r = d.lattice_rank();
  if (static_cast<int>(columns.size()) == r && r > 0) {
    std::vector<std::vector<int>> m_rows(r, std::vector<int>(r));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m_rows[j][k] = columns[k][j];
    LunaVustDatum rebased;
    rebased.root_system = d.root_system;
    rebased.lattice_basis = d.lattice_basis;
    for (const auto& w : image.valuation_generators) {
      auto u = linalg::solve_transposed(m_rows, w);
      if (!u) return false;
      rebased.valuation_generators.push_back(clear_denominators(*u));
    }
    return before == has_wonderful_cone(rebased);
  }
  return before == has_wonderful_cone(image);
}

Verdict real_structure_exists(const SphericalSystem& sys, const SatakeDiagram& sd) {
  require_valid(sys);
  if (!sys.spherically_closed)
    throw Error(ErrorKind::Inapplicable,
                "the system is not marked spherically closed; stability is then only necessary");
  auto v = from_stability(is_epsilon_stable(epsilon_sigma(sd), sys),
                          "real_structure.spherical_system",
                          "S^p, Sigma and A are epsilon-stable");
  if (v.answer == Answer::Yes)
    v.uniqueness_note = "the sigma-equivariant real structure is unique";
  return v;
}

FlagPoint flag_real_point(NodeSet J, const SatakeDiagram& sd) {
  FlagPoint out;
  out.structure_defined = epsilon_sigma(sd).apply(J) == J;
  out.contains_black = sd.black.subset_of(J);
  return out;
}

std::vector<OrbitDescriptor> OrbitFilter::candidates() const {
  std::vector<OrbitDescriptor> out;
  for (const auto& row : rows)
    if (row.candidate()) out.push_back(row.orbit);
  return out;
}

OrbitFilter real_point_orbit_filter(const SphericalSystem& sys, const SatakeDiagram& sd) {
  if (real_structure_exists(sys, sd).answer != Answer::Yes)
    throw Error(ErrorKind::Inapplicable, "no sigma-equivariant real structure for '" + sd.name + "'");
  const auto eps = epsilon_sigma(sd);
  OrbitFilter out;
  for (auto& orbit : orbit_closures(sys)) {
    OrbitRow row;
    row.sigma_stable = std::all_of(orbit.sigma_sub.begin(), orbit.sigma_sub.end(), [&](const auto& g) {
      return std::find(orbit.sigma_sub.begin(), orbit.sigma_sub.end(), eps.apply(g)) !=
             orbit.sigma_sub.end();
    });
    row.contains_black = sd.black.subset_of(orbit.s_sub);
    row.orbit = std::move(orbit);
    out.rows.push_back(std::move(row));
  }

  Reason reason{"real_points.orbit_filter",
                "Sigma_I is epsilon-stable and S_0 is contained in S_I (necessary only)",
                {}};
  std::size_t passing = 0;
  for (const auto& row : out.rows) {
    if (row.candidate()) {
      ++passing;
      continue;
    }
    std::string text = "orbit I=" + format_nodes(row.orbit.index_set) + " excluded:";
    if (!row.sigma_stable) text += " Sigma_I not stable;";
    if (!row.contains_black)
      text += " black nodes " + format_nodes(sd.black.minus(row.orbit.s_sub)) + " outside S_I;";
    text.pop_back();
    reason.witnesses.push_back(
        {"orbit", one_based(row.orbit.index_set), one_based(row.orbit.s_sub), text});
  }
  out.verdict.answer = passing == 0 ? Answer::No : Answer::Undetermined;
  out.verdict.reasons.push_back(std::move(reason));
  return out;
}

Verdict guaranteed_real_points(const SphericalSystem& sys, const SatakeDiagram& sd) {
  if (real_structure_exists(sys, sd).answer != Answer::Yes)
    throw Error(ErrorKind::Inapplicable, "no sigma-equivariant real structure for '" + sd.name + "'");
  Verdict v;
  Reason reason{"real_points.guaranteed", "S_0 is contained in S^p (sufficient only)", {}};
  NodeSet missing = sd.black.minus(sys.sp);
  for (int i : missing.indices())
    reason.witnesses.push_back(
        {"black_node", {i + 1}, {}, "black node a" + std::to_string(i + 1) + " is not in S^p"});
  v.answer = missing.empty() ? Answer::Yes : Answer::No;
  v.reasons.push_back(std::move(reason));
  return v;
}

Weight omega_x(const SphericalSystem& sys, const std::optional<Weight>& override_weight) {
  return override_weight ? *override_weight : color_weight_sum(sys);
}

Verdict cartan_index_obstruction(const SphericalSystem& sys, const SatakeDiagram& sd,
                                 const std::optional<Weight>& override_weight) {
  if (!sys.strict.has_value())
    throw Error(ErrorKind::Inapplicable, "strictness of the system is unknown");
  if (!*sys.strict)
    throw Error(ErrorKind::Inapplicable, "the system is not strict");
  if (real_structure_exists(sys, sd).answer != Answer::Yes)
    throw Error(ErrorKind::Inapplicable, "no sigma-equivariant real structure for '" + sd.name + "'");
  Weight w = omega_x(sys, override_weight);
  int index = cartan_index(sd, w);
  Verdict v;
  Reason reason{"real_points.cartan_index",
                "the simple module of highest weight omega_X has Cartan index +1", {}};
  std::string text = "Cartan index of V(" + format_weight(w) + ") is " + (index > 0 ? "+1" : "-1");
  reason.witnesses.push_back({"cartan_index", w.coords, {index}, text});
  v.answer = index < 0 ? Answer::No : Answer::Undetermined;
  v.reasons.push_back(std::move(reason));
  return v;
}

bool is_odd_signature(const SatakeDiagram& sd) {
  auto odd = [](const std::string& id) {
    int p = 0, q = 0;
    char close = 0;
    if (std::sscanf(id.c_str(), "so(%d,%d%c", &p, &q, &close) != 3 || close != ')') return false;
    return p % 2 == 1 && q % 2 == 1;
  };
  if (odd(sd.name)) return true;
  return std::any_of(sd.aliases.begin(), sd.aliases.end(), odd);
}

bool ScanReport::matches_expected() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ScanRow& r) { return r.stable != r.expected_failure; });
}

ScanReport scan_d_families(int n_max, const SatakeCatalog& catalog) {
  if (n_max < 2 || n_max > 4)
    throw Error(ErrorKind::InvalidInput, "n_max must lie between 2 and 4");
  std::vector<std::string> families = {"D4-SL2Sp4", "D4-Spin7"};
  for (int n = 2; n <= n_max; ++n) families.push_back("D" + std::to_string(2 * n) + "-NGL" + std::to_string(2 * n));
  std::vector<std::string> controls;
  for (const auto& f : fixture_catalog())
    if (f.primitive && f.system && f.system->root_system->type_letter() != 'D')
      controls.push_back(f.name);

  ScanReport report;
  report.n_max = n_max;
  auto run = [&](const std::string& name, bool family) {
    const Fixture f = find_fixture(name);
    for (const auto& sd : catalog.forms(*f.system->root_system)) {
      ScanRow row;
      row.fixture = f.name;
      row.form = sd.name;
      row.labeling_reconciled = f.labeling_reconciled;
      row.expected_failure = family && is_odd_signature(sd);
      auto v = real_structure_exists(*f.system, sd);
      row.stable = v.answer == Answer::Yes;
      row.witnesses = v.reasons.front().witnesses;
      report.rows.push_back(std::move(row));
    }
  };
  for (const auto& name : families) run(name, true);
  for (const auto& name : controls) run(name, false);
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return std::tie(a.fixture, a.form) < std::tie(b.fixture, b.form);
  });
  return report;
}

}  // namespace wreal
