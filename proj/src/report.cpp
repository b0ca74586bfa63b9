#include "report.hpp"

namespace wreal::report {

using nlohmann::json;

namespace {

std::vector<int> nodes_json(NodeSet s) {
  auto v = s.indices();
  for (int& x : v) ++x;
  return v;
}

json witness_json(const Witness& w) {
  return {{"kind", w.kind}, {"from", w.from}, {"to", w.to}, {"text", w.text}};
}

json epsilon_json(const DiagramAutomorphism& eps) {
  std::vector<int> images;
  for (int i = 0; i < eps.rank(); ++i) images.push_back(eps(i) + 1);
  return {{"images", images}, {"cycles", eps.to_string()}};
}

// "1:o 2:x 3:o 4:o (3 4)": white o, black x, then the arrows.
std::string diagram_text(const SatakeDiagram& sd) {
  std::string out;
  for (int i = 0; i < sd.rank(); ++i) {
    if (i) out += ' ';
    out += std::to_string(i + 1) + (sd.black.contains(i) ? ":x" : ":o");
  }
  for (int i = 0; i < sd.rank(); ++i)
    if (!sd.black.contains(i) && sd.omega[i] > i)
      out += " (" + std::to_string(i + 1) + " " + std::to_string(sd.omega[i] + 1) + ")";
  return out;
}

json form_json(const SatakeDiagram& sd) {
  json arrows = json::array();
  for (int i = 0; i < sd.rank(); ++i)
    if (!sd.black.contains(i) && sd.omega[i] > i) arrows.push_back({i + 1, sd.omega[i] + 1});
  return {{"name", sd.name},
          {"aliases", sd.aliases},
          {"black_nodes", nodes_json(sd.black)},
          {"omega", arrows},
          {"epsilon", epsilon_json(epsilon_sigma(sd))},
          {"diagram", diagram_text(sd)},
          {"index_coweight", sd.index_coweight}};
}

json catalog_json(const SatakeCatalog& catalog) {
  return {{"source", catalog.source()}, {"version", catalog.version()}};
}

const RootSystem& input_root_system(const InputData& in) {
  switch (in.kind) {
    case FixtureKind::SphericalSystem: return *in.system->root_system;
    case FixtureKind::LunaVust: return *in.datum->root_system;
    case FixtureKind::WeightMonoid: return *in.monoid->root_system;
  }
  throw Error(ErrorKind::InvalidInput, "empty input");
}

json input_json(const InputData& in) {
  return {{"source", in.source},
          {"kind", to_string(in.kind)},
          {"type", input_root_system(in).name()},
          {"data", to_json(in)}};
}

json error_json(const Error& e) {
  return {{"error", to_string(e.kind())}, {"message", e.what()}};
}

}  // namespace

json verdict_json(const Verdict& v) {
  json reasons = json::array();
  for (const auto& r : v.reasons) {
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
    reasons.push_back({{"criterion", r.criterion}, {"condition", r.condition}, {"witnesses", ws}});
  }
  return {{"answer", to_string(v.answer)},
          {"reasons", reasons},
          {"uniqueness_note", v.uniqueness_note ? json(*v.uniqueness_note) : json(nullptr)}};
}

json forms(const SatakeCatalog& catalog, const std::string& type_rank) {
  auto rs = parse_root_system(type_rank);
  json list = json::array();
  for (const auto& sd : catalog.forms(*rs)) list.push_back(form_json(sd));
  return {{"command", "forms"}, {"type", rs->name()}, {"catalog", catalog_json(catalog)}, {"forms", list}};
}

json check(const SatakeCatalog& catalog, const InputData& input, const std::string& form) {
  const auto& rs = input_root_system(input);
  const auto& sd = catalog.find(rs, form);
  Verdict v;
  std::string criterion;
  switch (input.kind) {
    case FixtureKind::SphericalSystem:
      v = real_structure_exists(*input.system, sd);
      criterion = "real_structure_exists";
      break;
    case FixtureKind::LunaVust:
      v = conjugate_general(*input.datum, sd);
      criterion = "conjugate_general";
      break;
    case FixtureKind::WeightMonoid:
      v = conjugate_affine(*input.monoid, sd);
      criterion = "conjugate_affine";
      break;
  }
  return {{"command", "check"},
          {"catalog", catalog_json(catalog)},
          {"input", input_json(input)},
          {"form", form_json(sd)},
          {"criterion", criterion},
          {"verdict", verdict_json(v)}};
}

json orbits(const SatakeCatalog& catalog, const InputData& input, const std::string& form) {
  if (input.kind != FixtureKind::SphericalSystem)
    throw Error(ErrorKind::InvalidInput, "orbits needs a spherical system, got " +
                                             std::string(to_string(input.kind)));
  const auto& sys = *input.system;
  const auto& sd = catalog.find(*sys.root_system, form);
  auto structure = real_structure_exists(sys, sd);
  if (structure.answer != Answer::Yes) {
    std::string why = structure.reasons.front().witnesses.empty()
                          ? std::string()
                          : ": " + structure.reasons.front().witnesses.front().text;
    throw Error(ErrorKind::Inapplicable,
                "no sigma-equivariant real structure for '" + sd.name + "'" + why);
  }
  auto filter = real_point_orbit_filter(sys, sd);
  json rows = json::array();
  for (const auto& row : filter.rows) {
    json sigma = json::array();
    for (const auto& g : row.orbit.sigma_sub) sigma.push_back(g.coords);
    std::vector<int> index;
    for (int k : row.orbit.index_set.indices()) index.push_back(k + 1);
    rows.push_back({{"index_set", index},
                    {"sigma_sub", sigma},
                    {"s_sub", nodes_json(row.orbit.s_sub)},
                    {"sigma_stable", row.sigma_stable},
                    {"contains_black", row.contains_black},
                    {"candidate", row.candidate()}});
  }
  json obstruction;
  try {
    obstruction = verdict_json(cartan_index_obstruction(sys, sd, input.omega_x));
  } catch (const Error& e) {
    obstruction = error_json(e);
  }
  return {{"command", "orbits"},
          {"catalog", catalog_json(catalog)},
          {"input", input_json(input)},
          {"form", form_json(sd)},
          {"real_structure", verdict_json(structure)},
          {"orbits", rows},
          {"filter", verdict_json(filter.verdict)},
          {"caveat", "candidate orbits satisfy necessary conditions only and may contain no real point"},
          {"omega_x", omega_x(sys, input.omega_x).coords},
          {"guaranteed", verdict_json(guaranteed_real_points(sys, sd))},
          {"obstruction", obstruction}};
}

json scan(const SatakeCatalog& catalog, int n_max) {
  auto report = scan_d_families(n_max, catalog);
  json rows = json::array();
  json failures = json::array();
  json unexpected = json::array();
  for (const auto& r : report.rows) {
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
    json row = {{"fixture", r.fixture},
                {"form", r.form},
                {"stable", r.stable},
                {"expected_failure", r.expected_failure},
                {"labeling_reconciled", r.labeling_reconciled},
                {"witnesses", ws}};
    if (!r.stable) failures.push_back({{"fixture", r.fixture}, {"form", r.form}});
    if (r.stable == r.expected_failure) unexpected.push_back({{"fixture", r.fixture}, {"form", r.form}});
    rows.push_back(std::move(row));
  }
  return {{"command", "scan"},
          {"catalog", catalog_json(catalog)},
          {"n_max", n_max},
          {"expected", "failures exactly for so(p,q) with p and q odd on the D-type families"},
          {"rows", rows},
          {"failures", failures},
          {"unexpected", unexpected},
          {"matches_expected", report.matches_expected()}};
}

json fixtures() {
  json list = json::array();
  for (const auto& f : fixture_catalog()) {
    const auto in = input_from_fixture(f);
    list.push_back({{"name", f.name},
                    {"kind", to_string(f.kind)},
                    {"type", input_root_system(in).name()},
                    {"description", f.description},
                    {"data_note", f.data_note},
                    {"labeling_reconciled", f.labeling_reconciled},
                    {"relabel", f.relabel ? json(f.relabel->to_string()) : json(nullptr)}});
  }
  return {{"command", "fixtures"},
          {"fixtures", list},
          {"generated", {"rank0-<type>", "GBminus-<type>"}}};
}

}  // namespace wreal::report
