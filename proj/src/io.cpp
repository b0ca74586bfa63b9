#include "wreal/io.hpp"

#include <fstream>
#include <sstream>

namespace wreal {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, source + ": field '" + field + "' " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& source,
                    const std::string& prefix = "") {
  if (!obj.is_object() || !obj.contains(key)) fail(source, prefix + key, "is missing");
  return obj.at(key);
}

int get_int(const json& v, const std::string& source, const std::string& field) {
  if (!v.is_number_integer()) fail(source, field, "must be an integer");
  return v.get<int>();
}

std::vector<int> get_ints(const json& v, const std::string& source, const std::string& field,
                          int expected_size = -1) {
  if (!v.is_array()) fail(source, field, "must be an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    out.push_back(get_int(v[k], source, field + "[" + std::to_string(k) + "]"));
  if (expected_size >= 0 && static_cast<int>(out.size()) != expected_size)
    fail(source, field, "must have " + std::to_string(expected_size) + " entries");
  return out;
}

NodeSet get_nodes(const json& v, int rank, const std::string& source, const std::string& field) {
  NodeSet s;
  for (int node : get_ints(v, source, field)) {
    if (node < 1 || node > rank) fail(source, field, "has node " + std::to_string(node) + " out of range");
    s.insert(node - 1);
  }
  return s;
}

std::vector<int> nodes_json(NodeSet s) {
  auto v = s.indices();
  for (int& x : v) ++x;
  return v;
}

std::shared_ptr<const RootSystem> get_root_system(const json& doc, const std::string& source) {
  const auto& type = require(doc, "type", source);
  if (!type.is_string() || type.get<std::string>().size() != 1)
    fail(source, "type", "must be a single letter");
  int rank = get_int(require(doc, "rank", source), source, "rank");
  try {
    return root_system(type.get<std::string>()[0], rank);
  } catch (const Error& e) {
    fail(source, "type", std::string("is invalid: ") + e.what());
  }
}

SphericalSystem parse_system(const json& doc, const std::string& source) {
  SphericalSystem sys;
  sys.root_system = get_root_system(doc, source);
  const int n = sys.root_system->rank();
  sys.sp = get_nodes(require(doc, "sp", source), n, source, "sp");
  const auto& sigma = require(doc, "sigma", source);
  if (!sigma.is_array()) fail(source, "sigma", "must be an array");
  for (std::size_t k = 0; k < sigma.size(); ++k)
    sys.sigma.emplace_back(get_ints(sigma[k], source, "sigma[" + std::to_string(k) + "]", n));
  if (doc.contains("a")) {
    const auto& a = doc["a"];
    if (!a.is_array()) fail(source, "a", "must be an array");
    for (std::size_t k = 0; k < a.size(); ++k) {
      std::string where = "a[" + std::to_string(k) + "]";
      AElement e;
      e.pairings = get_ints(require(a[k], "pairings", source, where + "."), source,
                            where + ".pairings", sys.rank());
      e.owners = get_nodes(require(a[k], "owners", source, where + "."), n, source, where + ".owners");
      sys.a.push_back(std::move(e));
    }
  }
  const auto& closed = require(doc, "spherically_closed", source);
  if (!closed.is_boolean()) fail(source, "spherically_closed", "must be a boolean");
  sys.spherically_closed = closed.get<bool>();
  if (doc.contains("strict") && !doc["strict"].is_null()) {
    if (!doc["strict"].is_boolean()) fail(source, "strict", "must be a boolean");
    sys.strict = doc["strict"].get<bool>();
  }
  auto bad = validate_system(sys);
  if (!bad.empty()) throw Error(ErrorKind::InvalidInput, source + ": " + bad.front());
  return sys;
}

LunaVustDatum parse_datum(const json& doc, const std::string& source) {
  LunaVustDatum d;
  d.root_system = get_root_system(doc, source);
  const int n = d.root_system->rank();
  const auto& basis = require(doc, "lattice_basis", source);
  if (!basis.is_array()) fail(source, "lattice_basis", "must be an array");
  for (std::size_t k = 0; k < basis.size(); ++k)
    d.lattice_basis.emplace_back(get_ints(basis[k], source, "lattice_basis[" + std::to_string(k) + "]", n));
  const int r = d.lattice_rank();
  const auto& gens = require(doc, "valuation_generators", source);
  if (!gens.is_array()) fail(source, "valuation_generators", "must be an array");
  for (std::size_t k = 0; k < gens.size(); ++k)
    d.valuation_generators.push_back(
        get_ints(gens[k], source, "valuation_generators[" + std::to_string(k) + "]", r));
  const auto& colors = require(doc, "colors", source);
  if (!colors.is_array()) fail(source, "colors", "must be an array");
  for (std::size_t k = 0; k < colors.size(); ++k) {
    std::string where = "colors[" + std::to_string(k) + "]";
    ColorDatum c;
    c.rho = get_ints(require(colors[k], "rho", source, where + "."), source, where + ".rho", r);
    c.moved = get_nodes(require(colors[k], "moved", source, where + "."), n, source, where + ".moved");
    d.colors.push_back(std::move(c));
  }
  auto bad = validate_datum(d);
  if (!bad.empty()) throw Error(ErrorKind::InvalidInput, source + ": " + bad.front());
  return d;
}

WeightMonoid parse_monoid(const json& doc, const std::string& source) {
  WeightMonoid m;
  m.root_system = get_root_system(doc, source);
  const int n = m.root_system->rank();
  const auto& gens = require(doc, "generators", source);
  if (!gens.is_array()) fail(source, "generators", "must be an array");
  for (std::size_t k = 0; k < gens.size(); ++k)
    m.generators.emplace_back(get_ints(gens[k], source, "generators[" + std::to_string(k) + "]", n));
  auto bad = validate_monoid(m);
  if (!bad.empty()) throw Error(ErrorKind::InvalidInput, source + ": " + bad.front());
  return m;
}

json header(const char* kind, const RootSystem& rs) {
  return json{{"kind", kind},
              {"version", kFileFormatVersion},
              {"type", std::string(1, rs.type_letter())},
              {"rank", rs.rank()}};
}

}  // namespace

InputData parse_input(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C".
    throw Error(ErrorKind::InvalidInput, source + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::InvalidInput, source + ": top level must be an object");
  if (doc.contains("version") && get_int(doc["version"], source, "version") != kFileFormatVersion)
    fail(source, "version", "is not supported");
  std::string kind = "spherical_system";
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) fail(source, "kind", "must be a string");
    kind = doc["kind"].get<std::string>();
  }
  InputData in;
  in.source = source;
  if (kind == "spherical_system") {
    in.kind = FixtureKind::SphericalSystem;
    in.system = parse_system(doc, source);
    if (doc.contains("omega_x") && !doc["omega_x"].is_null())
      in.omega_x = Weight(get_ints(doc["omega_x"], source, "omega_x", in.system->root_system->rank()));
  } else if (kind == "luna_vust") {
    in.kind = FixtureKind::LunaVust;
    in.datum = parse_datum(doc, source);
  } else if (kind == "weight_monoid") {
    in.kind = FixtureKind::WeightMonoid;
    in.monoid = parse_monoid(doc, source);
  } else {
    fail(source, "kind", "must be spherical_system, luna_vust or weight_monoid");
  }
  return in;
}

InputData load_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << file.rdbuf();
  return parse_input(buf.str(), path);
}

InputData input_from_fixture(const Fixture& f) {
  InputData in;
  in.kind = f.kind;
  in.system = f.system;
  in.datum = f.datum;
  in.monoid = f.monoid;
  in.omega_x = f.omega_x;
  in.source = "fixture:" + f.name;
  return in;
}

json to_json(const SphericalSystem& sys) {
  json doc = header("spherical_system", *sys.root_system);
  doc["sp"] = nodes_json(sys.sp);
  doc["sigma"] = json::array();
  for (const auto& g : sys.sigma) doc["sigma"].push_back(g.coords);
  doc["a"] = json::array();
  for (const auto& e : sys.a)
    doc["a"].push_back({{"pairings", e.pairings}, {"owners", nodes_json(e.owners)}});
  doc["spherically_closed"] = sys.spherically_closed;
  doc["strict"] = sys.strict ? json(*sys.strict) : json(nullptr);
  return doc;
}

json to_json(const LunaVustDatum& d) {
  json doc = header("luna_vust", *d.root_system);
  doc["lattice_basis"] = json::array();
  for (const auto& b : d.lattice_basis) doc["lattice_basis"].push_back(b.coords);
  doc["valuation_generators"] = json::array();
  for (const auto& v : d.valuation_generators) doc["valuation_generators"].push_back(v);
  doc["colors"] = json::array();
  for (const auto& c : d.colors) doc["colors"].push_back({{"rho", c.rho}, {"moved", nodes_json(c.moved)}});
  return doc;
}

json to_json(const WeightMonoid& m) {
  json doc = header("weight_monoid", *m.root_system);
  doc["generators"] = json::array();
  for (const auto& g : m.generators) doc["generators"].push_back(g.coords);
  return doc;
}

json to_json(const InputData& in) {
  switch (in.kind) {
    case FixtureKind::SphericalSystem: {
      json doc = to_json(*in.system);
      if (in.omega_x) doc["omega_x"] = in.omega_x->coords;
      return doc;
    }
    case FixtureKind::LunaVust: return to_json(*in.datum);
    case FixtureKind::WeightMonoid: return to_json(*in.monoid);
  }
  return json();
}

}  // namespace wreal
