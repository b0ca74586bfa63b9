#include "wreal/real_form.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wreal {

extern const char* const kBuiltinSatakeCatalog;

namespace {

// Lowercase, no blanks, and "(p,q)" with p <= q.
std::string normalize_form_id(std::string_view id) {
  std::string s;
  for (char c : id)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto open = s.find('(');
  auto comma = s.find(',', open == std::string::npos ? 0 : open);
  auto close = s.find(')', comma == std::string::npos ? 0 : comma);
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
    return s;
  std::string a = s.substr(open + 1, comma - open - 1);
  std::string b = s.substr(comma + 1, close - comma - 1);
  auto numeric = [](const std::string& x) {
    return !x.empty() && std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(c); });
  };
  if (numeric(a) && numeric(b) && std::stoi(a) > std::stoi(b))
    s = s.substr(0, open + 1) + b + "," + a + s.substr(close);
  return s;
}

}  // namespace

bool SatakeDiagram::matches(std::string_view id) const {
  auto want = normalize_form_id(id);
  if (normalize_form_id(name) == want) return true;
  return std::any_of(aliases.begin(), aliases.end(),
                     [&](const std::string& a) { return normalize_form_id(a) == want; });
}

bool SatakeDiagram::is_split() const {
  return std::find(aliases.begin(), aliases.end(), "split") != aliases.end();
}

bool SatakeDiagram::is_compact() const { return black == NodeSet::all(rank()); }

void validate_diagram(const SatakeDiagram& sd) {
  const int n = sd.rank();
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::CorruptData,
                "Satake diagram " + sd.root_system->name() + " '" + sd.name + "': " + what);
  };
  if (static_cast<int>(sd.omega.size()) != n) fail("omega has wrong length");
  if (!sd.index_coweight.empty() && static_cast<int>(sd.index_coweight.size()) != n)
    fail("index_coweight has wrong length");
  for (int i = 0; i < n; ++i) {
    if (sd.black.contains(i)) {
      if (sd.omega[i] != -1) fail("omega defined on a black node");
      continue;
    }
    int j = sd.omega[i];
    if (j < 0 || j >= n) fail("omega undefined on a white node");
    if (sd.black.contains(j)) fail("omega maps a white node to a black node");
    if (sd.omega[j] != i) fail("omega is not an involution");
  }
  auto eps = epsilon_sigma(sd);
  if (!eps.preserves(sd.root_system->cartan())) fail("epsilon is not a diagram automorphism");
  if (!eps.is_involution()) fail("epsilon is not an involution");
}

DiagramAutomorphism epsilon_sigma(const SatakeDiagram& sd) {
  const auto& rs = *sd.root_system;
  const int n = rs.rank();
  DiagramAutomorphism eps = DiagramAutomorphism::identity(n);
  WeylElement wb = longest_element(rs, sd.black);
  for (int i = 0; i < n; ++i) {
    if (!sd.black.contains(i)) {
      eps.perm[i] = sd.omega[i];
      continue;
    }
    auto img = -act(wb, RootVector::simple(n, i));
    int target = -1;
    for (int j = 0; j < n; ++j)
      if (img == RootVector::simple(n, j)) target = j;
    if (target < 0)
      throw Error(ErrorKind::CorruptData,
                  "Satake diagram '" + sd.name + "': -w_bullet does not fix the black simple roots");
    eps.perm[i] = target;
  }
  if (!eps.preserves(rs.cartan()))
    throw Error(ErrorKind::CorruptData,
                "Satake diagram '" + sd.name + "': epsilon is not a diagram automorphism");
  return eps;
}

Weight extend_to_weights(const DiagramAutomorphism& eps, const Weight& lambda) {
  return eps.apply(lambda);
}

Weight twisted_highest_weight(const SatakeDiagram& sd, const Weight& lambda) {
  if (lambda.rank() != sd.rank()) throw Error(ErrorKind::InvalidInput, "weight rank mismatch");
  if (!lambda.is_dominant())
    throw Error(ErrorKind::InvalidInput, "weight " + format_weight(lambda) + " is not dominant");
  return extend_to_weights(epsilon_sigma(sd), lambda);
}

int cartan_index(const SatakeDiagram& sd, const Weight& lambda) {
  if (twisted_highest_weight(sd, lambda) != lambda)
    throw Error(ErrorKind::NotSelfConjugate,
                "weight " + format_weight(lambda) + " is not fixed by epsilon for '" + sd.name + "'");
  if (sd.index_coweight.empty())
    throw Error(ErrorKind::IndexUnavailable, "no Cartan index data for '" + sd.name + "'");
  long long pairing = 0;
  for (int i = 0; i < sd.rank(); ++i)
    pairing += static_cast<long long>(lambda.coords[i]) * sd.index_coweight[i];
  return (pairing % 2 == 0) ? 1 : -1;
}

SatakeCatalog SatakeCatalog::from_json(const std::string& text, const std::string& source) {
  using nlohmann::json;
  SatakeCatalog cat;
  cat.source_ = source;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, source + ": " + e.what());
  }
  auto where = [&](std::size_t k, const std::string& field) {
    std::ostringstream out;
    out << source << ": forms[" << k << "]." << field;
    return out.str();
  };
  try {
    cat.version_ = doc.at("catalog_version").get<int>();
    const auto& forms = doc.at("forms");
    for (std::size_t k = 0; k < forms.size(); ++k) {
      const auto& f = forms[k];
      for (const char* field : {"type", "rank", "name", "black_nodes", "omega", "index_coweight"})
        if (!f.contains(field)) throw Error(ErrorKind::InvalidInput, where(k, field) + " is missing");
      SatakeDiagram sd;
      auto type = f["type"].get<std::string>();
      if (type.size() != 1) throw Error(ErrorKind::InvalidInput, where(k, "type") + " must be a letter");
      try {
        sd.root_system = root_system(type[0], f["rank"].get<int>());
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidInput, where(k, "type") + ": " + e.what());
      }
      const int n = sd.rank();
      sd.name = f["name"].get<std::string>();
      if (f.contains("aliases")) sd.aliases = f["aliases"].get<std::vector<std::string>>();
      for (int node : f["black_nodes"].get<std::vector<int>>()) {
        if (node < 1 || node > n) throw Error(ErrorKind::InvalidInput, where(k, "black_nodes") + " out of range");
        sd.black.insert(node - 1);
      }
      sd.omega.assign(n, -1);
      for (int i = 0; i < n; ++i)
        if (!sd.black.contains(i)) sd.omega[i] = i;
      for (const auto& pair : f["omega"]) {
        auto p = pair.get<std::vector<int>>();
        if (p.size() != 2 || p[0] < 1 || p[0] > n || p[1] < 1 || p[1] > n)
          throw Error(ErrorKind::InvalidInput, where(k, "omega") + " must hold node pairs");
        sd.omega[p[0] - 1] = p[1] - 1;
        sd.omega[p[1] - 1] = p[0] - 1;
        if (sd.black.contains(p[0] - 1) || sd.black.contains(p[1] - 1))
          throw Error(ErrorKind::CorruptData, where(k, "omega") + " touches a black node");
      }
      if (!f["index_coweight"].is_null())
        sd.index_coweight = f["index_coweight"].get<std::vector<int>>();
      validate_diagram(sd);
      cat.forms_.push_back(std::move(sd));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, source + ": " + e.what());
  }
  return cat;
}

SatakeCatalog SatakeCatalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open catalog file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str(), path);
}

const SatakeCatalog& SatakeCatalog::builtin() {
  static const SatakeCatalog cat = from_json(kBuiltinSatakeCatalog, "builtin");
  return cat;
}

std::vector<SatakeDiagram> SatakeCatalog::forms(const RootSystem& rs) const {
  std::vector<SatakeDiagram> out;
  for (const auto& f : forms_)
    if (f.root_system->type_letter() == rs.type_letter() && f.rank() == rs.rank()) out.push_back(f);
  if (out.empty()) throw Error(ErrorKind::NotFound, "no real forms for type " + rs.name() + " in catalog");
  return out;
}

const SatakeDiagram& SatakeCatalog::find(const RootSystem& rs, std::string_view id) const {
  for (const auto& f : forms_)
    if (f.root_system->type_letter() == rs.type_letter() && f.rank() == rs.rank() && f.matches(id))
      return f;
  throw Error(ErrorKind::NotFound,
              "unknown real form '" + std::string(id) + "' for type " + rs.name());
}

std::vector<SatakeDiagram> real_form_catalog(char type_letter, int rank) {
  return SatakeCatalog::builtin().forms(*root_system(type_letter, rank));
}

}  // namespace wreal
