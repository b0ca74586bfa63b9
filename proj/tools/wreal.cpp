// wreal: real structures on spherical and wonderful varieties.
//
// Exit codes: 0 verdict computed, 1 scan mismatch, 2 input error,
// 3 criterion inapplicable.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreal/wreal.h"

namespace {

using nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitInapplicable = 3;

int exit_code(wreal_status s) {
  switch (s) {
    case WREAL_OK: return 0;
    case WREAL_ERR_INAPPLICABLE:
    case WREAL_ERR_NOT_SELF_CONJUGATE:
    case WREAL_ERR_INDEX_UNAVAILABLE: return kExitInapplicable;
    default: return kExitInput;
  }
}

int report_error(wreal_status s) {
  std::cerr << "wreal: " << wreal_status_name(s) << ": " << wreal_last_error() << "\n";
  return exit_code(s);
}

struct CatalogDeleter {
  void operator()(wreal_catalog* c) const { wreal_catalog_free(c); }
};
struct InputDeleter {
  void operator()(wreal_input* i) const { wreal_input_free(i); }
};
using CatalogPtr = std::unique_ptr<wreal_catalog, CatalogDeleter>;
using InputPtr = std::unique_ptr<wreal_input, InputDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  wreal_string_free(s);
  return out;
}

wreal_status open_catalog(const std::string& path, CatalogPtr& out) {
  wreal_catalog* c = nullptr;
  std::string chosen = path;
  if (chosen.empty())
    if (const char* env = std::getenv("WREAL_CATALOG")) chosen = env;
  wreal_status s = chosen.empty() ? wreal_catalog_builtin(&c) : wreal_catalog_load(chosen.c_str(), &c);
  out.reset(c);
  return s;
}

wreal_status open_input(const std::string& file, const std::string& fixture, InputPtr& out) {
  wreal_input* in = nullptr;
  wreal_status s = fixture.empty() ? wreal_input_from_file(file.c_str(), &in)
                                   : wreal_input_from_fixture(fixture.c_str(), &in);
  out.reset(in);
  return s;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string ints(const json& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k].get<int>());
  return out + ")";
}

std::string nodes(const json& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k].get<int>());
  return out + "}";
}

void print_verdict(const json& v, const std::string& indent) {
  std::cout << indent << "answer: " << upper(v["answer"].get<std::string>()) << "\n";
  for (const auto& r : v["reasons"]) {
    std::cout << indent << "criterion " << r["criterion"].get<std::string>() << ": "
              << r["condition"].get<std::string>() << "\n";
    for (const auto& w : r["witnesses"])
      std::cout << indent << "  witness: " << w["text"].get<std::string>() << "\n";
  }
  if (!v["uniqueness_note"].is_null())
    std::cout << indent << "note: " << v["uniqueness_note"].get<std::string>() << "\n";
}

void print_forms(const json& r) {
  std::cout << "Real forms of " << r["type"].get<std::string>() << " (catalog "
            << r["catalog"]["source"].get<std::string>() << ", version " << r["catalog"]["version"]
            << ")\n";
  for (const auto& f : r["forms"]) {
    std::string aliases;
    for (const auto& a : f["aliases"]) aliases += (aliases.empty() ? "" : ", ") + a.get<std::string>();
    std::cout << "  " << f["name"].get<std::string>();
    if (!aliases.empty()) std::cout << " [" << aliases << "]";
    std::cout << "\n    diagram: " << f["diagram"].get<std::string>()
              << "\n    S_0 = " << nodes(f["black_nodes"])
              << "  epsilon = " << f["epsilon"]["cycles"].get<std::string>() << "\n";
  }
}

void print_header(const json& r) {
  std::cout << "input: " << r["input"]["source"].get<std::string>() << " ("
            << r["input"]["kind"].get<std::string>() << ", " << r["input"]["type"].get<std::string>()
            << ")\nform: " << r["form"]["name"].get<std::string>()
            << "  S_0 = " << nodes(r["form"]["black_nodes"])
            << "  epsilon = " << r["form"]["epsilon"]["cycles"].get<std::string>() << "\n";
}

void print_check(const json& r) {
  print_header(r);
  std::cout << "criterion: " << r["criterion"].get<std::string>() << "\n";
  print_verdict(r["verdict"], "  ");
}

void print_orbits(const json& r) {
  print_header(r);
  std::cout << "real structure:\n";
  print_verdict(r["real_structure"], "  ");
  std::cout << "orbits (I, S_I, Sigma_I stable, S_0 in S_I, candidate):\n";
  for (const auto& o : r["orbits"]) {
    std::string sigma;
    for (const auto& g : o["sigma_sub"]) sigma += (sigma.empty() ? "" : " ") + ints(g);
    std::cout << "  I=" << nodes(o["index_set"]) << "  S_I=" << nodes(o["s_sub"])
              << "  (1) " << (o["sigma_stable"].get<bool>() ? "pass" : "fail")
              << "  (2) " << (o["contains_black"].get<bool>() ? "pass" : "fail") << "  "
              << (o["candidate"].get<bool>() ? "candidate" : "excluded")
              << "  Sigma_I=[" << sigma << "]\n";
  }
  std::cout << "orbit filter:\n";
  print_verdict(r["filter"], "  ");
  std::cout << "  caveat: " << r["caveat"].get<std::string>() << "\n";
  std::cout << "guaranteed real points:\n";
  print_verdict(r["guaranteed"], "  ");
  std::cout << "Cartan index obstruction (omega_X = " << ints(r["omega_x"]) << "):\n";
  if (r["obstruction"].contains("error"))
    std::cout << "  unavailable: " << r["obstruction"]["message"].get<std::string>() << "\n";
  else
    print_verdict(r["obstruction"], "  ");
}

void print_scan(const json& r) {
  std::cout << "scan up to D" << 2 * r["n_max"].get<int>() << ": " << r["expected"].get<std::string>()
            << "\n";
  std::string current;
  for (const auto& row : r["rows"]) {
    if (row["fixture"] != current) {
      current = row["fixture"].get<std::string>();
      std::cout << current << (row["labeling_reconciled"].get<bool>() ? "  [labeling-reconciled]" : "")
                << "\n";
    }
    std::cout << "  " << row["form"].get<std::string>() << ": "
              << (row["stable"].get<bool>() ? "stable" : "NOT stable")
              << (row["expected_failure"].get<bool>() ? " (expected failure)" : "") << "\n";
    for (const auto& w : row["witnesses"]) std::cout << "    witness: " << w["text"].get<std::string>() << "\n";
  }
  std::cout << "failures: " << r["failures"].size() << ", unexpected: " << r["unexpected"].size() << "\n"
            << (r["matches_expected"].get<bool>() ? "matches expected set" : "MISMATCH") << "\n";
}

void print_fixtures(const json& r) {
  for (const auto& f : r["fixtures"])
    std::cout << f["name"].get<std::string>() << "  (" << f["kind"].get<std::string>() << ", "
              << f["type"].get<std::string>() << ")  " << f["description"].get<std::string>() << "\n";
  std::cout << "generated: rank0-<type>, GBminus-<type>\n";
}

// Prints a report string in the requested mode.
int emit(const std::string& text, bool as_json, void (*render)(const json&)) {
  json doc = json::parse(text);
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    render(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real structures on spherical and wonderful varieties"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string catalog_path;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--catalog", catalog_path, "Satake catalog file (default: $WREAL_CATALOG or built-in)");

  auto* forms = app.add_subcommand("forms", "list the real forms of a simple type");
  std::string type_rank;
  forms->add_option("type", type_rank, "simple type such as D4 or E8")->required();

  std::string file, fixture, form;
  auto add_input = [&](CLI::App* cmd) {
    auto* f = cmd->add_option("file", file, "input file (spherical system, Luna-Vust datum or weight monoid)");
    auto* x = cmd->add_option("--fixture", fixture, "built-in fixture instead of a file");
    f->excludes(x);
    cmd->add_option("--form", form, "real form: catalog name or alias")->required();
  };
  auto* check = app.add_subcommand("check", "decide whether a sigma-equivariant structure exists");
  add_input(check);
  auto* orbits = app.add_subcommand("orbits", "locate the orbits that may carry real points");
  add_input(orbits);

  auto* scan = app.add_subcommand("scan", "stability of the D-type families against all forms");
  int n_max = 3;
  scan->add_option("n_max", n_max, "largest n, families up to D_{2n}")->check(CLI::Range(2, 4));

  auto* fixtures = app.add_subcommand("fixtures", "list built-in fixtures or export one");
  std::string export_name;
  fixtures->add_option("--export", export_name, "print the fixture as an input file");

  for (auto* cmd : {forms, check, orbits, scan, fixtures}) {
    cmd->add_flag("--json", as_json, "machine-readable output");
    cmd->add_option("--catalog", catalog_path, "Satake catalog file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (*fixtures) {
    char* out = nullptr;
    wreal_status s;
    if (!export_name.empty()) {
      InputPtr in;
      s = open_input("", export_name, in);
      if (s != WREAL_OK) return report_error(s);
      s = wreal_input_to_json(in.get(), &out);
      if (s != WREAL_OK) return report_error(s);
      std::cout << take(out) << "\n";
      return 0;
    }
    s = wreal_fixtures(&out);
    if (s != WREAL_OK) return report_error(s);
    return emit(take(out), as_json, print_fixtures);
  }

  CatalogPtr catalog;
  if (wreal_status s = open_catalog(catalog_path, catalog); s != WREAL_OK) return report_error(s);

  char* out = nullptr;
  if (*forms) {
    if (wreal_status s = wreal_forms(catalog.get(), type_rank.c_str(), &out); s != WREAL_OK)
      return report_error(s);
    return emit(take(out), as_json, print_forms);
  }
  if (*scan) {
    if (wreal_status s = wreal_scan(catalog.get(), n_max, &out); s != WREAL_OK) return report_error(s);
    std::string text = take(out);
    emit(text, as_json, print_scan);
    return json::parse(text)["matches_expected"].get<bool>() ? 0 : kExitMismatch;
  }

  if (file.empty() && fixture.empty()) {
    std::cerr << "wreal: invalid_input: give an input file or --fixture\n";
    return kExitInput;
  }
  InputPtr input;
  if (wreal_status s = open_input(file, fixture, input); s != WREAL_OK) return report_error(s);
  if (*check) {
    if (wreal_status s = wreal_check(catalog.get(), input.get(), form.c_str(), &out); s != WREAL_OK)
      return report_error(s);
    return emit(take(out), as_json, print_check);
  }
  if (wreal_status s = wreal_orbits(catalog.get(), input.get(), form.c_str(), &out); s != WREAL_OK)
    return report_error(s);
  return emit(take(out), as_json, print_orbits);
}
