#include "wreal/wreal.h"

#include <cstring>
#include <string>

#include "report.hpp"

struct wreal_catalog {
  wreal::SatakeCatalog catalog;
};

struct wreal_input {
  wreal::InputData data;
};

namespace {

thread_local std::string last_error;

wreal_status status_of(wreal::ErrorKind kind) {
  using wreal::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidInput: return WREAL_ERR_INVALID_INPUT;
    case ErrorKind::CorruptData: return WREAL_ERR_CORRUPT_DATA;
    case ErrorKind::Inapplicable: return WREAL_ERR_INAPPLICABLE;
    case ErrorKind::NotSelfConjugate: return WREAL_ERR_NOT_SELF_CONJUGATE;
    case ErrorKind::IndexUnavailable: return WREAL_ERR_INDEX_UNAVAILABLE;
    case ErrorKind::SizeLimit: return WREAL_ERR_SIZE_LIMIT;
    case ErrorKind::NotFound: return WREAL_ERR_NOT_FOUND;
  }
  return WREAL_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs f, translating exceptions into status codes and last_error.
template <typename F>
wreal_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return WREAL_OK;
  } catch (const wreal::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return WREAL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return WREAL_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw wreal::Error(wreal::ErrorKind::InvalidInput, std::string(what) + " is NULL");
}

template <typename Build>
wreal_status emit_json(char** json_out, Build&& build) {
  if (json_out) *json_out = nullptr;
  return guarded([&] {
    require(json_out, "json_out");
    *json_out = dup_string(build().dump(2));
  });
}

}  // namespace

extern "C" {

const char* wreal_version(void) { return "0.1.0"; }

const char* wreal_status_name(wreal_status status) {
  switch (status) {
    case WREAL_OK: return "ok";
    case WREAL_ERR_INVALID_INPUT: return "invalid_input";
    case WREAL_ERR_CORRUPT_DATA: return "corrupt_data";
    case WREAL_ERR_INAPPLICABLE: return "inapplicable";
    case WREAL_ERR_NOT_SELF_CONJUGATE: return "not_self_conjugate";
    case WREAL_ERR_INDEX_UNAVAILABLE: return "index_unavailable";
    case WREAL_ERR_SIZE_LIMIT: return "size_limit";
    case WREAL_ERR_NOT_FOUND: return "not_found";
    case WREAL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* wreal_last_error(void) { return last_error.c_str(); }

void wreal_string_free(char* s) { delete[] s; }

wreal_status wreal_catalog_builtin(wreal_catalog** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out, "out");
    *out = new wreal_catalog{wreal::SatakeCatalog::builtin()};
  });
}

wreal_status wreal_catalog_load(const char* path, wreal_catalog** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out, "out");
    require(path, "path");
    *out = new wreal_catalog{wreal::SatakeCatalog::from_file(path)};
  });
}

void wreal_catalog_free(wreal_catalog* catalog) { delete catalog; }

wreal_status wreal_input_from_file(const char* path, wreal_input** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out, "out");
    require(path, "path");
    *out = new wreal_input{wreal::load_input(path)};
  });
}

wreal_status wreal_input_from_json(const char* text, wreal_input** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out, "out");
    require(text, "text");
    *out = new wreal_input{wreal::parse_input(text, "<json>")};
  });
}

wreal_status wreal_input_from_fixture(const char* name, wreal_input** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out, "out");
    require(name, "name");
    *out = new wreal_input{wreal::input_from_fixture(wreal::find_fixture(name))};
  });
}

wreal_status wreal_input_to_json(const wreal_input* input, char** json_out) {
  return emit_json(json_out, [&] {
    require(input, "input");
    return wreal::to_json(input->data);
  });
}

void wreal_input_free(wreal_input* input) { delete input; }

wreal_status wreal_forms(const wreal_catalog* catalog, const char* type_rank, char** json_out) {
  return emit_json(json_out, [&] {
    require(catalog, "catalog");
    require(type_rank, "type_rank");
    return wreal::report::forms(catalog->catalog, type_rank);
  });
}

wreal_status wreal_check(const wreal_catalog* catalog, const wreal_input* input, const char* form,
                         char** json_out) {
  return emit_json(json_out, [&] {
    require(catalog, "catalog");
    require(input, "input");
    require(form, "form");
    return wreal::report::check(catalog->catalog, input->data, form);
  });
}

wreal_status wreal_orbits(const wreal_catalog* catalog, const wreal_input* input, const char* form,
                          char** json_out) {
  return emit_json(json_out, [&] {
    require(catalog, "catalog");
    require(input, "input");
    require(form, "form");
    return wreal::report::orbits(catalog->catalog, input->data, form);
  });
}

wreal_status wreal_scan(const wreal_catalog* catalog, int n_max, char** json_out) {
  return emit_json(json_out, [&] {
    require(catalog, "catalog");
    return wreal::report::scan(catalog->catalog, n_max);
  });
}

wreal_status wreal_fixtures(char** json_out) {
  return emit_json(json_out, [] { return wreal::report::fixtures(); });
}

wreal_status wreal_cartan_index(const wreal_catalog* catalog, const char* type_rank,
                                const char* form, const int* weight, int rank, int* index_out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(type_rank, "type_rank");
    require(form, "form");
    require(weight, "weight");
    require(index_out, "index_out");
    auto rs = wreal::parse_root_system(type_rank);
    if (rank != rs->rank())
      throw wreal::Error(wreal::ErrorKind::InvalidInput, "weight has the wrong number of coordinates");
    const auto& sd = catalog->catalog.find(*rs, form);
    *index_out = wreal::cartan_index(sd, wreal::Weight(std::vector<int>(weight, weight + rank)));
  });
}

}  // extern "C"
