/* C interface to the wreal library. Every report is returned as a
 * NUL-terminated JSON string owned by the caller (free with
 * wreal_string_free). On failure a status other than WREAL_OK is returned,
 * the out-parameter is left NULL, and wreal_last_error() describes the
 * problem for the calling thread. */
#ifndef WREAL_WREAL_H
#define WREAL_WREAL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(WREAL_BUILDING_LIBRARY)
#define WREAL_API __attribute__((visibility("default")))
#else
#define WREAL_API
#endif

typedef enum wreal_status {
  WREAL_OK = 0,
  WREAL_ERR_INVALID_INPUT = 1,
  WREAL_ERR_CORRUPT_DATA = 2,
  WREAL_ERR_INAPPLICABLE = 3,
  WREAL_ERR_NOT_SELF_CONJUGATE = 4,
  WREAL_ERR_INDEX_UNAVAILABLE = 5,
  WREAL_ERR_SIZE_LIMIT = 6,
  WREAL_ERR_NOT_FOUND = 7,
  WREAL_ERR_INTERNAL = 8
} wreal_status;

typedef struct wreal_catalog wreal_catalog;
typedef struct wreal_input wreal_input;

WREAL_API const char* wreal_version(void);
WREAL_API const char* wreal_status_name(wreal_status status);
WREAL_API const char* wreal_last_error(void);
WREAL_API void wreal_string_free(char* s);

/* Satake catalogs. The built-in catalog is compiled into the library. */
WREAL_API wreal_status wreal_catalog_builtin(wreal_catalog** out);
WREAL_API wreal_status wreal_catalog_load(const char* path, wreal_catalog** out);
WREAL_API void wreal_catalog_free(wreal_catalog* catalog);

/* Inputs: spherical systems, Luna-Vust data or weight monoids. */
WREAL_API wreal_status wreal_input_from_file(const char* path, wreal_input** out);
WREAL_API wreal_status wreal_input_from_json(const char* text, wreal_input** out);
WREAL_API wreal_status wreal_input_from_fixture(const char* name, wreal_input** out);
WREAL_API wreal_status wreal_input_to_json(const wreal_input* input, char** json_out);
WREAL_API void wreal_input_free(wreal_input* input);

/* Reports. */
WREAL_API wreal_status wreal_forms(const wreal_catalog* catalog, const char* type_rank,
                                   char** json_out);
WREAL_API wreal_status wreal_check(const wreal_catalog* catalog, const wreal_input* input,
                                   const char* form, char** json_out);
WREAL_API wreal_status wreal_orbits(const wreal_catalog* catalog, const wreal_input* input,
                                    const char* form, char** json_out);
WREAL_API wreal_status wreal_scan(const wreal_catalog* catalog, int n_max, char** json_out);
WREAL_API wreal_status wreal_fixtures(char** json_out);

/* Cartan index (+1 or -1) of the simple module with the given dominant
 * highest weight, coordinates in the fundamental-weight basis. */
WREAL_API wreal_status wreal_cartan_index(const wreal_catalog* catalog, const char* type_rank,
                                          const char* form, const int* weight, int rank,
                                          int* index_out);

#ifdef __cplusplus
}
#endif

#endif /* WREAL_WREAL_H */
