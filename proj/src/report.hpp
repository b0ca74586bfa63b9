// JSON reports behind the CLI commands.
#pragma once

#include <string>

#include <json.hpp>

#include "wreal/criteria.hpp"
#include "wreal/io.hpp"

namespace wreal::report {

nlohmann::json verdict_json(const Verdict& v);

nlohmann::json forms(const SatakeCatalog& catalog, const std::string& type_rank);
nlohmann::json check(const SatakeCatalog& catalog, const InputData& input, const std::string& form);
nlohmann::json orbits(const SatakeCatalog& catalog, const InputData& input, const std::string& form);
nlohmann::json scan(const SatakeCatalog& catalog, int n_max);
nlohmann::json fixtures();

}  // namespace wreal::report
