#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cli/config.hpp"

namespace molsim::cli {

struct RunContext {
  std::uint64_t seed = 0;
  std::filesystem::path config_dir;  // relative input paths resolve here
};

struct ScenarioOutput {
  Json summary = Json::object();  // flat: numbers, strings, booleans, null
  std::vector<std::pair<std::string, std::string>> files;  // name, content
};

struct Scenario {
  std::string kind;
  std::string description;
  std::vector<Field> schema;
  std::function<ScenarioOutput(const Json& params, const RunContext& ctx)> run;
};

const std::vector<Scenario>& scenarios();

/// Throws ConfigError for an unknown kind.
const Scenario& find_scenario(const std::string& kind);

}  // namespace molsim::cli
