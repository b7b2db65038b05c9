#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "molsim/foundation/units.hpp"

namespace molsim::cli {

using Json = nlohmann::ordered_json;

/// Bad configuration. The message names the offending key path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind {
  Quantity,      // number in canonical units or "value unit"
  QuantityList,
  Number,
  Integer,
  Boolean,
  String,
  Object,
  ObjectList,
};

struct Field {
  std::string name;
  FieldKind kind = FieldKind::Number;
  Dimension dimension = Dimension::Dimensionless;
  bool required = false;
  Json default_value;  // null: absent unless given
  std::optional<double> minimum;
  bool exclusive_minimum = false;
  std::optional<std::size_t> length;
  std::vector<Field> children;
  std::string help;
};

// Builders for schema tables.
Field quantity(std::string name, Dimension dim, std::string help, Json fallback = nullptr);
Field quantity_list(std::string name, Dimension dim, std::string help, Json fallback = nullptr);
Field number(std::string name, std::string help, Json fallback = nullptr);
Field integer(std::string name, std::string help, Json fallback = nullptr);
Field boolean(std::string name, std::string help, Json fallback = nullptr);
Field text(std::string name, std::string help, Json fallback = nullptr);
Field object(std::string name, std::vector<Field> children, std::string help);
Field object_list(std::string name, std::vector<Field> children, std::string help,
                  Json fallback = Json::array());
Field required(Field f);
Field at_least(Field f, double minimum);
Field above(Field f, double minimum);
Field sized(Field f, std::size_t length);

/// Validates `in` against `schema`, converts quantities to canonical units and
/// fills defaults. `path` prefixes key names in error messages.
Json normalize(const Json& in, const std::vector<Field>& schema, const std::string& path);

/// Human-readable schema as JSON.
Json describe(const std::vector<Field>& schema);

}  // namespace molsim::cli
