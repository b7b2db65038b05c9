#include "cli/config.hpp"

#include <cmath>
#include <set>

#include "molsim/foundation/errors.hpp"
#include "molsim/io/text.hpp"

namespace molsim::cli {
namespace {

std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::Frequency: return "frequency";
    case Dimension::Temperature: return "temperature";
    case Dimension::MagneticField: return "magnetic_field";
    case Dimension::Time: return "time";
    case Dimension::Dimensionless: return "dimensionless";
  }
  return "unknown";
}

std::string_view canonical_symbol(Dimension d) {
  switch (d) {
    case Dimension::Frequency: return "rad/s";
    case Dimension::Temperature: return "K";
    case Dimension::MagneticField: return "T";
    case Dimension::Time: return "s";
    case Dimension::Dimensionless: return "1";
  }
  return "";
}

std::string_view kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::Quantity: return "quantity";
    case FieldKind::QuantityList: return "quantity_list";
    case FieldKind::Number: return "number";
    case FieldKind::Integer: return "integer";
    case FieldKind::Boolean: return "boolean";
    case FieldKind::String: return "string";
    case FieldKind::Object: return "object";
    case FieldKind::ObjectList: return "object_list";
  }
  return "unknown";
}

Field make(std::string name, FieldKind kind, std::string help, Json fallback) {
  Field f;
  f.name = std::move(name);
  f.kind = kind;
  f.help = std::move(help);
  f.default_value = std::move(fallback);
  return f;
}

double to_quantity(const Json& v, Dimension dim, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) {
    throw ConfigError(path + ": expected a number or a \"value unit\" string");
  }
  const std::string s = v.get<std::string>();
  const auto space = s.find(' ');
  if (space == std::string::npos) {
    throw ConfigError(path + ": expected \"value unit\", got \"" + s + "\"");
  }
  const auto value = io::parse_double(std::string_view(s).substr(0, space));
  if (!value) throw ConfigError(path + ": bad number in \"" + s + "\"");
  Unit unit;
  try {
    unit = parse_unit(std::string_view(s).substr(space + 1));
  } catch (const Error&) {
    throw ConfigError(path + ": unknown unit in \"" + s + "\"");
  }
  if (dimension_of(unit) != dim) {
    throw ConfigError(path + ": expected a " + std::string(dimension_name(dim)) + ", got \"" + s +
                      "\"");
  }
  return convert({*value, unit}, [dim] {
           switch (dim) {
             case Dimension::Frequency: return Unit::RadPerSecond;
             case Dimension::Temperature: return Unit::Kelvin;
             case Dimension::MagneticField: return Unit::Tesla;
             case Dimension::Time: return Unit::Seconds;
             default: return Unit::Dimensionless;
           }
         }()).value;
}

void check_minimum(const Field& f, double v, const std::string& path) {
  if (!std::isfinite(v)) throw ConfigError(path + ": must be finite");
  if (!f.minimum) return;
  if (f.exclusive_minimum ? !(v > *f.minimum) : !(v >= *f.minimum)) {
    throw ConfigError(path + ": must be " + (f.exclusive_minimum ? "> " : ">= ") +
                      io::format_double(*f.minimum));
  }
}

Json normalize_value(const Field& f, const Json& v, const std::string& path) {
  switch (f.kind) {
    case FieldKind::Quantity: {
      const double q = to_quantity(v, f.dimension, path);
      check_minimum(f, q, path);
      return q;
    }
    case FieldKind::Number: {
      if (!v.is_number()) throw ConfigError(path + ": expected a number");
      const double q = v.get<double>();
      check_minimum(f, q, path);
      return q;
    }
    case FieldKind::Integer: {
      if (!v.is_number_integer()) throw ConfigError(path + ": expected an integer");
      const auto q = v.get<long long>();
      check_minimum(f, static_cast<double>(q), path);
      return q;
    }
    case FieldKind::Boolean:
      if (!v.is_boolean()) throw ConfigError(path + ": expected true or false");
      return v;
    case FieldKind::String:
      if (!v.is_string()) throw ConfigError(path + ": expected a string");
      return v;
    case FieldKind::QuantityList: {
      if (!v.is_array()) throw ConfigError(path + ": expected a list");
      if (f.length && v.size() != *f.length) {
        throw ConfigError(path + ": expected " + std::to_string(*f.length) + " entries");
      }
      Json out = Json::array();
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const double q = to_quantity(v[i], f.dimension, p);
        check_minimum(f, q, p);
        out.push_back(q);
      }
      return out;
    }
    case FieldKind::Object:
      return normalize(v, f.children, path);
    case FieldKind::ObjectList: {
      if (!v.is_array()) throw ConfigError(path + ": expected a list");
      Json out = Json::array();
      for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(normalize(v[i], f.children, path + "[" + std::to_string(i) + "]"));
      }
      return out;
    }
  }
  return v;
}

}  // namespace

Field quantity(std::string name, Dimension dim, std::string help, Json fallback) {
  Field f = make(std::move(name), FieldKind::Quantity, std::move(help), std::move(fallback));
  f.dimension = dim;
  return f;
}
Field quantity_list(std::string name, Dimension dim, std::string help, Json fallback) {
  Field f = make(std::move(name), FieldKind::QuantityList, std::move(help), std::move(fallback));
  f.dimension = dim;
  return f;
}
Field number(std::string name, std::string help, Json fallback) {
  return make(std::move(name), FieldKind::Number, std::move(help), std::move(fallback));
}
Field integer(std::string name, std::string help, Json fallback) {
  return make(std::move(name), FieldKind::Integer, std::move(help), std::move(fallback));
}
Field boolean(std::string name, std::string help, Json fallback) {
  return make(std::move(name), FieldKind::Boolean, std::move(help), std::move(fallback));
}
Field text(std::string name, std::string help, Json fallback) {
  return make(std::move(name), FieldKind::String, std::move(help), std::move(fallback));
}
Field object(std::string name, std::vector<Field> children, std::string help) {
  Field f = make(std::move(name), FieldKind::Object, std::move(help), Json::object());
  f.children = std::move(children);
  return f;
}
Field object_list(std::string name, std::vector<Field> children, std::string help,
                  Json fallback) {
  Field f = make(std::move(name), FieldKind::ObjectList, std::move(help), std::move(fallback));
  f.children = std::move(children);
  return f;
}
Field required(Field f) {
  f.required = true;
  f.default_value = nullptr;
  return f;
}
Field at_least(Field f, double minimum) {
  f.minimum = minimum;
  f.exclusive_minimum = false;
  return f;
}
Field above(Field f, double minimum) {
  f.minimum = minimum;
  f.exclusive_minimum = true;
  return f;
}
Field sized(Field f, std::size_t length) {
  f.length = length;
  return f;
}

Json normalize(const Json& in, const std::vector<Field>& schema, const std::string& path) {
  if (!in.is_object()) throw ConfigError(path + ": expected an object");
  std::set<std::string> known;
  for (const Field& f : schema) known.insert(f.name);
  for (const auto& [key, value] : in.items()) {
    if (!known.count(key)) throw ConfigError("unknown key '" + path + "." + key + "'");
  }
  Json out = Json::object();
  for (const Field& f : schema) {
    const std::string p = path + "." + f.name;
    if (in.contains(f.name)) {
      out[f.name] = normalize_value(f, in.at(f.name), p);
    } else if (f.required) {
      throw ConfigError("missing required key '" + p + "'");
    } else if (!f.default_value.is_null()) {
      out[f.name] = normalize_value(f, f.default_value, p);
    }
  }
  return out;
}

Json describe(const std::vector<Field>& schema) {
  Json out = Json::object();
  for (const Field& f : schema) {
    Json d = Json::object();
    d["type"] = kind_name(f.kind);
    if (f.kind == FieldKind::Quantity || f.kind == FieldKind::QuantityList) {
      d["dimension"] = dimension_name(f.dimension);
      d["canonical_unit"] = canonical_symbol(f.dimension);
    }
    d["required"] = f.required;
    if (!f.default_value.is_null() && f.kind != FieldKind::Object) d["default"] = f.default_value;
    if (f.minimum) d[f.exclusive_minimum ? "exclusive_minimum" : "minimum"] = *f.minimum;
    if (f.length) d["length"] = *f.length;
    d["description"] = f.help;
    if (!f.children.empty()) d["fields"] = describe(f.children);
    out[f.name] = std::move(d);
  }
  return out;
}

}  // namespace molsim::cli
