#include "cli/app.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <ostream>
#include <thread>

#include "cli/config.hpp"
#include "cli/scenarios.hpp"
#include "molsim/foundation/errors.hpp"
#include "molsim/io/text.hpp"

namespace molsim::cli {
namespace {

constexpr int kSchemaVersion = 1;

struct Sweep {
  std::string parameter;
  std::vector<Json> points;  // normalized parameter records, one per value
  Json values;               // raw declared values
};

struct Plan {
  const Scenario* scenario = nullptr;
  Json parameters;  // normalized
  std::optional<Sweep> sweep;
  std::optional<std::filesystem::path> output_dir;
  std::uint64_t seed = 0;
  RunContext context;
};

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    parts.push_back(path.substr(start, dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return parts;
}

void assign(Json& root, const std::string& path, const Json& value) {
  Json* node = &root;
  const auto parts = split_path(path);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string& key = parts[i];
    if (key.empty()) throw ConfigError("sweep.parameter '" + path + "' has an empty segment");
    const bool last = i + 1 == parts.size();
    if (node->is_array()) {
      const auto idx = io::parse_unsigned(key);
      if (!idx || *idx >= node->size()) {
        throw ConfigError("sweep.parameter '" + path + "': no list entry '" + key + "'");
      }
      node = &(*node)[static_cast<std::size_t>(*idx)];
    } else {
      if (!node->is_object()) {
        throw ConfigError("sweep.parameter '" + path + "' does not name a parameter");
      }
      if (last) {
        (*node)[key] = value;
        return;
      }
      if (!node->contains(key)) (*node)[key] = Json::object();
      node = &(*node)[key];
    }
    if (last) *node = value;
  }
}

Plan load(const std::filesystem::path& config_path) {
  Json doc;
  try {
    doc = Json::parse(io::read_file(config_path));
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  static const char* const kTop[] = {"schema_version", "scenario_kind", "parameters", "sweep",
                                     "output_dir", "seed"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(kTop), std::end(kTop), key) == std::end(kTop)) {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  if (!doc.contains("schema_version")) throw ConfigError("missing required key 'schema_version'");
  if (doc["schema_version"] != kSchemaVersion) {
    throw ConfigError("schema_version must be " + std::to_string(kSchemaVersion));
  }
  if (!doc.contains("scenario_kind") || !doc["scenario_kind"].is_string()) {
    throw ConfigError("missing required key 'scenario_kind'");
  }
  Plan plan;
  plan.scenario = &find_scenario(doc["scenario_kind"].get<std::string>());
  const Json raw = doc.value("parameters", Json::object());
  plan.parameters = normalize(raw, plan.scenario->schema, "parameters");

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ConfigError("seed must be an unsigned integer");
    plan.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) throw ConfigError("output_dir must be a string");
    plan.output_dir = doc["output_dir"].get<std::string>();
  }
  plan.context.seed = plan.seed;
  plan.context.config_dir = config_path.parent_path();

  if (doc.contains("sweep")) {
    const Json& sw = doc["sweep"];
    if (!sw.is_object()) throw ConfigError("sweep must be an object");
    for (const auto& [key, value] : sw.items()) {
      if (key != "parameter" && key != "values") throw ConfigError("unknown key 'sweep." + key + "'");
    }
    if (!sw.contains("parameter") || !sw["parameter"].is_string()) {
      throw ConfigError("missing required key 'sweep.parameter'");
    }
    if (!sw.contains("values") || !sw["values"].is_array() || sw["values"].empty()) {
      throw ConfigError("sweep.values must be a non-empty list");
    }
    Sweep sweep;
    sweep.parameter = sw["parameter"].get<std::string>();
    sweep.values = sw["values"];
    for (const Json& v : sweep.values) {
      Json point = raw;
      assign(point, sweep.parameter, v);
      sweep.points.push_back(normalize(point, plan.scenario->schema, "parameters"));
    }
    plan.sweep = std::move(sweep);
  }
  return plan;
}

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return v.dump();
  if (v.is_number()) return io::format_double(v.get<double>());
  if (v.is_string()) return io::csv_field(v.get<std::string>());
  return io::csv_field(v.dump());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<ScenarioOutput> execute(const Plan& plan, unsigned threads) {
  const std::vector<Json> points =
      plan.sweep ? plan.sweep->points : std::vector<Json>{plan.parameters};
  std::vector<ScenarioOutput> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = plan.scenario->run(points[i], plan.context);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<std::pair<std::string, std::string>> artifacts(const Plan& plan,
                                                           std::vector<ScenarioOutput> results) {
  std::vector<std::pair<std::string, std::string>> files;
  const std::string& kind = plan.scenario->kind;
  if (!plan.sweep) {
    Json doc = Json::object();
    doc["scenario_kind"] = kind;
    doc["parameters"] = plan.parameters;
    doc["results"] = results.front().summary;
    files.emplace_back("result.json", dump(doc));
    for (auto& f : results.front().files) files.push_back(std::move(f));
  } else {
    const Sweep& sw = *plan.sweep;
    std::vector<std::string> keys;
    for (const auto& r : results) {
      for (const auto& [k, v] : r.summary.items()) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
      }
    }
    std::string csv = io::csv_field(sw.parameter);
    for (const auto& k : keys) csv += ',' + io::csv_field(k);
    csv += '\n';
    Json points = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      Json resolved = sw.points[i];
      for (const auto& part : split_path(sw.parameter)) {
        if (resolved.is_array()) {
          resolved = resolved[static_cast<std::size_t>(*io::parse_unsigned(part))];
        } else {
          resolved = resolved.value(part, Json());
        }
      }
      csv += cell(resolved);
      for (const auto& k : keys) csv += ',' + cell(results[i].summary.value(k, Json()));
      csv += '\n';
      Json entry = Json::object();
      entry["value"] = sw.values[i];
      entry["results"] = results[i].summary;
      points.push_back(std::move(entry));
      char prefix[32];
      std::snprintf(prefix, sizeof prefix, "point_%04zu_", i);
      for (auto& f : results[i].files) files.emplace_back(prefix + f.first, std::move(f.second));
    }
    Json doc = Json::object();
    doc["scenario_kind"] = kind;
    doc["parameters"] = plan.parameters;
    doc["sweep"] = {{"parameter", sw.parameter}, {"points", points}};
    files.emplace(files.begin(), "sweep.csv", csv);
    files.emplace(files.begin(), "result.json", dump(doc));
  }
  return files;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

int run_config(const std::filesystem::path& config_path, const RunOptions& options,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Plan plan = load(config_path);
    const auto dir = options.output_dir ? options.output_dir : plan.output_dir;
    if (!dir) throw ConfigError("missing required key 'output_dir' (or pass --output-dir)");
    auto files = artifacts(plan, execute(plan, options.threads));
    std::sort(files.begin(), files.end());

    Json list = Json::array();
    for (const auto& [name, content] : files) {
      list.push_back({{"path", name}, {"bytes", content.size()}, {"sha256", sha256_hex(content)}});
    }
    Json manifest = Json::object();
    manifest["schema_version"] = kSchemaVersion;
    manifest["scenario_kind"] = plan.scenario->kind;
    manifest["seed"] = plan.seed;
    manifest["artifacts"] = list;

    for (const auto& [name, content] : files) io::write_file_atomic(*dir / name, content);
    io::write_file_atomic(*dir / "manifest.json", dump(manifest));
    out << "wrote " << files.size() + 1 << " files to " << dir->string() << '\n';
    return kExitOk;
  });
}

int validate_config(const std::filesystem::path& config_path, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const Plan plan = load(config_path);
    out << "ok: " << plan.scenario->kind;
    if (plan.sweep) out << " (" << plan.sweep->points.size() << " sweep points)";
    out << '\n';
    return kExitOk;
  });
}

int print_schema(const std::string& kind, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Scenario& s = find_scenario(kind);
    Json doc = Json::object();
    doc["scenario_kind"] = s.kind;
    doc["description"] = s.description;
    doc["parameters"] = describe(s.schema);
    out << dump(doc);
    return kExitOk;
  });
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-molecule quantum photonics simulator"};
  app.require_subcommand(1);
  std::string output_dir;
  unsigned threads = 1;
  app.add_option("--output-dir", output_dir, "override the config's output_dir");
  app.add_option("--threads", threads, "worker threads for sweep points")
      ->check(CLI::Range(1u, 1024u));

  std::string config, kind;
  auto* run = app.add_subcommand("run", "run a scenario config");
  run->add_option("config", config, "scenario JSON")->required();
  auto* validate = app.add_subcommand("validate", "check a scenario config");
  validate->add_option("config", config, "scenario JSON")->required();
  auto* schema = app.add_subcommand("schema", "print the parameter schema of a scenario kind");
  std::string kinds;
  for (const auto& s : scenarios()) kinds += (kinds.empty() ? "" : ", ") + s.kind;
  schema->add_option("kind", kind, kinds)->required();
  // Global flags may follow the subcommand.
  for (auto* sub : {run, validate, schema}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitConfig;
  }

  if (*run) {
    RunOptions opt;
    if (!output_dir.empty()) opt.output_dir = output_dir;
    opt.threads = threads;
    return run_config(config, opt, out, err);
  }
  if (*validate) return validate_config(config, out, err);
  return print_schema(kind, out, err);
}

}  // namespace molsim::cli
