#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/app.hpp"
#include "cli/config.hpp"
#include "cli/scenarios.hpp"
#include "molsim/foundation/constants.hpp"
#include "molsim/io/text.hpp"

using namespace molsim;
using namespace molsim::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("molsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_config(const std::string& name, const Json& doc) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << doc.dump(2);
    return p;
  }

  int run(const fs::path& config, const fs::path& out_dir, unsigned threads = 1) {
    RunOptions opt;
    opt.output_dir = out_dir;
    opt.threads = threads;
    out_.str("");
    err_.str("");
    return run_config(config, opt, out_, err_);
  }

  static Json optomech() {
    return Json::parse(io::read_file(fs::path(MOLSIM_SOURCE_DIR) / "scenarios/optomech.json"));
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

}  // namespace

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Config, QuantitiesNormalizeToCanonicalUnits) {
  const std::vector<Field> schema = {
      required(quantity("f", Dimension::Frequency, "freq")),
      quantity("t", Dimension::Temperature, "temperature", 4.0),
      quantity_list("b", Dimension::MagneticField, "field"),
  };
  const Json out = normalize(Json::parse(R"({"f": "2 GHz", "b": ["0.005 T", 0.1]})"), schema, "parameters");
  EXPECT_NEAR(out["f"].get<double>(), constants::two_pi * 2e9, 1e-3);
  EXPECT_EQ(out["t"].get<double>(), 4.0);
  EXPECT_NEAR(out["b"][0].get<double>(), 0.005, 1e-15);
  EXPECT_EQ(out["b"][1].get<double>(), 0.1);
}

TEST(Config, ErrorsNameTheKey) {
  const std::vector<Field> schema = {required(above(quantity("f", Dimension::Frequency, "freq"), 0.0))};
  auto message = [&](const char* text) {
    try {
      normalize(Json::parse(text), schema, "parameters");
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"f": 1, "typo": 2})").find("parameters.typo"), std::string::npos);
  EXPECT_NE(message(R"({})").find("parameters.f"), std::string::npos);
  EXPECT_NE(message(R"({"f": "1 K"})").find("parameters.f"), std::string::npos);
  EXPECT_NE(message(R"({"f": -1})").find("parameters.f"), std::string::npos);
  EXPECT_NE(message(R"({"f": "fast"})").find("parameters.f"), std::string::npos);
}

TEST(Scenarios, AllKindsRegistered) {
  const char* kinds[] = {"spin_spectrum", "odmr", "crot", "emission_spectrum", "relaxation_classify",
                         "lindblad", "g2", "raman_memory", "cavity_interface", "optomech", "screening"};
  EXPECT_EQ(scenarios().size(), std::size(kinds));
  for (const char* k : kinds) EXPECT_EQ(find_scenario(k).kind, k);
  EXPECT_THROW(find_scenario("nope"), ConfigError);
}

TEST_F(CliTest, OptomechRunWritesManifestAndResult) {
  const fs::path cfg = write_config("optomech.json", optomech());
  const fs::path out = dir_ / "out";
  ASSERT_EQ(run(cfg, out), kExitOk) << err_.str();
  const Json manifest = Json::parse(io::read_file(out / "manifest.json"));
  EXPECT_EQ(manifest["schema_version"], 1);
  EXPECT_EQ(manifest["scenario_kind"], "optomech");
  EXPECT_EQ(manifest["seed"], 0);
  ASSERT_EQ(manifest["artifacts"].size(), 1u);
  const Json& a = manifest["artifacts"][0];
  EXPECT_EQ(a["path"], "result.json");
  const std::string content = io::read_file(out / "result.json");
  EXPECT_EQ(a["bytes"], content.size());
  EXPECT_EQ(a["sha256"], sha256_hex(content));
  const Json result = Json::parse(content);
  EXPECT_NEAR(result["results"]["cooperativity"].get<double>(), 2.513e6, 0.01 * 2.513e6);
}

TEST_F(CliTest, UnknownKeysExitWithConfigError) {
  Json doc = optomech();
  doc["parameters"]["g_zero"] = 1.0;
  ASSERT_EQ(run(write_config("a.json", doc), dir_ / "out"), kExitConfig);
  EXPECT_NE(err_.str().find("g_zero"), std::string::npos) << err_.str();

  doc = optomech();
  doc["outputdir"] = "x";
  ASSERT_EQ(run(write_config("b.json", doc), dir_ / "out"), kExitConfig);
  EXPECT_NE(err_.str().find("outputdir"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "out"));
}

TEST_F(CliTest, SchemaVersionAndKindAreChecked) {
  Json doc = optomech();
  doc["schema_version"] = 2;
  EXPECT_EQ(run(write_config("a.json", doc), dir_ / "out"), kExitConfig);
  doc = optomech();
  doc["scenario_kind"] = "teleport";
  EXPECT_EQ(run(write_config("b.json", doc), dir_ / "out"), kExitConfig);
  EXPECT_NE(err_.str().find("teleport"), std::string::npos);
  std::ofstream(dir_ / "c.json") << "{not json";
  EXPECT_EQ(run(dir_ / "c.json", dir_ / "out"), kExitConfig);
  EXPECT_EQ(run(dir_ / "missing.json", dir_ / "out"), kExitConfig);
}

TEST_F(CliTest, NumericFailureExitsTwoWithoutArtifacts) {
  Json doc = optomech();
  doc["parameters"].erase("occupation");
  doc["parameters"]["temperature"] = "0 K";
  EXPECT_EQ(run(write_config("a.json", doc), dir_ / "out"), kExitRuntime);
  EXPECT_FALSE(fs::exists(dir_ / "out" / "manifest.json"));
  EXPECT_FALSE(fs::exists(dir_ / "out" / "result.json"));
}

TEST_F(CliTest, DetuningSweepHasElevenRowsAndIsDeterministic) {
  const Json doc =
      Json::parse(io::read_file(fs::path(MOLSIM_SOURCE_DIR) / "scenarios/lindblad_detuning_sweep.json"));
  const fs::path cfg = write_config("sweep.json", doc);
  ASSERT_EQ(run(cfg, dir_ / "a"), kExitOk) << err_.str();
  ASSERT_EQ(run(cfg, dir_ / "b"), kExitOk);
  ASSERT_EQ(run(cfg, dir_ / "c", 4), kExitOk);

  std::istringstream csv(io::read_file(dir_ / "a" / "sweep.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line.rfind("detuning,", 0), 0u) << line;
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 11u);

  const std::string manifest = io::read_file(dir_ / "a" / "manifest.json");
  EXPECT_EQ(manifest, io::read_file(dir_ / "b" / "manifest.json"));
  EXPECT_EQ(manifest, io::read_file(dir_ / "c" / "manifest.json"));
  for (const auto& a : Json::parse(manifest)["artifacts"]) {
    const std::string name = a["path"].get<std::string>();
    EXPECT_EQ(sha256_hex(io::read_file(dir_ / "a" / name)), a["sha256"]) << name;
  }
}

TEST_F(CliTest, SweepRejectsUnknownParameterPath) {
  Json doc = optomech();
  doc["sweep"] = {{"parameter", "g_zero"}, {"values", {1.0, 2.0}}};
  EXPECT_EQ(run(write_config("a.json", doc), dir_ / "out"), kExitConfig);
  EXPECT_NE(err_.str().find("g_zero"), std::string::npos);
  doc["sweep"] = {{"parameter", "g0"}, {"values", Json::array()}};
  EXPECT_EQ(run(write_config("b.json", doc), dir_ / "out"), kExitConfig);
}

TEST_F(CliTest, ValidateAndSchemaCommands) {
  const fs::path cfg = write_config("optomech.json", optomech());
  std::ostringstream out, err;
  EXPECT_EQ(validate_config(cfg, out, err), kExitOk);
  EXPECT_NE(out.str().find("optomech"), std::string::npos);
  out.str("");
  EXPECT_EQ(print_schema("cavity_interface", out, err), kExitOk);
  const Json schema = Json::parse(out.str());
  EXPECT_TRUE(schema["parameters"].contains("g"));
  EXPECT_EQ(print_schema("unknown", out, err), kExitConfig);
}

TEST_F(CliTest, CommandLineBinaryExitCodes) {
  const fs::path cfg = write_config("optomech.json", optomech());
  Json bad = optomech();
  bad["parameters"]["bogus"] = 1;
  const fs::path bad_cfg = write_config("bad.json", bad);
  const std::string exe = MOLSIM_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("run " + cfg.string() + " --output-dir " + (dir_ / "o").string()), 0);
  EXPECT_TRUE(fs::exists(dir_ / "o" / "manifest.json"));
  EXPECT_EQ(status("validate " + bad_cfg.string()), 1);
  EXPECT_EQ(status("schema optomech"), 0);
  EXPECT_EQ(status("frobnicate"), 1);
  EXPECT_EQ(status("run " + cfg.string() + " --threads 0"), 1);
}
