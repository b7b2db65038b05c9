#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace molsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;

struct RunOptions {
  std::optional<std::filesystem::path> output_dir;
  unsigned threads = 1;
};

/// Validates and runs the scenario in `config_path`; returns the exit status.
int run_config(const std::filesystem::path& config_path, const RunOptions& options,
               std::ostream& out, std::ostream& err);

/// Validates only.
int validate_config(const std::filesystem::path& config_path, std::ostream& out,
                    std::ostream& err);

/// Prints the parameter schema of `kind`.
int print_schema(const std::string& kind, std::ostream& out, std::ostream& err);

/// Full command line: run <config> | validate <config> | schema <kind>.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& data);

}  // namespace molsim::cli
