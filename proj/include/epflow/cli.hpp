#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace epflow::cli {

struct CliConfig {
  bool trace = false;
  std::int64_t magnitude_cap = 1'000'000;
  std::size_t depth_limit = 512;
  std::optional<std::string> registry_path;
};

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_false = 1;  // predicate false under --check
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_eval_error = 3;
inline constexpr int exit_resource_error = 4;

// Name of the environment variable holding a default config file path.
inline constexpr const char* config_env_var = "EPFLOW_CONFIG";

/// Runs one command. `args` excludes the program name. Diagnostics go to
/// `err` as a single line; results go to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epflow::cli
