#pragma once

// Command-line front end:
//
//   mvq <table|verify|metrics|minimize|audit|sim|compare> [args] [--config path]
//
// Exit codes: 0 success, 1 verification or audit failure, 2 usage or parse
// error, 3 I/O error.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mvq/netlist.hpp"
#include "mvq/sim.hpp"

namespace mvq::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kIoError = 3 };

/// Flat key=value settings; relative paths resolve against the config
/// file's directory.
struct Config {
  std::optional<std::string> cost_table;
  std::optional<std::string> voltage_map;
  std::optional<std::string> output_dir;
};

/// Reads a config file. A missing file yields the defaults.
[[nodiscard]] Config load_config(const std::string& path, std::ostream& err);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvq::cli
