#pragma once

// Subcommands of the toricbr tool, callable in-process.

#include <json.hpp>

#include <optional>
#include <string>

namespace toric::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidFan = 2,
  kParseFailure = 3,
  kWriteFailure = 4,
};

enum class Format { Text, Json };

struct Options {
  std::string command;  // validate | invariants | brauer | resolve | cech
  std::string path;
  Format format = Format::Text;
  bool timing = false;
  bool emit_cocycles = false;
  std::optional<std::string> output;
  std::string sheaf = "sf";
  long long degree = 1;
};

struct Outcome {
  int exit_code = kOk;
  std::string out;  // stdout
  std::string err;  // stderr
  /// The report behind `out`; null when no report was produced.
  nlohmann::ordered_json report;
};

/// Runs one command. Never throws for bad input; failures map to exit codes.
Outcome run(const Options& options);

/// Text rendering of a report.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace toric::cli
