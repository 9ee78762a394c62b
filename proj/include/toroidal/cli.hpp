#pragma once

// Subcommands behind the `toroidal` executable. Each returns the process exit code.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/descent.hpp"
#include "toroidal/json_io.hpp"

namespace toroidal {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitSchema = 2,
  kExitBudget = 3,
  kExitClassification = 4,
  kExitVerify = 5,
};

enum class OutputFormat { Json, Text };

struct RunOptions {
  std::filesystem::path scenario;
  /// Trace JSON destination; stdout when empty.
  std::optional<std::filesystem::path> trace_out;
  std::optional<std::size_t> max_steps;
  OutputFormat format = OutputFormat::Json;
};

struct OracleOptions {
  std::filesystem::path scenario;
  std::size_t depth = 32;
  std::size_t max_entry = 64;
  std::size_t max_k = 8;
};

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const std::filesystem::path& trace, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);

/// Step-by-step bookkeeping of a run.
std::string render_text(const ScenarioFile& f, const std::vector<RoundResult>& rounds);

}  // namespace toroidal
