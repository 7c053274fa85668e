#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcross/spec_io.hpp"

namespace pcross {

enum class OutputFormat { Json, Text };

struct RunOptions {
  OutputFormat format = OutputFormat::Json;
  unsigned parallel = 1;
  /// Adds wall time to the report. Off by default so reports are byte-identical across runs.
  bool timing = false;
};

struct RunResult {
  int exit_code = 0;                    // 0 pass, 1 check failure, 2 input error
  std::string output;                   // rendered report
  std::optional<std::string> spec_out;  // emitted spec file (globalize)
};

/// verify, build-crossed, globalize, morita, gauge, separability, report.
const std::vector<std::string>& command_names();

/// Dispatches one command. Input problems (unknown command, missing
/// objects, shape errors) give exit code 2 with an error report; failed
/// preconditions and failed checks give exit code 1.
RunResult run(const std::string& command, const SpecFile& spec, const RunOptions& options = {});

/// Parses then runs; parse errors are reported with exit code 2.
RunResult run_text(const std::string& command, std::string_view spec_text, std::optional<Field> field,
                   const RunOptions& options = {});

}  // namespace pcross
