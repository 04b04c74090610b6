#pragma once

#include <string>

#include "vvilab/config.hpp"
#include "vvilab/report.hpp"

namespace vvilab {

enum ExitCode : int { kExitHolds = 0, kExitError = 1, kExitViolation = 2 };

struct RunResult {
  json report;
  int exit_code = kExitHolds;
};

/// Executes one of catalog, check, solve, verify, replay. Library errors
/// propagate; the caller maps them to kExitError.
RunResult run_command(const std::string& command, const RunConfig& cfg);

/// Report in the configured format.
std::string format_report(const json& report, const std::string& format);

}  // namespace vvilab
