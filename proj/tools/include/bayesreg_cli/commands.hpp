#pragma once

#include "bayesreg_cli/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bayesreg::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  ///< reproduce-paper thresholds not met
  kExitUsage = 2,        ///< usage or validation error
  kExitIo = 3,
  kExitNumerical = 4,
};

int cmd_fit(const RunConfig& config, std::ostream& out);
int cmd_risk_sim(const RunConfig& config, std::ostream& out);
int cmd_reproduce_paper(const RunConfig& config, std::ostream& out);
int cmd_condition_scan(const RunConfig& config, std::ostream& out);
int cmd_contours(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name), runs the subcommand and maps
/// errors onto exit codes. Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bayesreg::cli
