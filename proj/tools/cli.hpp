#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rpt::cli {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

/// Runs one invocation; args excludes the program name. The JSON report
/// goes to out and a one-line human summary to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpt::cli
