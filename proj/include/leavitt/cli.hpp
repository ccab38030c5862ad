#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "leavitt/verify.hpp"

namespace leavitt {

// Full command-line driver, callable in-process for tests.  args excludes the
// program name.  Exit codes: 0 success, 1 at least one check failed, 2 usage
// or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reporting tail of the `check` verb: prints one line per outcome (or a JSON
// document), writes witness files for failures into witness_dir, and returns
// the process exit code (0 or 1).  Public so the failure path stays testable;
// the shipped checks verify theorems and cannot be made to fail from inputs.
int report_check_outcomes(const std::vector<std::pair<std::string, CheckOutcome>>& jobs,
                          unsigned long long seed, const std::string& witness_dir,
                          bool as_json, std::ostream& out, std::ostream& err);

}  // namespace leavitt
