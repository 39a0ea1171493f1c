#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tdhom {

// Full command-line front end: parses args (program name excluded), routes
// to the library, writes machine-readable JSON to `out` and diagnostics to
// `err`. Exit codes: 0 success/equivalent, 1 inequivalent or violations
// found, 2 usage or input errors (with an error object on `out`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tdhom
