#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locdense::cli {

// Executes one subcommand and returns the process exit code:
//   0  success; for verification commands, the checked property holds
//   1  informational negative: an inequality failed or density was refuted
//   2  usage or input error
//   3  a resource guard refused the computation
// `args` excludes the program name. All output is assembled first and written
// in one piece, reports to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace locdense::cli
