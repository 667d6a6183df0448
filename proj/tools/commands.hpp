#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsf::cli {

/// Runs one command line (args[0] is the program name). Reports go to `out`
/// as JSON lines, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Least-squares slope of log(y) against log(x).
double fitted_exponent(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace gsf::cli
