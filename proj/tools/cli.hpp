// Command-line front end.  Kept separate from main() so that tests can run
// it in-process.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binform {

/// Runs one command; `args` excludes the program name.  Reports go to `out`
/// (or to the --out file), diagnostics to `err`.  Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binform
