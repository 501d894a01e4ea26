#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leamer {

// Command-line surface.  `args` excludes the program name.  Writes results to
// `out` and diagnostics to `err`.  Exit codes: 0 success, 1 invalid input,
// 2 validation mismatch (a closed-form check failed; the counterexample is
// printed).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace leamer
