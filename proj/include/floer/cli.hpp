#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace floer {

// Command-line front end. `args` excludes the program name. Writes JSON
// (default) or CSV to `out` and diagnostics to `err`; returns 0 on success,
// 1 on domain errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace floer
