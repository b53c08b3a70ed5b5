#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ualg {

// Runs one CLI invocation (args excludes the program name). Exit status:
// 0 = success, 1 = negative domain answer (none / counterexample),
// 2 = usage or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ualg
