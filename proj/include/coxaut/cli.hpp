#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxaut {

// Runs one CLI invocation. Exit status: 0 success, 1 validation or input
// failure, 2 oracle budget exhausted, 3 internal cross-check mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace coxaut
