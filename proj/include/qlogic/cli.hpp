#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlogic {

// Exit codes: 0 success or a positive answer, 1 a definite negative answer
// (infeasible, invalid, not subadditive), 2 usage, I/O or input errors.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

// Runs one command; `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlogic
