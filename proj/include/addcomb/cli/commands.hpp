#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace addcomb::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // verifier found a witness, search/extraction came up empty
inline constexpr int kExitError = 2;      // I/O, format, usage or budget errors

// args excludes the program name. Reports go to out, diagnostics to err.
// Budget overrides are read from the ADDCOMB_BUDGET environment variable
// first, then from --budget.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addcomb::cli
