#pragma once

#include <ostream>

namespace qeff::cli {

// Runs one CLI invocation, writing CSV to `out` and diagnostics to `err`.
// Exit codes: 0 success, 1 usage error, 2 domain/validation error,
// 3 numeric failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qeff::cli
