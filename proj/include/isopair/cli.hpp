#pragma once

#include <ostream>

namespace isopair::cli {

/// Exit codes: 0 success, 1 property failure, 2 parse error, 3 precondition.
enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kPrecondition = 3 };

/// Entry point of the isopair tool. Output goes to `out` (or the --out
/// file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isopair::cli
