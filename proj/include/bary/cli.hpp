#pragma once

#include <iosfwd>

namespace bary {

/// Exit codes: 0 accepted / success, 1 rejected (or not accepted),
/// 2 invalid input, 3 internal or parse error.
enum ExitCode : int { kExitOk = 0, kExitRejected = 1, kExitInvalid = 2, kExitInternal = 3 };

/// Entry point behind the `bary` executable; stdout/stderr are injectable
/// so the whole command surface can be driven in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bary
