#pragma once

#include <iosfwd>

namespace dcodes::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,        // usage error, failed verify check, other errors
    kInadmissible = 2,   // (q, p, m) fails the admissibility test
    kBudget = 3,         // an exact weight computation exceeded --budget
    kIoError = 4,        // an input or output file could not be opened or written
    kBadTable = 5,       // malformed reference table for `compare`
};

/// Entry point shared by the `dcodes` binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcodes::cli
