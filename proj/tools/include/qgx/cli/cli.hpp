#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qgx/cli/verify.hpp"

namespace qgx::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kIoError = 3 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const VerifierRegistry& verifiers = default_verifiers());

} // namespace qgx::cli
