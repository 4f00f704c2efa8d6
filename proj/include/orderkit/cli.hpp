// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <span>
#include <string>

namespace orderkit {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInputError = 2 };

/// Runs one CLI invocation. `args` starts at the subcommand (no program
/// name). The JSON result goes to `out`, diagnostics to `err`.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace orderkit
