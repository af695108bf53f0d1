// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "widenkit/number.hpp"

namespace widenkit::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 1,   // parse errors, bad flags, unreadable files
    kSolverDefect = 2,  // broken widening or fuel exhaustion
    kCounterexample = 3 // the oracle found a state outside a reported invariant
};

/// One unbounded decimal integer per line, strictly ascending. Blank lines are ignored.
/// Throws std::invalid_argument with a line number on bad input.
std::vector<Integer> parse_thresholds(const std::string& text);

/// Entry point of the `widenkit` tool; args excludes the program name.
/// The report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace widenkit::cli
