// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "widenkit/lang/analyzer.hpp"

namespace widenkit {

using Json = nlohmann::ordered_json;

/// {"lo": "-inf" | "<int>", "hi": "inf" | "<int>"}. Integers are strings so no width is lost.
Json to_json(const Interval& iv);
/// {var: interval, …} in declaration order, or "bottom".
Json to_json(const AbstractEnv& env);
/// {"loops": [{"id", "line", "env"}…], "final": env, "strategy": str, "steps": int}
Json to_json(const lang::AnalysisReport& report);

// Inverses of to_json. Throw std::invalid_argument on malformed input.
Interval interval_from_json(const Json& j);
AbstractEnv env_from_json(const Json& j);
lang::AnalysisReport report_from_json(const Json& j);

/// One line per loop, "loop@L2: x ∈ [0, +inf]", then the final env and step count.
void write_text(std::ostream& os, const lang::AnalysisReport& report);

} // namespace widenkit
