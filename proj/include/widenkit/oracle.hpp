// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

// Bounded concrete execution. Explores the program's small-step semantics
// breadth-first from every initial state and records the states seen at each
// loop head. The result under-approximates the reachable states, which is
// the useful direction for checking soundness: any recorded state outside a
// reported invariant is a real bug.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "widenkit/env.hpp"
#include "widenkit/lang/analyzer.hpp"
#include "widenkit/lang/ast.hpp"

namespace widenkit::oracle {

/// Values substituted for havoc and for unbounded init ranges: the part of
/// {-2..2} inside the window plus its two edges. Coverage is deliberately incomplete.
struct HavocWindow {
    Integer lo = -16;
    Integer hi = 16;

    [[nodiscard]] std::vector<Integer> samples() const;
};

struct ExplorationBounds {
    std::size_t max_steps = 100'000;  // transitions executed
    std::size_t max_states = 100'000; // distinct (control point, state) configurations
    std::optional<HavocWindow> havoc_window = HavocWindow{};
};

/// The bounds are unusable for this program (e.g. an unbounded init range with no havoc window).
class ConfigurationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Report and exploration disagree on the program's loops.
class StructuralError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Exploration {
    std::map<int, std::set<ConcreteState>> loop_heads; // every loop id is present, possibly empty
    bool truncated = false;
    std::size_t steps = 0;
    std::size_t configurations = 0;

    [[nodiscard]] std::size_t state_count() const;
};

Exploration explore(const lang::Program& program, const ExplorationBounds& bounds = {});

struct Counterexample {
    int loop_id;
    ConcreteState state;
};

struct Verdict {
    std::vector<Counterexample> counterexamples;
    std::size_t states_checked = 0;

    [[nodiscard]] bool pass() const { return counterexamples.empty(); }
};

/// Passes iff every recorded loop-head state lies in that loop's invariant.
/// Throws StructuralError when the loop ids differ.
Verdict check_soundness(const lang::AnalysisReport& report, const Exploration& concrete);

std::string to_string(const ConcreteState& state); // "x = 51, y = 0"

} // namespace widenkit::oracle
