// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "widenkit/env.hpp"
#include "widenkit/interval_trees.hpp"
#include "widenkit/lang/ast.hpp"
#include "widenkit/solver.hpp"

namespace widenkit::lang {

/// How each loop's widening tree is built. Every loop gets a fresh tree rooted
/// at its entry environment.
struct WideningStrategy {
    enum class Kind {
        Naive,  // brutal interval widening per variable
        Ramp,   // upper-bound thresholds, then brutal widening
        Delay,  // `delay` joins between steps of the inner strategy
        Kleene, // join only: no widening at all; diverges on unbounded loops
        Broken, // converges on every query; for exercising the defect path
    };

    Kind kind = Kind::Naive;
    std::vector<Integer> thresholds;                            // Ramp: shared by every variable
    std::map<std::string, std::vector<Integer>> var_thresholds; // Ramp: per-variable override
    std::size_t delay = 0;                                      // Delay
    std::shared_ptr<const WideningStrategy> inner;              // Delay; Naive when null

    static WideningStrategy of(Kind k) {
        WideningStrategy s;
        s.kind = k;
        return s;
    }
    static WideningStrategy naive() { return {}; }
    static WideningStrategy ramp(std::vector<Integer> thresholds);
    static WideningStrategy delayed(std::size_t n, WideningStrategy inner = naive());
    static WideningStrategy kleene() { return of(Kind::Kleene); }
    static WideningStrategy broken() { return of(Kind::Broken); }

    /// "naive", "ramp", "delay(5, naive)", …
    [[nodiscard]] std::string name() const;

    /// The widening tree for one loop, seeded at its entry env over `vars`.
    /// Throws std::invalid_argument on thresholds that are not strictly ascending.
    [[nodiscard]] EnvNode build(const AbstractEnv& entry, const std::vector<std::string>& vars) const;
};

struct LoopInvariant {
    int id = 0;
    int line = 0;
    AbstractEnv env;

    friend bool operator==(const LoopInvariant&, const LoopInvariant&) = default;
};

struct AnalysisReport {
    std::vector<LoopInvariant> loops; // ordered by id
    AbstractEnv final_env;
    std::string strategy;
    std::size_t steps = 0; // solver steps summed over every loop solve, nested re-solves included

    [[nodiscard]] const LoopInvariant* loop(int id) const;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// A solver defect, tagged with the loop whose fixpoint was being solved.
class AnalysisError : public std::runtime_error {
  public:
    AnalysisError(int loop_id, int line, DefectKind kind, const std::string& detail);

    [[nodiscard]] int loop_id() const { return loop_id_; }
    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] DefectKind kind() const { return kind_; }

  private:
    int loop_id_;
    int line_;
    DefectKind kind_;
};

/// The environment declared by the program's init clauses.
AbstractEnv initial_env(const Program& program);

/// Per-analysis state threaded through the transfer functions.
class Analyzer {
  public:
    Analyzer(const Program& program, WideningStrategy strategy, SolverOptions options = {});

    /// Abstract post of one statement. A loop is solved to a post-fixpoint of
    /// û ↦ entry ⊔ body(refine(û, guard)); its invariant is recorded and the
    /// exit env is refine(û, ¬guard).
    AbstractEnv transfer(const AbstractEnv& env, const Stmt& stmt);
    AbstractEnv transfer(const AbstractEnv& env, const Block& block);

    /// Invariants recorded so far. A nested loop is re-solved on every
    /// evaluation of its enclosing loop's body; the last solve wins, and it
    /// comes from the enclosing loop's final (post-fixpoint) iterate.
    [[nodiscard]] const std::map<int, LoopInvariant>& invariants() const { return invariants_; }
    [[nodiscard]] std::size_t steps() const { return steps_; }

  private:
    AbstractEnv transfer_loop(const AbstractEnv& env, const While& loop, int line);

    const Program& program_;
    std::vector<std::string> vars_;
    WideningStrategy strategy_;
    SolverOptions options_;
    std::map<int, LoopInvariant> invariants_;
    std::size_t steps_ = 0;
};

AbstractEnv transfer_stmt(const Program& program, const AbstractEnv& env, const Stmt& stmt,
                          const WideningStrategy& strategy, const SolverOptions& options = {});

/// Runs the body from initial_env. Throws AnalysisError on a solver defect.
AnalysisReport analyze(const Program& program, const WideningStrategy& strategy, const SolverOptions& options = {});

} // namespace widenkit::lang
