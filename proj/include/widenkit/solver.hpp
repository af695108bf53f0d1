// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "widenkit/domain.hpp"
#include "widenkit/widening.hpp"

namespace widenkit {

inline constexpr std::size_t kDefaultFuel = 10'000;
inline constexpr std::size_t kDefaultTraceCapacity = 64;

struct SolverOptions {
    std::size_t fuel = kDefaultFuel;
    std::size_t trace_capacity = kDefaultTraceCapacity;
};

/// A checked post-fixpoint: D::leq(f(value), value) held when it was returned.
template <typename E>
struct PostFixpointResult {
    E value;
    bool check_passed = false;
    std::size_t steps_taken = 0;
    std::vector<E> proposal_trace; // the most recent proposals, oldest first
};

enum class DefectKind { BrokenWidening, FuelExhausted };

const char* to_string(DefectKind kind);

/// A widening tree broke its contract. Never a result.
class SolverDefect : public std::runtime_error {
  public:
    SolverDefect(DefectKind kind, std::size_t steps, const std::string& what)
        : std::runtime_error(what), kind_(kind), steps_(steps) {}

    [[nodiscard]] DefectKind kind() const { return kind_; }
    [[nodiscard]] std::size_t steps() const { return steps_; }

  private:
    DefectKind kind_;
    std::size_t steps_;
};

/// A Converged answer for a query v that is not ⊑ the answering node's proposal.
template <typename E>
class BrokenWidening : public SolverDefect {
  public:
    BrokenWidening(E query, E proposal, std::size_t steps)
        : SolverDefect(DefectKind::BrokenWidening, steps, "broken widening: converged on a query not below the proposal"),
          query_(std::move(query)), proposal_(std::move(proposal)) {}

    [[nodiscard]] const E& query() const { return query_; }
    [[nodiscard]] const E& proposal() const { return proposal_; }

  private:
    E query_;
    E proposal_;
};

/// The step budget (fuel, or the root's declared depth bound) ran out.
template <typename E>
class FuelExhausted : public SolverDefect {
  public:
    FuelExhausted(E last_proposal, std::vector<E> trace, std::size_t steps)
        : SolverDefect(DefectKind::FuelExhausted, steps,
                       "fuel exhausted after " + std::to_string(steps) + " steps without convergence"),
          last_proposal_(std::move(last_proposal)), trace_(std::move(trace)) {}

    [[nodiscard]] const E& last_proposal() const { return last_proposal_; }
    [[nodiscard]] const std::vector<E>& trace() const { return trace_; }

  private:
    E last_proposal_;
    std::vector<E> trace_;
};

/// Walks the widening tree from `root`: at the node labeled û it queries
/// step(f(û)), follows Next answers, and stops at the first Converged answer,
/// returning û. Neither monotonicity of f nor ascending proposals are assumed.
///
/// Every Converged answer is re-checked with D::leq; a failure throws
/// BrokenWidening. At most options.fuel queries are made (fewer when the root
/// declares a depth bound); running out throws FuelExhausted.
template <AbstractDomain D>
PostFixpointResult<typename D::element> abstract_lfp(const std::function<typename D::element(const typename D::element&)>& f,
                                                     const WideningNode<typename D::element>& root,
                                                     const SolverOptions& options = {}) {
    using E = typename D::element;
    if (options.fuel == 0) {
        throw std::invalid_argument("fuel must be positive");
    }
    std::size_t budget = options.fuel;
    if (auto bound = root.depth_bound()) {
        budget = std::min(budget, *bound + 1);
    }

    std::deque<E> trace;
    auto remember = [&](const E& proposal) {
        if (options.trace_capacity == 0) {
            return;
        }
        if (trace.size() == options.trace_capacity) {
            trace.pop_front();
        }
        trace.push_back(proposal);
    };

    WideningNode<E> node = root;
    for (std::size_t steps = 1; steps <= budget; ++steps) {
        remember(node.proposal());
        E v = f(node.proposal());
        Answer<E> answer = node.step(v);
        if (answer.is_next()) {
            node = answer.next_node();
            continue;
        }
        if (!D::leq(v, node.proposal())) {
            throw BrokenWidening<E>(std::move(v), node.proposal(), steps);
        }
        return PostFixpointResult<E>{node.proposal(), true, steps, {trace.begin(), trace.end()}};
    }
    throw FuelExhausted<E>(node.proposal(), {trace.begin(), trace.end()}, budget);
}

inline const char* to_string(DefectKind kind) {
    switch (kind) {
    case DefectKind::BrokenWidening: return "broken widening";
    case DefectKind::FuelExhausted: return "fuel exhausted";
    }
    return "unknown defect";
}

} // namespace widenkit
