// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

// Widening systems as lazily built well-founded trees.
//
// A node carries a proposal û and a branch map. The analysis queries the node
// with some v̂ (in practice φ̂(û)); the node either answers Converged, asserting
// v̂ ⊑ û, or hands back the next node. Children exist only once a query
// produces them; no tree is ever materialized.
//
// Well-foundedness of the tree (every chain of Next answers is finite) is a
// construction obligation on whoever builds the branch map. The shipped
// builders each document their bound, and the solver enforces a fuel budget
// and re-checks every Converged answer, so a violation surfaces as a defect
// rather than a hang or a wrong result.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>

namespace widenkit {

template <typename E>
class WideningNode;

/// The answer to a query: Converged, or the next node of the tree.
template <typename E>
class Answer {
  public:
    static Answer converged() { return Answer{}; }
    static Answer next(WideningNode<E> node) { return Answer{std::make_shared<const WideningNode<E>>(std::move(node))}; }

    [[nodiscard]] bool is_converged() const { return next_ == nullptr; }
    [[nodiscard]] bool is_next() const { return next_ != nullptr; }

    /// Requires is_next().
    [[nodiscard]] const WideningNode<E>& next_node() const { return *next_; }

  private:
    Answer() = default;
    explicit Answer(std::shared_ptr<const WideningNode<E>> n) : next_(std::move(n)) {}

    std::shared_ptr<const WideningNode<E>> next_;
};

/// A tree node: the proposal û and the branch map v̂ ↦ Answer.
///
/// `depth_bound`, when set, is the node's promise on the longest chain of Next
/// answers reachable from it. The solver treats exceeding it like running out of
/// fuel.
template <typename E>
class WideningNode {
  public:
    using StepFn = std::function<Answer<E>(const E&)>;

    WideningNode(E proposal, StepFn step, std::optional<std::size_t> depth_bound = std::nullopt)
        : proposal_(std::move(proposal)), step_(std::make_shared<const StepFn>(std::move(step))),
          depth_bound_(depth_bound) {}

    [[nodiscard]] const E& proposal() const { return proposal_; }
    [[nodiscard]] std::optional<std::size_t> depth_bound() const { return depth_bound_; }

    [[nodiscard]] Answer<E> step(const E& v) const { return (*step_)(v); }

  private:
    E proposal_;
    std::shared_ptr<const StepFn> step_;
    std::optional<std::size_t> depth_bound_;
};

template <typename E>
WideningNode<E> make_node(E proposal, typename WideningNode<E>::StepFn step,
                          std::optional<std::size_t> depth_bound = std::nullopt) {
    return WideningNode<E>{std::move(proposal), std::move(step), depth_bound};
}

template <typename E>
Answer<E> step(const WideningNode<E>& node, const E& v) {
    return node.step(v);
}

template <typename E>
using WidenOp = std::function<E(const E&, const E&)>;

template <typename E>
using LeqFn = std::function<bool(const E&, const E&)>;

/// Depth bound of the classic tree rooted at a given proposal, if known.
template <typename E>
using DepthBoundFn = std::function<std::optional<std::size_t>(const E&)>;

/// Adapts a classic binary widening operator into a tree: the node labeled
/// `start` converges on v when leq(v, start), and otherwise moves to the node
/// labeled widen(start, v). Terminates iff the operator is ultimately
/// stationary on every sequence; otherwise only the solver's fuel stops it.
template <typename E>
WideningNode<E> classic_to_tree(WidenOp<E> widen, LeqFn<E> leq, E start, DepthBoundFn<E> depth_bound = {}) {
    std::optional<std::size_t> bound = depth_bound ? depth_bound(start) : std::nullopt;
    auto step = [widen, leq, depth_bound, start](const E& v) -> Answer<E> {
        if (leq(v, start)) {
            return Answer<E>::converged();
        }
        return Answer<E>::next(classic_to_tree(widen, leq, widen(start, v), depth_bound));
    };
    return WideningNode<E>{std::move(start), std::move(step), bound};
}

} // namespace widenkit
