// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

// Widening transformers: each takes one or more widening trees and returns a
// new one. All of them answer Converged exactly when the query is ⊑ the
// current proposal, checked before anything else.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "widenkit/domain.hpp"
#include "widenkit/widening.hpp"

namespace widenkit {

namespace detail {

inline std::optional<std::size_t> add_bounds(std::optional<std::size_t> a, std::optional<std::size_t> b) {
    if (!a || !b) {
        return std::nullopt;
    }
    return *a + *b;
}

} // namespace detail

/// A strictly ascending chain of threshold values z_1 ⊏ z_2 ⊏ … ⊏ z_n.
template <AbstractDomain D>
class Ramp {
  public:
    using E = typename D::element;

    Ramp() = default;

    /// Throws std::invalid_argument unless each value is strictly below the next.
    explicit Ramp(std::vector<E> values) : values_(std::move(values)) {
        for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
            if (!D::leq(values_[i], values_[i + 1]) || D::leq(values_[i + 1], values_[i])) {
                throw std::invalid_argument("ramp thresholds must form a strictly ascending chain");
            }
        }
    }

    [[nodiscard]] bool empty() const { return values_.empty(); }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const E& head() const { return values_.front(); }
    [[nodiscard]] const std::vector<E>& values() const { return values_; }

    /// The suffix starting at index `from`; suffixes of a valid ramp are valid.
    [[nodiscard]] Ramp suffix(std::size_t from) const {
        Ramp out;
        if (from < values_.size()) {
            out.values_.assign(values_.begin() + static_cast<std::ptrdiff_t>(from), values_.end());
        }
        return out;
    }

    [[nodiscard]] Ramp tail() const { return suffix(1); }

  private:
    std::vector<E> values_;
};

/// Longest suffix of the ramp whose head dominates `bound`: a front-to-back
/// scan that stops at the first threshold h with bound ⊑ h. Empty if none does.
template <AbstractDomain D>
Ramp<D> ramp_widening_search(const typename D::element& bound, const Ramp<D>& ramp) {
    for (std::size_t i = 0; i < ramp.size(); ++i) {
        if (D::leq(bound, ramp.values()[i])) {
            return ramp.suffix(i);
        }
    }
    return Ramp<D>{};
}

/// Tries the thresholds in order, falling back to `base` once none dominates
/// the query. An empty ramp is `base` itself.
///
/// Each Next answer either strictly shortens the remaining ramp or enters
/// `base`, so chains of Next are at most size() + depth(base) long.
template <AbstractDomain D>
WideningNode<typename D::element> ramp_widening(const Ramp<D>& ramp, const WideningNode<typename D::element>& base) {
    using E = typename D::element;
    if (ramp.empty()) {
        return base;
    }
    const E head = ramp.head();
    const Ramp<D> rest = ramp.tail();
    auto step = [head, rest, base](const E& v) -> Answer<E> {
        if (D::leq(v, head)) {
            return Answer<E>::converged();
        }
        return Answer<E>::next(ramp_widening<D>(ramp_widening_search<D>(v, rest), base));
    };
    return WideningNode<E>{head, std::move(step), detail::add_bounds(ramp.size(), base.depth_bound())};
}

namespace detail {

template <AbstractDomain D>
WideningNode<typename D::element> delayed_node(typename D::element label, std::size_t budget, std::size_t delay,
                                               WideningNode<typename D::element> base) {
    using E = typename D::element;
    std::optional<std::size_t> bound;
    if (auto b = base.depth_bound()) {
        bound = budget + *b * (delay + 1);
    }
    auto step = [label, budget, delay, base](const E& v) -> Answer<E> {
        if (D::leq(v, label)) {
            return Answer<E>::converged();
        }
        if (budget > 0) {
            return Answer<E>::next(delayed_node<D>(D::join(label, v), budget - 1, delay, base));
        }
        Answer<E> inner = base.step(v);
        if (inner.is_converged()) {
            // v ⊑ base proposal ⊑ label would have converged above; relay it
            // so the solver's leaf check reports the broken base.
            return inner;
        }
        const WideningNode<E>& next = inner.next_node();
        return Answer<E>::next(delayed_node<D>(next.proposal(), delay, delay, next));
    };
    return WideningNode<E>{std::move(label), std::move(step), bound};
}

} // namespace detail

/// Performs up to `delay` joins after each step of `base` before letting
/// `base` take its next step. With delay 0 this is `base`, answer for answer.
///
/// Between two base steps there are at most `delay` join steps, so chains of
/// Next are at most delay + depth(base)·(delay + 1) long.
template <AbstractDomain D>
WideningNode<typename D::element> delayed_widening_each_step(std::size_t delay,
                                                             const WideningNode<typename D::element>& base) {
    return detail::delayed_node<D>(base.proposal(), delay, delay, base);
}

/// Componentwise order and join on pairs.
template <AbstractDomain D1, AbstractDomain D2>
struct ProductDomain {
    using element = std::pair<typename D1::element, typename D2::element>;
    using concrete = std::pair<typename D1::concrete, typename D2::concrete>;

    static bool leq(const element& a, const element& b) {
        return D1::leq(a.first, b.first) && D2::leq(a.second, b.second);
    }
    static element join(const element& a, const element& b) {
        return {D1::join(a.first, b.first), D2::join(a.second, b.second)};
    }
    static element bottom() { return {D1::bottom(), D2::bottom()}; }
    static bool is_bottom(const element& a) { return D1::is_bottom(a.first) && D2::is_bottom(a.second); }
    static bool concretizes(const element& a, const concrete& c) {
        return D1::concretizes(a.first, c.first) && D2::concretizes(a.second, c.second);
    }
};

/// Widening on pairs. A coordinate whose query is ⊑ its proposal keeps its
/// node; every other coordinate takes one step. Both ⊑ means Converged.
/// Every Next steps at least one coordinate, so chains are at most
/// depth(w1) + depth(w2) long.
template <AbstractDomain D1, AbstractDomain D2>
WideningNode<std::pair<typename D1::element, typename D2::element>>
product_widening(const WideningNode<typename D1::element>& w1, const WideningNode<typename D2::element>& w2) {
    using E = std::pair<typename D1::element, typename D2::element>;
    auto step = [w1, w2](const E& v) -> Answer<E> {
        const bool first_ok = D1::leq(v.first, w1.proposal());
        const bool second_ok = D2::leq(v.second, w2.proposal());
        if (first_ok && second_ok) {
            return Answer<E>::converged();
        }
        bool moved = false;
        auto advance = [&moved](const auto& node, const auto& query, bool ok) {
            if (ok) {
                return node;
            }
            auto a = node.step(query);
            if (a.is_converged()) {
                return node;
            }
            moved = true;
            return a.next_node();
        };
        auto n1 = advance(w1, v.first, first_ok);
        auto n2 = advance(w2, v.second, second_ok);
        if (!moved) {
            // A coordinate claimed convergence without ⊑; pass it on for the solver's leaf check.
            return Answer<E>::converged();
        }
        return Answer<E>::next(product_widening<D1, D2>(n1, n2));
    };
    return WideningNode<E>{E{w1.proposal(), w2.proposal()}, std::move(step),
                           detail::add_bounds(w1.depth_bound(), w2.depth_bound())};
}

} // namespace widenkit
