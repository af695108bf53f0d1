// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

// The chain domain 1 ⊏ 2 ⊏ 3 ⊏ … ⊏ +∞, with 0 as an added bottom.
// An element n denotes the integers {1, …, n}; +∞ denotes all positive integers.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "widenkit/domain.hpp"
#include "widenkit/widening.hpp"

namespace widenkit {

class Chain {
  public:
    constexpr Chain() = default;
    constexpr explicit Chain(std::uint64_t n) : n_(n) {}
    static constexpr Chain infinity() {
        Chain c;
        c.inf_ = true;
        return c;
    }

    [[nodiscard]] constexpr bool is_infinite() const { return inf_; }
    [[nodiscard]] constexpr bool is_bottom() const { return !inf_ && n_ == 0; }
    [[nodiscard]] constexpr std::uint64_t value() const { return n_; }

    [[nodiscard]] constexpr Chain successor() const { return inf_ ? *this : Chain{n_ + 1}; }

    friend constexpr bool operator==(const Chain&, const Chain&) = default;
    friend constexpr std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
        if (a.inf_ || b.inf_) {
            return a.inf_ <=> b.inf_;
        }
        return a.n_ <=> b.n_;
    }

    [[nodiscard]] std::string to_string() const { return inf_ ? "+inf" : std::to_string(n_); }

  private:
    std::uint64_t n_{0};
    bool inf_{false};
};

inline std::ostream& operator<<(std::ostream& os, const Chain& c) { return os << c.to_string(); }

struct ChainDomain {
    using element = Chain;
    using concrete = std::uint64_t;

    static bool leq(const Chain& a, const Chain& b) { return a <= b; }
    static Chain join(const Chain& a, const Chain& b) { return a <= b ? b : a; }
    static Chain bottom() { return Chain{}; }
    static bool is_bottom(const Chain& a) { return a.is_bottom(); }
    static bool concretizes(const Chain& a, std::uint64_t c) { return c >= 1 && (a.is_infinite() || c <= a.value()); }
};
static_assert(AbstractDomain<ChainDomain>);

/// The classic chain widening: n ▽ m = n if m ⊑ n, else +∞.
inline Chain chain_widen(const Chain& n, const Chain& m) { return m <= n ? n : Chain::infinity(); }

/// The chain widening as a tree. Any finite label is at most one step from +∞.
inline WideningNode<Chain> chain_classic_tree(Chain start) {
    return classic_to_tree<Chain>(chain_widen, ChainDomain::leq, start, [](const Chain& c) -> std::optional<std::size_t> {
        return c.is_infinite() ? 0 : 1;
    });
}

/// The terminal node: a proposal of +∞ converges on every query.
inline WideningNode<Chain> chain_terminal_node() {
    return make_node<Chain>(Chain::infinity(), [](const Chain&) { return Answer<Chain>::converged(); }, 0);
}

/// A tree that extrapolates before giving up: on a query v ⋢ u it proposes
/// v + 1 while `lookahead` lasts, then +∞. With lookahead 1, the root labeled 1
/// answers 2 with the node labeled 3, and that node answers 4 with +∞.
inline WideningNode<Chain> chain_lookahead_tree(Chain start, std::size_t lookahead = 1) {
    if (start.is_infinite()) {
        return chain_terminal_node();
    }
    auto step = [start, lookahead](const Chain& v) -> Answer<Chain> {
        if (v <= start) {
            return Answer<Chain>::converged();
        }
        if (lookahead == 0 || v.is_infinite()) {
            return Answer<Chain>::next(chain_terminal_node());
        }
        return Answer<Chain>::next(chain_lookahead_tree(v.successor(), lookahead - 1));
    };
    return WideningNode<Chain>{start, std::move(step), lookahead + 1};
}

} // namespace widenkit
