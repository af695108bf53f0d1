// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// interval arithmetic under test; expected values come from enumerating
// concrete integers.

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "widenkit/chain.hpp"
#include "widenkit/env.hpp"
#include "widenkit/interval.hpp"

namespace widenkit::test {

/// Endpoints {-inf, -2, …, 2, +inf}.
inline std::vector<ExtInt> endpoint_grid() {
    return {ExtInt::neg_inf(), -2, -1, 0, 1, 2, ExtInt::pos_inf()};
}

/// ⊥ plus every well-formed interval with endpoints from endpoint_grid().
inline std::vector<Interval> interval_grid() {
    std::vector<Interval> out{Interval::bottom()};
    for (const auto& lo : endpoint_grid()) {
        for (const auto& hi : endpoint_grid()) {
            if (!lo.is_pos_inf() && !hi.is_neg_inf() && lo <= hi) {
                out.emplace_back(lo, hi);
            }
        }
    }
    return out;
}

/// Concrete probe values; a window covering every finite grid endpoint ±2.
inline std::vector<Integer> probe_values(int radius = 4) {
    std::vector<Integer> out;
    for (int i = -radius; i <= radius; ++i) {
        out.emplace_back(i);
    }
    return out;
}

/// The smallest interval holding every probe value satisfying `member`, where
/// membership of the window's edge values stands in for an unbounded side.
/// Valid whenever the true set is an interval whose finite ends lie strictly
/// inside the window.
inline Interval enclosing_interval(const std::function<bool(const Integer&)>& member, int radius) {
    std::optional<Integer> lo;
    std::optional<Integer> hi;
    for (int i = -radius; i <= radius; ++i) {
        if (member(Integer(i))) {
            if (!lo) {
                lo = i;
            }
            hi = i;
        }
    }
    if (!lo) {
        return Interval::bottom();
    }
    ExtInt l = *lo == -radius ? ExtInt::neg_inf() : ExtInt{*lo};
    ExtInt h = *hi == radius ? ExtInt::pos_inf() : ExtInt{*hi};
    return Interval{l, h};
}

/// Every total assignment of `vars` with each value drawn from [lo, hi].
inline std::vector<ConcreteState> all_states(const std::vector<std::string>& vars, int lo, int hi) {
    std::vector<ConcreteState> out{ConcreteState{}};
    for (const auto& v : vars) {
        std::vector<ConcreteState> next;
        for (const auto& s : out) {
            for (int x = lo; x <= hi; ++x) {
                ConcreteState t = s;
                t[v] = x;
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    return out;
}

class Random {
  public:
    explicit Random(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    /// ⊥ with small probability, else an interval with finite ends in [-range, range] or infinite ends.
    Interval interval(int range = 5) {
        if (coin(0.1)) {
            return Interval::bottom();
        }
        int a = uniform(-range, range);
        int b = uniform(-range, range);
        if (a > b) {
            std::swap(a, b);
        }
        ExtInt lo = coin(0.15) ? ExtInt::neg_inf() : ExtInt{a};
        ExtInt hi = coin(0.15) ? ExtInt::pos_inf() : ExtInt{b};
        return Interval{lo, hi};
    }

    AbstractEnv env(const std::vector<std::string>& vars, int range = 5) {
        std::vector<AbstractEnv::Binding> b;
        for (const auto& v : vars) {
            Interval iv = interval(range);
            // Keep ⊥ rare at the environment level.
            if (iv.is_bottom() && coin(0.8)) {
                iv = Interval::top();
            }
            b.emplace_back(v, iv);
        }
        return AbstractEnv{std::move(b)};
    }

    ConcreteState state(const std::vector<std::string>& vars, int range = 6) {
        ConcreteState s;
        for (const auto& v : vars) {
            s[v] = uniform(-range, range);
        }
        return s;
    }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

/// {1, …, n, +∞} in the chain domain.
inline std::vector<Chain> chain_grid(std::uint64_t n) {
    std::vector<Chain> out;
    for (std::uint64_t i = 1; i <= n; ++i) {
        out.emplace_back(i);
    }
    out.push_back(Chain::infinity());
    return out;
}

} // namespace widenkit::test
