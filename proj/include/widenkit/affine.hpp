// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "widenkit/number.hpp"

namespace widenkit {

/// constant + Σ coefficient·variable, over unbounded integers.
struct AffineExpr {
    Integer constant{0};
    std::vector<std::pair<Integer, std::string>> terms;

    static AffineExpr constant_of(Integer c) { return AffineExpr{std::move(c), {}}; }
    static AffineExpr variable(std::string name) { return AffineExpr{0, {{Integer{1}, std::move(name)}}}; }

    /// Merges repeated variables and drops zero coefficients. Terms are sorted by name.
    [[nodiscard]] AffineExpr normalized() const;
    [[nodiscard]] bool is_constant() const { return normalized().terms.empty(); }

    /// Exact value under a total assignment. Throws std::out_of_range on an unbound variable.
    [[nodiscard]] Integer evaluate(const std::map<std::string, Integer>& state) const;

    [[nodiscard]] std::string to_string() const;

    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b);
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b);
    [[nodiscard]] AffineExpr scaled(const Integer& k) const;

    friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };

CmpOp negate(CmpOp op);
const char* to_string(CmpOp op);
bool compare(const Integer& a, CmpOp op, const Integer& b);

/// lhs ⋈ rhs.
struct Cond {
    AffineExpr lhs;
    CmpOp op{CmpOp::Lt};
    AffineExpr rhs;

    [[nodiscard]] Cond negated() const { return Cond{lhs, negate(op), rhs}; }
    [[nodiscard]] bool holds(const std::map<std::string, Integer>& state) const {
        return compare(lhs.evaluate(state), op, rhs.evaluate(state));
    }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Cond&, const Cond&) = default;
};

} // namespace widenkit
