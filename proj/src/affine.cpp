// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include "widenkit/affine.hpp"

#include <sstream>
#include <stdexcept>

namespace widenkit {

AffineExpr AffineExpr::normalized() const {
    std::map<std::string, Integer> merged;
    for (const auto& [coef, var] : terms) {
        merged[var] += coef;
    }
    AffineExpr out{constant, {}};
    for (auto& [var, coef] : merged) {
        if (coef != 0) {
            out.terms.emplace_back(coef, var);
        }
    }
    return out;
}

Integer AffineExpr::evaluate(const std::map<std::string, Integer>& state) const {
    Integer v = constant;
    for (const auto& [coef, var] : terms) {
        v += coef * state.at(var);
    }
    return v;
}

std::string AffineExpr::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [coef, var] : terms) {
        if (!first) {
            os << (coef < 0 ? " - " : " + ");
        } else if (coef < 0) {
            os << '-';
        }
        const Integer mag = abs(coef);
        if (mag != 1) {
            os << mag << '*';
        }
        os << var;
        first = false;
    }
    if (first) {
        os << constant;
    } else if (constant != 0) {
        os << (constant < 0 ? " - " : " + ") << Integer(abs(constant));
    }
    return os.str();
}

AffineExpr operator+(AffineExpr a, const AffineExpr& b) {
    a.constant += b.constant;
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
}

AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return std::move(a) + b.scaled(-1); }

AffineExpr AffineExpr::scaled(const Integer& k) const {
    AffineExpr out{constant * k, terms};
    for (auto& term : out.terms) {
        term.first *= k;
    }
    return out;
}

CmpOp negate(CmpOp op) {
    switch (op) {
    case CmpOp::Lt: return CmpOp::Ge;
    case CmpOp::Le: return CmpOp::Gt;
    case CmpOp::Gt: return CmpOp::Le;
    case CmpOp::Ge: return CmpOp::Lt;
    case CmpOp::Eq: return CmpOp::Ne;
    case CmpOp::Ne: return CmpOp::Eq;
    }
    throw std::logic_error("bad comparison operator");
}

const char* to_string(CmpOp op) {
    switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    }
    return "?";
}

bool compare(const Integer& a, CmpOp op, const Integer& b) {
    switch (op) {
    case CmpOp::Lt: return a < b;
    case CmpOp::Le: return a <= b;
    case CmpOp::Gt: return a > b;
    case CmpOp::Ge: return a >= b;
    case CmpOp::Eq: return a == b;
    case CmpOp::Ne: return a != b;
    }
    return false;
}

std::string Cond::to_string() const { return lhs.to_string() + " " + widenkit::to_string(op) + " " + rhs.to_string(); }

} // namespace widenkit
