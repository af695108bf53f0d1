// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include "widenkit/env.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace widenkit {

AbstractEnv::AbstractEnv(std::vector<Binding> bindings) : bottom_(false), bindings_(std::move(bindings)) {
    std::set<std::string> seen;
    for (const auto& [var, value] : bindings_) {
        if (!seen.insert(var).second) {
            throw std::invalid_argument("variable bound twice: " + var);
        }
        if (value.is_bottom()) {
            bottom_ = true;
        }
    }
    if (bottom_) {
        bindings_.clear();
    }
}

AbstractEnv AbstractEnv::top(const std::vector<std::string>& vars) {
    std::vector<Binding> bindings;
    bindings.reserve(vars.size());
    for (const auto& v : vars) {
        bindings.emplace_back(v, Interval::top());
    }
    return AbstractEnv{std::move(bindings)};
}

std::vector<std::string> AbstractEnv::variables() const {
    std::vector<std::string> out;
    out.reserve(bindings_.size());
    for (const auto& b : bindings_) {
        out.push_back(b.first);
    }
    return out;
}

const Interval* AbstractEnv::find(const std::string& var) const {
    for (const auto& [name, value] : bindings_) {
        if (name == var) {
            return &value;
        }
    }
    return nullptr;
}

bool AbstractEnv::has(const std::string& var) const { return find(var) != nullptr; }

Interval AbstractEnv::get(const std::string& var) const {
    if (bottom_) {
        return Interval::bottom();
    }
    if (const Interval* v = find(var)) {
        return *v;
    }
    throw std::out_of_range("unknown variable: " + var);
}

AbstractEnv AbstractEnv::with(const std::string& var, Interval value) const {
    if (bottom_) {
        return *this;
    }
    std::vector<Binding> next = bindings_;
    for (auto& [name, iv] : next) {
        if (name == var) {
            iv = std::move(value);
            return AbstractEnv{std::move(next)};
        }
    }
    throw std::out_of_range("unknown variable: " + var);
}

std::string AbstractEnv::to_string() const {
    if (bottom_) {
        return "bottom";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : bindings_) {
        os << (first ? "" : ", ") << name << " ∈ " << value;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbstractEnv& env) { return os << env.to_string(); }

namespace {

void require_same_variables(const AbstractEnv& a, const AbstractEnv& b) {
    const auto& x = a.bindings();
    const auto& y = b.bindings();
    bool same = x.size() == y.size();
    for (std::size_t i = 0; same && i < x.size(); ++i) {
        same = x[i].first == y[i].first;
    }
    if (!same) {
        throw std::invalid_argument("environments over different variable sets");
    }
}

} // namespace

bool env_leq(const AbstractEnv& a, const AbstractEnv& b) {
    if (a.is_bottom()) {
        return true;
    }
    if (b.is_bottom()) {
        return false;
    }
    require_same_variables(a, b);
    for (std::size_t i = 0; i < a.bindings().size(); ++i) {
        if (!a.bindings()[i].second.leq(b.bindings()[i].second)) {
            return false;
        }
    }
    return true;
}

AbstractEnv env_join(const AbstractEnv& a, const AbstractEnv& b) {
    if (a.is_bottom()) {
        return b;
    }
    if (b.is_bottom()) {
        return a;
    }
    require_same_variables(a, b);
    std::vector<AbstractEnv::Binding> out;
    out.reserve(a.bindings().size());
    for (std::size_t i = 0; i < a.bindings().size(); ++i) {
        out.emplace_back(a.bindings()[i].first, a.bindings()[i].second.join(b.bindings()[i].second));
    }
    return AbstractEnv{std::move(out)};
}

bool concretizes(const AbstractEnv& env, const ConcreteState& state) {
    if (env.is_bottom()) {
        return false;
    }
    for (const auto& [name, value] : env.bindings()) {
        auto it = state.find(name);
        if (it == state.end() || !value.contains(it->second)) {
            return false;
        }
    }
    return true;
}

Interval interval_affine_eval(const AbstractEnv& env, const AffineExpr& expr) {
    if (env.is_bottom()) {
        return Interval::bottom();
    }
    Interval acc = Interval::singleton(expr.constant);
    for (const auto& [coef, var] : expr.terms) {
        acc = acc + env.get(var).scaled(coef);
    }
    return acc;
}

namespace {

// Refines env by e ≤ 0. For each variable x with coefficient a ≠ 0, writes
// e = a·x + rest and uses a·x ≤ -rest ≤ -min(rest). Every bound is computed
// from the input env, so one pass is sound regardless of variable order.
AbstractEnv refine_nonpositive(const AbstractEnv& env, const AffineExpr& e) {
    if (env.is_bottom()) {
        return env;
    }
    const AffineExpr expr = e.normalized();
    if (expr.terms.empty()) {
        return expr.constant <= 0 ? env : AbstractEnv::bottom();
    }
    AbstractEnv out = env;
    for (std::size_t i = 0; i < expr.terms.size(); ++i) {
        const auto& [coef, var] = expr.terms[i];
        AffineExpr rest{expr.constant, {}};
        for (std::size_t j = 0; j < expr.terms.size(); ++j) {
            if (j != i) {
                rest.terms.push_back(expr.terms[j]);
            }
        }
        const Interval rest_range = interval_affine_eval(env, rest);
        if (rest_range.is_bottom() || rest_range.lo().is_neg_inf()) {
            continue;
        }
        const Integer bound = -rest_range.lo().value(); // a·x ≤ bound
        const Interval allowed = coef > 0 ? Interval::at_most(floor_div(bound, coef))
                                          : Interval::at_least(ceil_div(bound, coef));
        out = out.with(var, out.get(var).meet(allowed));
        if (out.is_bottom()) {
            return out;
        }
    }
    return out;
}

// Refines env by e ≠ 0. Only a single-variable e can trim an endpoint.
AbstractEnv refine_nonzero(const AbstractEnv& env, const AffineExpr& e) {
    if (env.is_bottom()) {
        return env;
    }
    const AffineExpr expr = e.normalized();
    if (expr.terms.empty()) {
        return expr.constant != 0 ? env : AbstractEnv::bottom();
    }
    if (expr.terms.size() != 1) {
        return env;
    }
    const auto& [coef, var] = expr.terms.front();
    const Integer num = -expr.constant;
    if (num % coef != 0) {
        return env;
    }
    const Integer forbidden = num / coef;
    Interval iv = env.get(var);
    if (iv.lo() == ExtInt{forbidden}) {
        iv = iv.meet(Interval::at_least(forbidden + 1));
    }
    if (!iv.is_bottom() && iv.hi() == ExtInt{forbidden}) {
        iv = iv.meet(Interval::at_most(forbidden - 1));
    }
    return env.with(var, iv);
}

} // namespace

AbstractEnv env_refine(const AbstractEnv& env, const Cond& cond) {
    const AffineExpr diff = cond.lhs - cond.rhs; // cond is diff ⋈ 0
    switch (cond.op) {
    case CmpOp::Le: return refine_nonpositive(env, diff);
    case CmpOp::Lt: return refine_nonpositive(env, diff + AffineExpr::constant_of(1));
    case CmpOp::Ge: return refine_nonpositive(env, diff.scaled(-1));
    case CmpOp::Gt: return refine_nonpositive(env, diff.scaled(-1) + AffineExpr::constant_of(1));
    case CmpOp::Eq: return refine_nonpositive(refine_nonpositive(env, diff), diff.scaled(-1));
    case CmpOp::Ne: return refine_nonzero(env, diff);
    }
    return env;
}

} // namespace widenkit
