// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "widenkit/affine.hpp"
#include "widenkit/domain.hpp"
#include "widenkit/interval.hpp"

namespace widenkit {

/// A concrete program state: one integer per declared variable.
using ConcreteState = std::map<std::string, Integer>;

/// ⊥, or one interval per declared variable in declaration order.
///
/// An environment with any ⊥ binding is normalized to ⊥ on construction, so a
/// non-bottom environment never holds a ⊥ coordinate. ⊥ carries no bindings.
class AbstractEnv {
  public:
    using Binding = std::pair<std::string, Interval>;

    /// Bottom.
    AbstractEnv() = default;

    /// Throws std::invalid_argument on a repeated variable name.
    explicit AbstractEnv(std::vector<Binding> bindings);

    static AbstractEnv bottom() { return AbstractEnv{}; }
    static AbstractEnv top(const std::vector<std::string>& vars);

    [[nodiscard]] bool is_bottom() const { return bottom_; }
    [[nodiscard]] const std::vector<Binding>& bindings() const { return bindings_; }
    [[nodiscard]] std::vector<std::string> variables() const;
    [[nodiscard]] bool has(const std::string& var) const;

    /// The binding of var; ⊥ when the environment is ⊥. Throws std::out_of_range on unknown var.
    [[nodiscard]] Interval get(const std::string& var) const;

    /// Copy with var rebound (normalizing). Rebinding in ⊥ stays ⊥.
    [[nodiscard]] AbstractEnv with(const std::string& var, Interval value) const;

    friend bool operator==(const AbstractEnv& a, const AbstractEnv& b) {
        return a.bottom_ == b.bottom_ && a.bindings_ == b.bindings_;
    }

    /// "x ∈ [0, +inf], y ∈ [1, 1]" or "bottom".
    [[nodiscard]] std::string to_string() const;

  private:
    [[nodiscard]] const Interval* find(const std::string& var) const;

    bool bottom_{true};
    std::vector<Binding> bindings_;
};

std::ostream& operator<<(std::ostream& os, const AbstractEnv& env);

// Pointwise lifts. Non-bottom operands must bind the same variables;
// a mismatch throws std::invalid_argument.
bool env_leq(const AbstractEnv& a, const AbstractEnv& b);
AbstractEnv env_join(const AbstractEnv& a, const AbstractEnv& b);
inline AbstractEnv env_bottom() { return AbstractEnv::bottom(); }
bool concretizes(const AbstractEnv& env, const ConcreteState& state);

Interval interval_affine_eval(const AbstractEnv& env, const AffineExpr& expr);

/// Best-effort sound refinement of env by cond: every state of γ(env) satisfying
/// cond is in γ(result), and result ⊑ env.
AbstractEnv env_refine(const AbstractEnv& env, const Cond& cond);

struct EnvDomain {
    using element = AbstractEnv;
    using concrete = ConcreteState;

    static bool leq(const AbstractEnv& a, const AbstractEnv& b) { return env_leq(a, b); }
    static AbstractEnv join(const AbstractEnv& a, const AbstractEnv& b) { return env_join(a, b); }
    static AbstractEnv bottom() { return AbstractEnv::bottom(); }
    static bool is_bottom(const AbstractEnv& a) { return a.is_bottom(); }
    static bool concretizes(const AbstractEnv& a, const ConcreteState& c) { return widenkit::concretizes(a, c); }
};
static_assert(AbstractDomain<EnvDomain>);

} // namespace widenkit
