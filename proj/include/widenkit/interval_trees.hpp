// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "widenkit/combinators.hpp"
#include "widenkit/env.hpp"
#include "widenkit/interval.hpp"
#include "widenkit/widening.hpp"

namespace widenkit {

using IntervalNode = WideningNode<Interval>;
using EnvNode = WideningNode<AbstractEnv>;
using IntervalRamp = Ramp<IntervalDomain>;

/// Chains of Next answers from a brutal-widening node: each one turns at least
/// one finite bound infinite, plus one extra step out of ⊥.
std::size_t brutal_depth_bound(const Interval& start);

/// classic_to_tree over the brutal interval widening, with its depth bound.
IntervalNode brutal_interval_tree(const Interval& start);

/// classic_to_tree with join as the "widening". Not well-founded on unbounded
/// growth: pure Kleene iteration, only stopped by fuel.
IntervalNode kleene_interval_tree(const Interval& start);

/// Upper-bound thresholds lifted to intervals above `entry`: the ramp
/// ⟨entry, [lo, t1], [lo, t2], …⟩ keeping only thresholds t > entry.hi.
/// ⊥ or an entry with hi = +inf yields ⟨entry⟩.
/// Throws std::invalid_argument unless thresholds are strictly ascending.
IntervalRamp threshold_ramp(const Interval& entry, const std::vector<Integer>& thresholds);

/// The n-ary product widening over an environment's bindings. A variable whose
/// query is ⊑ its proposal keeps its node; every other variable steps. A ⊥
/// query converges immediately. Queries over a different variable set throw
/// std::invalid_argument, as does a duplicated variable.
EnvNode pointwise_env_widening(std::vector<std::pair<std::string, IntervalNode>> per_var);

} // namespace widenkit
