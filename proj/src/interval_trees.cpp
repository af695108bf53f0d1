// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include "widenkit/interval_trees.hpp"

#include <set>
#include <stdexcept>

namespace widenkit {

std::size_t brutal_depth_bound(const Interval& start) {
    if (start.is_bottom()) {
        return 3;
    }
    return (start.lo().is_finite() ? 1 : 0) + (start.hi().is_finite() ? 1 : 0);
}

IntervalNode brutal_interval_tree(const Interval& start) {
    return classic_to_tree<Interval>(interval_widen_brutal, interval_leq, start,
                                     [](const Interval& u) -> std::optional<std::size_t> { return brutal_depth_bound(u); });
}

IntervalNode kleene_interval_tree(const Interval& start) {
    return classic_to_tree<Interval>(interval_join, interval_leq, start);
}

IntervalRamp threshold_ramp(const Interval& entry, const std::vector<Integer>& thresholds) {
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i) {
        if (thresholds[i] >= thresholds[i + 1]) {
            throw std::invalid_argument("thresholds must be strictly ascending");
        }
    }
    std::vector<Interval> values{entry};
    if (!entry.is_bottom() && entry.hi().is_finite()) {
        for (const auto& t : thresholds) {
            if (ExtInt{t} > entry.hi()) {
                values.emplace_back(entry.lo(), t);
            }
        }
    }
    return IntervalRamp{std::move(values)};
}

namespace {

using PerVar = std::vector<std::pair<std::string, IntervalNode>>;

EnvNode make_pointwise(std::shared_ptr<const PerVar> nodes) {
    std::vector<AbstractEnv::Binding> labels;
    std::optional<std::size_t> bound = 0;
    for (const auto& [var, node] : *nodes) {
        labels.emplace_back(var, node.proposal());
        bound = detail::add_bounds(bound, node.depth_bound());
    }
    auto step = [nodes](const AbstractEnv& v) -> Answer<AbstractEnv> {
        if (v.is_bottom()) {
            return Answer<AbstractEnv>::converged();
        }
        const auto& query = v.bindings();
        if (query.size() != nodes->size()) {
            throw std::invalid_argument("query environment has a different variable set");
        }
        auto next = std::make_shared<PerVar>();
        next->reserve(nodes->size());
        bool all_below = true;
        bool moved = false;
        for (std::size_t i = 0; i < nodes->size(); ++i) {
            const auto& [var, node] = (*nodes)[i];
            if (query[i].first != var) {
                throw std::invalid_argument("query environment has a different variable set");
            }
            if (query[i].second.leq(node.proposal())) {
                next->emplace_back(var, node);
                continue;
            }
            all_below = false;
            Answer<Interval> a = node.step(query[i].second);
            if (a.is_converged()) {
                next->emplace_back(var, node);
            } else {
                moved = true;
                next->emplace_back(var, a.next_node());
            }
        }
        if (all_below || !moved) {
            // !moved: some coordinate converged without ⊑; the solver's leaf check reports it.
            return Answer<AbstractEnv>::converged();
        }
        return Answer<AbstractEnv>::next(make_pointwise(std::move(next)));
    };
    return EnvNode{AbstractEnv{std::move(labels)}, std::move(step), bound};
}

} // namespace

EnvNode pointwise_env_widening(std::vector<std::pair<std::string, IntervalNode>> per_var) {
    std::set<std::string> seen;
    for (const auto& entry : per_var) {
        if (!seen.insert(entry.first).second) {
            throw std::invalid_argument("variable listed twice: " + entry.first);
        }
    }
    return make_pointwise(std::make_shared<const PerVar>(std::move(per_var)));
}

} // namespace widenkit
