// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include "widenkit/lang/analyzer.hpp"

#include <sstream>

namespace widenkit::lang {

WideningStrategy WideningStrategy::ramp(std::vector<Integer> thresholds) {
    WideningStrategy s = of(Kind::Ramp);
    s.thresholds = std::move(thresholds);
    return s;
}

WideningStrategy WideningStrategy::delayed(std::size_t n, WideningStrategy inner) {
    WideningStrategy s = of(Kind::Delay);
    s.delay = n;
    s.inner = std::make_shared<const WideningStrategy>(std::move(inner));
    return s;
}

std::string WideningStrategy::name() const {
    switch (kind) {
    case Kind::Naive: return "naive";
    case Kind::Ramp: return "ramp";
    case Kind::Delay: return "delay(" + std::to_string(delay) + ", " + (inner ? inner->name() : "naive") + ")";
    case Kind::Kleene: return "kleene";
    case Kind::Broken: return "broken";
    }
    return "unknown";
}

EnvNode WideningStrategy::build(const AbstractEnv& entry, const std::vector<std::string>& vars) const {
    auto per_variable = [&](auto make) {
        std::vector<std::pair<std::string, IntervalNode>> nodes;
        nodes.reserve(vars.size());
        for (const auto& v : vars) {
            nodes.emplace_back(v, make(v, entry.get(v)));
        }
        return pointwise_env_widening(std::move(nodes));
    };
    switch (kind) {
    case Kind::Naive:
        return per_variable([](const std::string&, const Interval& start) { return brutal_interval_tree(start); });
    case Kind::Kleene:
        return per_variable([](const std::string&, const Interval& start) { return kleene_interval_tree(start); });
    case Kind::Ramp:
        return per_variable([this](const std::string& var, const Interval& start) {
            auto it = var_thresholds.find(var);
            const auto& ts = it != var_thresholds.end() ? it->second : thresholds;
            return ramp_widening<IntervalDomain>(threshold_ramp(start, ts), brutal_interval_tree(start));
        });
    case Kind::Delay: {
        const WideningStrategy base = inner ? *inner : naive();
        return delayed_widening_each_step<EnvDomain>(delay, base.build(entry, vars));
    }
    case Kind::Broken:
        return make_node<AbstractEnv>(entry, [](const AbstractEnv&) { return Answer<AbstractEnv>::converged(); });
    }
    throw std::logic_error("unknown strategy kind");
}

const LoopInvariant* AnalysisReport::loop(int id) const {
    for (const auto& l : loops) {
        if (l.id == id) {
            return &l;
        }
    }
    return nullptr;
}

AnalysisError::AnalysisError(int loop_id, int line, DefectKind kind, const std::string& detail)
    : std::runtime_error("loop " + std::to_string(loop_id) + " (line " + std::to_string(line) + "): " + detail),
      loop_id_(loop_id), line_(line), kind_(kind) {}

AbstractEnv initial_env(const Program& program) {
    std::vector<AbstractEnv::Binding> bindings;
    bindings.reserve(program.decls.size());
    for (const auto& d : program.decls) {
        bindings.emplace_back(d.name, d.init);
    }
    return AbstractEnv{std::move(bindings)};
}

Analyzer::Analyzer(const Program& program, WideningStrategy strategy, SolverOptions options)
    : program_(program), vars_(program.variables()), strategy_(std::move(strategy)), options_(options) {}

AbstractEnv Analyzer::transfer(const AbstractEnv& env, const Block& block) {
    AbstractEnv cur = env;
    for (const auto& s : block) {
        cur = transfer(cur, s);
    }
    return cur;
}

AbstractEnv Analyzer::transfer(const AbstractEnv& env, const Stmt& stmt) {
    return std::visit(
        [&](const auto& s) -> AbstractEnv {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Assign>) {
                return env.with(s.var, interval_affine_eval(env, s.expr));
            } else if constexpr (std::is_same_v<T, Havoc>) {
                return env.with(s.var, Interval::top());
            } else if constexpr (std::is_same_v<T, Assume>) {
                return env_refine(env, s.cond);
            } else if constexpr (std::is_same_v<T, If>) {
                AbstractEnv then_env = transfer(env_refine(env, s.cond), s.then_body);
                AbstractEnv else_env = transfer(env_refine(env, s.cond.negated()), s.else_body);
                return env_join(then_env, else_env);
            } else {
                return transfer_loop(env, s, stmt.line);
            }
        },
        stmt.node);
}

AbstractEnv Analyzer::transfer_loop(const AbstractEnv& entry, const While& loop, int line) {
    const EnvNode root = strategy_.build(entry, vars_);
    auto phi = [&](const AbstractEnv& u) { return env_join(entry, transfer(env_refine(u, loop.cond), loop.body)); };
    try {
        auto result = abstract_lfp<EnvDomain>(phi, root, options_);
        steps_ += result.steps_taken;
        invariants_[loop.id] = LoopInvariant{loop.id, line, result.value};
        return env_refine(result.value, loop.cond.negated());
    } catch (const AnalysisError&) {
        throw;
    } catch (const BrokenWidening<AbstractEnv>& e) {
        std::ostringstream os;
        os << e.what() << " (query " << e.query() << ", proposal " << e.proposal() << ")";
        throw AnalysisError(loop.id, line, e.kind(), os.str());
    } catch (const FuelExhausted<AbstractEnv>& e) {
        std::ostringstream os;
        os << e.what() << " (last proposal " << e.last_proposal() << ")";
        throw AnalysisError(loop.id, line, e.kind(), os.str());
    }
}

AbstractEnv transfer_stmt(const Program& program, const AbstractEnv& env, const Stmt& stmt,
                          const WideningStrategy& strategy, const SolverOptions& options) {
    Analyzer analyzer(program, strategy, options);
    return analyzer.transfer(env, stmt);
}

AnalysisReport analyze(const Program& program, const WideningStrategy& strategy, const SolverOptions& options) {
    Analyzer analyzer(program, strategy, options);
    AnalysisReport report;
    report.final_env = analyzer.transfer(initial_env(program), program.body);
    report.strategy = strategy.name();
    report.steps = analyzer.steps();
    for (const auto& [id, inv] : analyzer.invariants()) {
        report.loops.push_back(inv);
    }
    return report;
}

} // namespace widenkit::lang
