// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include "widenkit/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <utility>
#include <variant>

namespace widenkit::oracle {

std::vector<Integer> HavocWindow::samples() const {
    std::set<Integer> out{lo, hi};
    for (int v = -2; v <= 2; ++v) {
        if (lo <= v && v <= hi) {
            out.insert(v);
        }
    }
    return {out.begin(), out.end()};
}

std::size_t Exploration::state_count() const {
    std::size_t n = 0;
    for (const auto& [id, states] : loop_heads) {
        n += states.size();
    }
    return n;
}

namespace {

// The program flattened into a transition system over control points.
struct IAssign {
    std::string var;
    AffineExpr expr;
};
struct IHavoc {
    std::string var;
};
struct IAssume {
    Cond cond;
};
struct IBranch { // falls through when cond holds
    Cond cond;
    std::size_t else_target;
};
struct IJump {
    std::size_t target;
};
struct ILoopHead {
    int id;
};
using Instr = std::variant<IAssign, IHavoc, IAssume, IBranch, IJump, ILoopHead>;

class Compiler {
  public:
    std::vector<Instr> run(const lang::Block& body) {
        block(body);
        return std::move(code_);
    }

  private:
    void block(const lang::Block& body) {
        for (const auto& s : body) {
            stmt(s);
        }
    }

    void stmt(const lang::Stmt& s) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, lang::Assign>) {
                    code_.emplace_back(IAssign{n.var, n.expr});
                } else if constexpr (std::is_same_v<T, lang::Havoc>) {
                    code_.emplace_back(IHavoc{n.var});
                } else if constexpr (std::is_same_v<T, lang::Assume>) {
                    code_.emplace_back(IAssume{n.cond});
                } else if constexpr (std::is_same_v<T, lang::If>) {
                    const std::size_t branch = code_.size();
                    code_.emplace_back(IBranch{n.cond, 0});
                    block(n.then_body);
                    const std::size_t jump = code_.size();
                    code_.emplace_back(IJump{0});
                    std::get<IBranch>(code_[branch]).else_target = code_.size();
                    block(n.else_body);
                    std::get<IJump>(code_[jump]).target = code_.size();
                } else {
                    const std::size_t head = code_.size();
                    code_.emplace_back(ILoopHead{n.id});
                    const std::size_t branch = code_.size();
                    code_.emplace_back(IBranch{n.cond, 0});
                    block(n.body);
                    code_.emplace_back(IJump{head});
                    std::get<IBranch>(code_[branch]).else_target = code_.size();
                }
            },
            s.node);
    }

    std::vector<Instr> code_;
};

std::vector<Integer> initial_values(const lang::Decl& d, const ExplorationBounds& bounds, bool& truncated) {
    const Interval& iv = d.init;
    if (iv.lo().is_finite() && iv.hi().is_finite()) {
        std::vector<Integer> out;
        for (Integer v = iv.lo().value(); v <= iv.hi().value(); ++v) {
            if (out.size() == bounds.max_states) {
                truncated = true;
                break;
            }
            out.push_back(v);
        }
        return out;
    }
    if (!bounds.havoc_window) {
        throw ConfigurationError("variable '" + d.name + "' has an unbounded initial range and no havoc window is set");
    }
    std::set<Integer> out;
    for (const auto& v : bounds.havoc_window->samples()) {
        if (iv.contains(v)) {
            out.insert(v);
        }
    }
    if (iv.lo().is_finite()) {
        out.insert(iv.lo().value());
    }
    if (iv.hi().is_finite()) {
        out.insert(iv.hi().value());
    }
    return {out.begin(), out.end()};
}

using Config = std::pair<std::size_t, ConcreteState>;

} // namespace

Exploration explore(const lang::Program& program, const ExplorationBounds& bounds) {
    if (bounds.max_steps == 0 || bounds.max_states == 0) {
        throw ConfigurationError("exploration bounds must be positive");
    }
    if (bounds.havoc_window && bounds.havoc_window->hi < bounds.havoc_window->lo) {
        throw ConfigurationError("havoc window is empty");
    }
    const std::vector<Instr> code = Compiler{}.run(program.body);

    Exploration result;
    for (int id = 0; id < program.loop_count; ++id) {
        result.loop_heads[id];
    }

    std::set<Config> visited;
    std::deque<Config> queue;
    auto push = [&](std::size_t pc, ConcreteState state) {
        Config c{pc, std::move(state)};
        if (visited.contains(c)) {
            return;
        }
        if (visited.size() >= bounds.max_states) {
            result.truncated = true;
            return;
        }
        if (pc < code.size()) {
            if (const auto* head = std::get_if<ILoopHead>(&code[pc])) {
                result.loop_heads[head->id].insert(c.second);
            }
        }
        visited.insert(c);
        queue.push_back(std::move(c));
    };

    std::vector<std::vector<Integer>> domains;
    for (const auto& d : program.decls) {
        domains.push_back(initial_values(d, bounds, result.truncated));
    }
    const bool any_empty = std::any_of(domains.begin(), domains.end(), [](const auto& v) { return v.empty(); });
    if (!any_empty) {
        std::vector<std::size_t> odometer(domains.size(), 0);
        while (true) {
            ConcreteState s;
            for (std::size_t i = 0; i < domains.size(); ++i) {
                s.emplace(program.decls[i].name, domains[i][odometer[i]]);
            }
            push(0, std::move(s));
            if (visited.size() >= bounds.max_states) {
                break;
            }
            std::size_t i = 0;
            while (i < odometer.size() && ++odometer[i] == domains[i].size()) {
                odometer[i++] = 0;
            }
            if (i == odometer.size()) {
                break;
            }
        }
    }

    const std::vector<Integer> havoc_values = bounds.havoc_window ? bounds.havoc_window->samples() : std::vector<Integer>{};
    while (!queue.empty()) {
        if (result.steps >= bounds.max_steps) {
            result.truncated = true;
            break;
        }
        auto [pc, state] = std::move(queue.front());
        queue.pop_front();
        ++result.steps;
        if (pc >= code.size()) {
            continue; // terminated
        }
        std::visit(
            [&](const auto& in) {
                using T = std::decay_t<decltype(in)>;
                if constexpr (std::is_same_v<T, IAssign>) {
                    ConcreteState next = state;
                    next[in.var] = in.expr.evaluate(state);
                    push(pc + 1, std::move(next));
                } else if constexpr (std::is_same_v<T, IHavoc>) {
                    if (!bounds.havoc_window) {
                        throw ConfigurationError("havoc needs a havoc window");
                    }
                    for (const auto& v : havoc_values) {
                        ConcreteState next = state;
                        next[in.var] = v;
                        push(pc + 1, std::move(next));
                    }
                } else if constexpr (std::is_same_v<T, IAssume>) {
                    if (in.cond.holds(state)) {
                        push(pc + 1, state);
                    }
                } else if constexpr (std::is_same_v<T, IBranch>) {
                    push(in.cond.holds(state) ? pc + 1 : in.else_target, state);
                } else if constexpr (std::is_same_v<T, IJump>) {
                    push(in.target, state);
                } else {
                    push(pc + 1, state);
                }
            },
            code[pc]);
    }
    result.configurations = visited.size();
    return result;
}

Verdict check_soundness(const lang::AnalysisReport& report, const Exploration& concrete) {
    std::set<int> reported;
    for (const auto& l : report.loops) {
        reported.insert(l.id);
    }
    std::set<int> explored;
    for (const auto& [id, states] : concrete.loop_heads) {
        explored.insert(id);
    }
    if (reported != explored) {
        throw StructuralError("report and exploration disagree on loop ids");
    }
    Verdict verdict;
    for (const auto& [id, states] : concrete.loop_heads) {
        const AbstractEnv& inv = report.loop(id)->env;
        for (const auto& s : states) {
            ++verdict.states_checked;
            if (!concretizes(inv, s)) {
                verdict.counterexamples.push_back({id, s});
            }
        }
    }
    return verdict;
}

std::string to_string(const ConcreteState& state) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : state) {
        os << (first ? "" : ", ") << name << " = " << value;
        first = false;
    }
    return os.str();
}

} // namespace widenkit::oracle
