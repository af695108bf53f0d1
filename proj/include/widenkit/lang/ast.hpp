// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "widenkit/affine.hpp"
#include "widenkit/interval.hpp"

namespace widenkit::lang {

struct Stmt;
using Block = std::vector<Stmt>;

struct Assign {
    std::string var;
    AffineExpr expr;
};

struct While {
    int id = 0; // loop ids are assigned in source order, from 0
    Cond cond;
    Block body;
};

struct If {
    Cond cond;
    Block then_body;
    Block else_body;
};

struct Assume {
    Cond cond;
};

/// Sets var to an arbitrary integer.
struct Havoc {
    std::string var;
};

struct Stmt {
    std::variant<Assign, While, If, Assume, Havoc> node;
    int line = 0;
};

/// init NAME in [lo, hi];
struct Decl {
    std::string name;
    Interval init;
    int line = 0;
};

struct Program {
    std::vector<Decl> decls;
    Block body;
    int loop_count = 0;

    [[nodiscard]] std::vector<std::string> variables() const {
        std::vector<std::string> out;
        out.reserve(decls.size());
        for (const auto& d : decls) {
            out.push_back(d.name);
        }
        return out;
    }
};

} // namespace widenkit::lang
