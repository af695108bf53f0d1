// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "widenkit/lang/ast.hpp"

namespace widenkit::lang {

enum class ErrorKind { Syntax, UndeclaredVariable, DuplicateDeclaration, NonlinearTerm };

struct Diagnostic {
    ErrorKind kind;
    int line;
    int column;
    std::string message;

    [[nodiscard]] std::string to_string() const; // "3:7: message"
};

/// Thrown by parse() with every diagnostic found; no partial program is returned.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    [[nodiscard]] const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

  private:
    std::vector<Diagnostic> diagnostics_;
};

/// Grammar:
///
///   program := decl* stmt*
///   decl    := "init" IDENT "in" "[" (INT | "-inf") "," (INT | "inf") "]" ";"
///   stmt    := IDENT "=" expr ";"
///            | "while" "(" cond ")" "{" stmt* "}"
///            | "if" "(" cond ")" "{" stmt* "}" ("else" "{" stmt* "}")?
///            | "assume" "(" cond ")" ";"
///            | "havoc" IDENT ";"
///   expr    := term (("+" | "-") term)*
///   term    := INT | IDENT | INT "*" IDENT
///   cond    := expr ("<" | "<=" | ">" | ">=" | "==" | "!=") expr
///
/// INT is an optionally signed decimal of any width; "//" starts a comment.
/// IDENT "*" INT is also accepted; a product of two variables is rejected as
/// a nonlinear term.
Program parse(std::string_view source);

} // namespace widenkit::lang
