// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include "widenkit/lang/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace widenkit::lang {

std::string Diagnostic::to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diags) {
    std::string out;
    for (const auto& d : diags) {
        out += (out.empty() ? "" : "\n") + d.to_string();
    }
    return out;
}

} // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

// Raised after the diagnostic is recorded; parsing stops at the first syntax error.
struct Abort {};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run(std::vector<Diagnostic>& diags) {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            const int line = line_;
            const int col = col_;
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string text;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    text += advance();
                }
                out.push_back({Tok::Ident, text, line, col});
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string text;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    text += advance();
                }
                out.push_back({Tok::Int, text, line, col});
            } else {
                static const char* two_char[] = {"<=", ">=", "==", "!="};
                std::string text(1, c);
                for (const char* op : two_char) {
                    if (src_.substr(pos_, 2) == op) {
                        text = op;
                    }
                }
                if (text.size() == 1 && std::string_view("=<>+-*;,()[]{}").find(c) == std::string_view::npos) {
                    diags.push_back({ErrorKind::Syntax, line, col, std::string("unexpected character '") + c + "'"});
                    throw Abort{};
                }
                for (std::size_t i = 0; i < text.size(); ++i) {
                    advance();
                }
                out.push_back({Tok::Punct, text, line, col});
            }
        }
    }

  private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
                advance();
            } else if (src_.substr(pos_, 2) == "//") {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const std::set<std::string, std::less<>> kKeywords{"init", "in", "while", "if", "else", "assume", "havoc", "inf"};

class Parser {
  public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags) : toks_(std::move(tokens)), diags_(diags) {}

    Program program() {
        Program prog;
        while (peek_ident("init")) {
            prog.decls.push_back(decl());
        }
        while (!at_end()) {
            if (peek_ident("init")) {
                fail(peek(), "declarations must precede statements");
            }
            prog.body.push_back(stmt());
        }
        prog.loop_count = next_loop_id_;
        return prog;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Tok::End; }
    bool peek_punct(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }
    bool peek_ident(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

    [[noreturn]] void fail(const Token& at, const std::string& msg) {
        diags_.push_back({ErrorKind::Syntax, at.line, at.column, msg});
        throw Abort{};
    }

    static std::string describe(const Token& t) {
        return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    }

    const Token& take() { return toks_[pos_++]; }

    const Token& expect_punct(std::string_view p) {
        if (!peek_punct(p)) {
            fail(peek(), "expected '" + std::string(p) + "' but found " + describe(peek()));
        }
        return take();
    }

    const Token& expect_keyword(std::string_view w) {
        if (!peek_ident(w)) {
            fail(peek(), "expected '" + std::string(w) + "' but found " + describe(peek()));
        }
        return take();
    }

    const Token& expect_name() {
        if (peek().kind != Tok::Ident || kKeywords.contains(peek().text)) {
            fail(peek(), "expected a variable name but found " + describe(peek()));
        }
        return take();
    }

    void use_variable(const Token& t) {
        if (!declared_.contains(t.text)) {
            diags_.push_back({ErrorKind::UndeclaredVariable, t.line, t.column, "undeclared variable '" + t.text + "'"});
        }
    }

    Integer integer(bool negative) {
        const Token& t = take();
        Integer n = parse_integer(t.text);
        return negative ? Integer(-n) : n;
    }

    // INT | ("+" | "-") INT
    bool peek_signed_int() const {
        if (peek().kind == Tok::Int) {
            return true;
        }
        return (peek_punct("-") || peek_punct("+")) && toks_[pos_ + 1].kind == Tok::Int;
    }

    Integer signed_int() {
        bool negative = false;
        if (peek_punct("-") || peek_punct("+")) {
            negative = take().text == "-";
        }
        return integer(negative);
    }

    Decl decl() {
        const Token& kw = expect_keyword("init");
        const Token& name = expect_name();
        expect_keyword("in");
        expect_punct("[");
        ExtInt lo;
        if (peek_punct("-") && toks_[pos_ + 1].kind == Tok::Ident && toks_[pos_ + 1].text == "inf") {
            pos_ += 2;
            lo = ExtInt::neg_inf();
        } else if (peek_signed_int()) {
            lo = signed_int();
        } else {
            fail(peek(), "expected an integer or -inf but found " + describe(peek()));
        }
        expect_punct(",");
        ExtInt hi;
        if (peek_ident("inf") || (peek_punct("+") && toks_[pos_ + 1].kind == Tok::Ident && toks_[pos_ + 1].text == "inf")) {
            pos_ += peek_punct("+") ? 2 : 1;
            hi = ExtInt::pos_inf();
        } else if (peek_signed_int()) {
            hi = signed_int();
        } else {
            fail(peek(), "expected an integer or inf but found " + describe(peek()));
        }
        const Token& close = expect_punct("]");
        if (hi < lo) {
            fail(close, "empty initial interval for '" + name.text + "'");
        }
        expect_punct(";");
        if (!declared_.insert(name.text).second) {
            diags_.push_back({ErrorKind::DuplicateDeclaration, name.line, name.column,
                              "variable '" + name.text + "' declared twice"});
        }
        return Decl{name.text, Interval{lo, hi}, kw.line};
    }

    Block block() {
        expect_punct("{");
        Block body;
        while (!peek_punct("}")) {
            if (at_end()) {
                fail(peek(), "expected '}' but found end of input");
            }
            body.push_back(stmt());
        }
        take();
        return body;
    }

    Stmt stmt() {
        const Token& first = peek();
        if (peek_ident("while")) {
            take();
            While w;
            w.id = next_loop_id_++;
            expect_punct("(");
            w.cond = cond();
            expect_punct(")");
            w.body = block();
            return Stmt{std::move(w), first.line};
        }
        if (peek_ident("if")) {
            take();
            If s;
            expect_punct("(");
            s.cond = cond();
            expect_punct(")");
            s.then_body = block();
            if (peek_ident("else")) {
                take();
                s.else_body = block();
            }
            return Stmt{std::move(s), first.line};
        }
        if (peek_ident("assume")) {
            take();
            expect_punct("(");
            Assume a{cond()};
            expect_punct(")");
            expect_punct(";");
            return Stmt{std::move(a), first.line};
        }
        if (peek_ident("havoc")) {
            take();
            const Token& name = expect_name();
            use_variable(name);
            expect_punct(";");
            return Stmt{Havoc{name.text}, first.line};
        }
        if (first.kind == Tok::Ident && !kKeywords.contains(first.text)) {
            const Token& name = take();
            use_variable(name);
            expect_punct("=");
            AffineExpr e = expr();
            expect_punct(";");
            return Stmt{Assign{name.text, std::move(e)}, first.line};
        }
        fail(first, "expected a statement but found " + describe(first));
    }

    Cond cond() {
        Cond c;
        c.lhs = expr();
        static const std::pair<const char*, CmpOp> ops[] = {{"<", CmpOp::Lt},  {"<=", CmpOp::Le}, {">", CmpOp::Gt},
                                                             {">=", CmpOp::Ge}, {"==", CmpOp::Eq}, {"!=", CmpOp::Ne}};
        for (const auto& [text, op] : ops) {
            if (peek_punct(text)) {
                take();
                c.op = op;
                c.rhs = expr();
                return c;
            }
        }
        fail(peek(), "expected a comparison operator but found " + describe(peek()));
    }

    AffineExpr expr() {
        AffineExpr e = term();
        while (peek_punct("+") || peek_punct("-")) {
            const bool minus = take().text == "-";
            AffineExpr t = term();
            e = minus ? std::move(e) - t : std::move(e) + t;
        }
        return e;
    }

    // Unary signs are accepted in front of any term.
    AffineExpr term() {
        Integer sign = 1;
        if (peek_punct("-") || peek_punct("+")) {
            if (take().text == "-") {
                sign = -1;
            }
        }
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            Integer k = integer(false) * sign;
            if (!peek_punct("*")) {
                return AffineExpr::constant_of(k);
            }
            take();
            if (peek().kind == Tok::Int) {
                return AffineExpr::constant_of(k * integer(false));
            }
            const Token& name = expect_name();
            use_variable(name);
            return AffineExpr{0, {{k, name.text}}};
        }
        if (t.kind == Tok::Ident && !kKeywords.contains(t.text)) {
            const Token& name = take();
            use_variable(name);
            if (!peek_punct("*")) {
                return AffineExpr{0, {{sign, name.text}}};
            }
            const Token& star = take();
            if (peek().kind == Tok::Int) {
                return AffineExpr{0, {{sign * integer(false), name.text}}};
            }
            if (peek().kind == Tok::Ident && !kKeywords.contains(peek().text)) {
                const Token& other = take();
                use_variable(other);
                diags_.push_back({ErrorKind::NonlinearTerm, star.line, star.column,
                                  "nonlinear term '" + name.text + " * " + other.text + "'"});
                return AffineExpr{0, {{sign, name.text}}};
            }
            fail(peek(), "expected an integer after '*' but found " + describe(peek()));
        }
        fail(t, "expected an integer or variable but found " + describe(t));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic>& diags_;
    std::set<std::string, std::less<>> declared_;
    int next_loop_id_ = 0;
};

} // namespace

Program parse(std::string_view source) {
    std::vector<Diagnostic> diags;
    Program prog;
    try {
        Lexer lexer(source);
        Parser parser(lexer.run(diags), diags);
        prog = parser.program();
    } catch (const Abort&) {
    }
    if (!diags.empty()) {
        throw ParseError(std::move(diags));
    }
    return prog;
}

} // namespace widenkit::lang
