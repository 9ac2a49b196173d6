// Copyright 2026 The qqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qqc/harness/dsl.h"

#include <algorithm>
#include <bit>
#include <cctype>

namespace qqc {

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    size_t k = 0;
    while (k < text.size()) {
        char ch = text[k];
        if (ch == '\n') {
            line++;
            column = 1;
            k++;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            column++;
            k++;
            continue;
        }
        Token t;
        t.line = line;
        t.column = column;
        size_t start = k;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) {
                k++;
            }
            t.kind = Token::Kind::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                k++;
            }
            t.kind = Token::Kind::Int;
        } else if (std::string_view("[]()!&^|").find(ch) != std::string_view::npos) {
            k++;
            t.kind = Token::Kind::Punct;
        } else {
            throw DslError(
                "unexpected character '" + std::string(1, ch) + "'", line, column,
                {"!", "&", "(", ")", "[", "]", "^", "|", "identifier", "integer"});
        }
        t.text = std::string(text.substr(start, k - start));
        column += static_cast<int>(k - start);
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = column;
    end.text = "end of input";
    out.push_back(end);
    return out;
}

const std::set<std::string> kOperandStart{"!", "(", "0", "1", "b", "parity", "x"};

class Parser {
   public:
    Parser(std::string_view text, int n, int m) : tokens_(lex(text)), n_(n), m_(m) {
    }

    DslExpr parse_all() {
        DslExpr e = parse_or();
        if (peek().kind != Token::Kind::End) {
            if (peek().text == ")") {
                fail("unbalanced parentheses: unmatched ')'", {"&", "^", "|", "end of input"});
            }
            fail("unexpected '" + peek().text + "'", {"&", "^", "|", "end of input"});
        }
        return e;
    }

   private:
    const Token &peek() const {
        return tokens_[pos_];
    }
    bool at_punct(std::string_view p) const {
        return peek().kind == Token::Kind::Punct && peek().text == p;
    }
    [[noreturn]] void fail(const std::string &message, std::set<std::string> expected) const {
        throw DslError(message, peek().line, peek().column, std::move(expected));
    }
    void expect_punct(std::string_view p) {
        if (!at_punct(p)) {
            if (p == ")" && peek().kind == Token::Kind::End) {
                fail("unbalanced parentheses: missing ')'", {")"});
            }
            fail("expected '" + std::string(p) + "', found '" + peek().text + "'", {std::string(p)});
        }
        pos_++;
    }

    DslExpr parse_chain(DslExpr::Kind kind, std::string_view op, DslExpr (Parser::*next)()) {
        DslExpr lhs = (this->*next)();
        while (at_punct(op)) {
            pos_++;
            lhs = DslExpr::binary(kind, std::move(lhs), (this->*next)());
        }
        return lhs;
    }
    DslExpr parse_or() {
        return parse_chain(DslExpr::Kind::Or, "|", &Parser::parse_xor);
    }
    DslExpr parse_xor() {
        return parse_chain(DslExpr::Kind::Xor, "^", &Parser::parse_and);
    }
    DslExpr parse_and() {
        return parse_chain(DslExpr::Kind::And, "&", &Parser::parse_unary);
    }
    DslExpr parse_unary() {
        if (at_punct("!")) {
            pos_++;
            return DslExpr::negate(parse_unary());
        }
        return parse_primary();
    }

    int parse_index(char reg, int limit) {
        expect_punct("[");
        if (peek().kind != Token::Kind::Int) {
            fail("expected an index, found '" + peek().text + "'", {"integer"});
        }
        const Token &t = peek();
        int value = t.text.size() > 9 ? 1000000000 : std::stoi(t.text);
        if (limit >= 0 && value >= limit) {
            fail(
                "index " + t.text + " out of range for " + std::string(1, reg) + " (" +
                    (reg == 'x' ? "n" : "m") + " = " + std::to_string(limit) + ")",
                {"integer below " + std::to_string(limit)});
        }
        pos_++;
        expect_punct("]");
        return value;
    }

    DslExpr parse_primary() {
        const Token &t = peek();
        switch (t.kind) {
            case Token::Kind::Int:
                if (t.text != "0" && t.text != "1") {
                    fail("literal must be 0 or 1, found '" + t.text + "'", kOperandStart);
                }
                pos_++;
                return DslExpr::constant(t.text == "1");
            case Token::Kind::Ident:
                if (t.text == "x") {
                    pos_++;
                    return DslExpr::x_bit(parse_index('x', n_));
                }
                if (t.text == "b") {
                    pos_++;
                    return DslExpr::b_bit(parse_index('b', m_));
                }
                if (t.text == "parity") {
                    pos_++;
                    return parse_parity();
                }
                fail("unknown identifier '" + t.text + "'", kOperandStart);
            case Token::Kind::Punct:
                if (t.text == "(") {
                    pos_++;
                    DslExpr inner = parse_or();
                    expect_punct(")");
                    return inner;
                }
                if (t.text == ")") {
                    fail("unbalanced parentheses: unmatched ')'", kOperandStart);
                }
                fail("unexpected '" + t.text + "'", kOperandStart);
            case Token::Kind::End:
                fail("unexpected end of input", kOperandStart);
        }
        fail("unexpected token", kOperandStart);
    }

    DslExpr parse_parity() {
        expect_punct("(");
        auto reg = [&]() {
            if (peek().kind != Token::Kind::Ident || (peek().text != "x" && peek().text != "b")) {
                fail("parity takes x, b or x & b, found '" + peek().text + "'", {"b", "x"});
            }
            return peek().text[0];
        };
        char first = reg();
        pos_++;
        DslExpr out = DslExpr::fold(first == 'x' ? DslExpr::Kind::ParityX : DslExpr::Kind::ParityB);
        if (first == 'x' && at_punct("&")) {
            pos_++;
            if (peek().kind != Token::Kind::Ident || peek().text != "b") {
                fail("parity takes x, b or x & b, found '" + peek().text + "'", {"b"});
            }
            pos_++;
            out = DslExpr::fold(DslExpr::Kind::ParityXB);
        }
        expect_punct(")");
        return out;
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int n_;
    int m_;
};

int precedence(DslExpr::Kind kind) {
    switch (kind) {
        case DslExpr::Kind::Or:
            return 1;
        case DslExpr::Kind::Xor:
            return 2;
        case DslExpr::Kind::And:
            return 3;
        case DslExpr::Kind::Not:
            return 4;
        default:
            return 5;
    }
}

void print_into(const DslExpr &e, int min_prec, std::string &out) {
    int prec = precedence(e.kind);
    bool parens = prec < min_prec;
    if (parens) {
        out += '(';
    }
    switch (e.kind) {
        case DslExpr::Kind::Const:
            out += e.value ? '1' : '0';
            break;
        case DslExpr::Kind::XBit:
            out += "x[" + std::to_string(e.value) + "]";
            break;
        case DslExpr::Kind::BBit:
            out += "b[" + std::to_string(e.value) + "]";
            break;
        case DslExpr::Kind::ParityX:
            out += "parity(x)";
            break;
        case DslExpr::Kind::ParityB:
            out += "parity(b)";
            break;
        case DslExpr::Kind::ParityXB:
            out += "parity(x & b)";
            break;
        case DslExpr::Kind::Not:
            out += '!';
            print_into(e.args[0], prec, out);
            break;
        case DslExpr::Kind::And:
        case DslExpr::Kind::Xor:
        case DslExpr::Kind::Or: {
            const char *op = e.kind == DslExpr::Kind::And ? " & " : e.kind == DslExpr::Kind::Xor ? " ^ " : " | ";
            // Chains associate to the left, so a right operand of the same
            // operator keeps its parentheses.
            print_into(e.args[0], prec, out);
            out += op;
            print_into(e.args[1], prec + 1, out);
            break;
        }
    }
    if (parens) {
        out += ')';
    }
}

bool parity_of(std::uint64_t bits) {
    return std::popcount(bits) & 1;
}

}  // namespace

DslExpr DslExpr::constant(bool v) {
    return DslExpr{Kind::Const, v ? 1 : 0, {}};
}

DslExpr DslExpr::x_bit(int i) {
    return DslExpr{Kind::XBit, i, {}};
}

DslExpr DslExpr::b_bit(int j) {
    return DslExpr{Kind::BBit, j, {}};
}

DslExpr DslExpr::negate(DslExpr e) {
    return DslExpr{Kind::Not, 0, {std::move(e)}};
}

DslExpr DslExpr::binary(Kind kind, DslExpr lhs, DslExpr rhs) {
    return DslExpr{kind, 0, {std::move(lhs), std::move(rhs)}};
}

DslExpr DslExpr::fold(Kind kind) {
    return DslExpr{kind, 0, {}};
}

namespace {

std::string position_message(const std::string &message, int line, int column, const std::set<std::string> &expected) {
    std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
        out += "; expected one of:";
        for (const auto &e : expected) {
            out += " '" + e + "'";
        }
    }
    return out;
}

}  // namespace

DslError::DslError(const std::string &message, int line, int column, std::set<std::string> expected)
    : SpecError(position_message(message, line, column, expected)),
      message(message),
      line(line),
      column(column),
      expected(std::move(expected)) {
}

DslExpr parse_dsl(std::string_view text, int n, int m) {
    return Parser(text, n, m).parse_all();
}

std::string print_dsl(const DslExpr &expr) {
    std::string out;
    print_into(expr, 0, out);
    return out;
}

bool eval_dsl(const DslExpr &expr, const BitString &x, const BitString &b) {
    switch (expr.kind) {
        case DslExpr::Kind::Const:
            return expr.value != 0;
        case DslExpr::Kind::XBit:
            return x[expr.value];
        case DslExpr::Kind::BBit:
            return b[expr.value];
        case DslExpr::Kind::Not:
            return !eval_dsl(expr.args[0], x, b);
        case DslExpr::Kind::And:
            return eval_dsl(expr.args[0], x, b) && eval_dsl(expr.args[1], x, b);
        case DslExpr::Kind::Xor:
            return eval_dsl(expr.args[0], x, b) != eval_dsl(expr.args[1], x, b);
        case DslExpr::Kind::Or:
            return eval_dsl(expr.args[0], x, b) || eval_dsl(expr.args[1], x, b);
        case DslExpr::Kind::ParityX:
            return parity_of(x.bits);
        case DslExpr::Kind::ParityB:
            return parity_of(b.bits);
        case DslExpr::Kind::ParityXB: {
            int k = std::min(x.width, b.width);
            return parity_of(x.slice(0, k).bits & b.slice(0, k).bits);
        }
    }
    return false;
}

int max_x_index(const DslExpr &expr) {
    int best = expr.kind == DslExpr::Kind::XBit ? expr.value : -1;
    for (const auto &a : expr.args) {
        best = std::max(best, max_x_index(a));
    }
    return best;
}

int max_b_index(const DslExpr &expr) {
    int best = expr.kind == DslExpr::Kind::BBit ? expr.value : -1;
    for (const auto &a : expr.args) {
        best = std::max(best, max_b_index(a));
    }
    return best;
}

VerifierPtr verifier_from_dsl(const DslExpr &expr, int n, int m, std::string name) {
    if (max_x_index(expr) >= n || max_b_index(expr) >= m) {
        throw SpecError("DSL expression '" + print_dsl(expr) + "' indexes past n = " + std::to_string(n) +
                        ", m = " + std::to_string(m));
    }
    return make_verifier(
        n, m, [expr](const BitString &x, const BitString &b) { return eval_dsl(expr, x, b); }, VerifierBacking::Dsl,
        std::move(name));
}

}  // namespace qqc
