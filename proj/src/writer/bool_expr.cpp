// Copyright 2026 The qcwb Authors
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

#include "qcwb/writer/bool_expr.hpp"

#include <cctype>
#include <set>

namespace qcwb {

BoolExpr BoolExpr::var(std::string name) {
    BoolExpr e;
    e.op = Op::Var;
    e.name = std::move(name);
    return e;
}

BoolExpr BoolExpr::constant(bool value) {
    BoolExpr e;
    e.op = Op::Const;
    e.value = value;
    return e;
}

BoolExpr BoolExpr::negate(BoolExpr inner) {
    BoolExpr e;
    e.op = Op::Not;
    e.lhs = std::make_shared<const BoolExpr>(std::move(inner));
    return e;
}

BoolExpr BoolExpr::binary(Op op, BoolExpr a, BoolExpr b) {
    BoolExpr e;
    e.op = op;
    e.lhs = std::make_shared<const BoolExpr>(std::move(a));
    e.rhs = std::make_shared<const BoolExpr>(std::move(b));
    return e;
}

bool BoolExpr::operator==(const BoolExpr &other) const {
    if (op != other.op) {
        return false;
    }
    switch (op) {
        case Op::Var:
            return name == other.name;
        case Op::Const:
            return value == other.value;
        case Op::Not:
            return *lhs == *other.lhs;
        default:
            return *lhs == *other.lhs && *rhs == *other.rhs;
    }
}

namespace {

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {
    }

    BoolExpr parse() {
        BoolExpr e = parse_or();
        skip_ws();
        if (pos_ < text_.size()) {
            throw ExprSyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        }
        if (vars_.size() > kMaxExprVariables) {
            throw Error("too_many_variables", "expression uses " + std::to_string(vars_.size()) +
                                                  " variables; at most " + std::to_string(kMaxExprVariables) +
                                                  " are supported");
        }
        return e;
    }

   private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    BoolExpr parse_or() {
        BoolExpr e = parse_xor();
        while (accept('|')) {
            e = BoolExpr::binary(BoolExpr::Op::Or, std::move(e), parse_xor());
        }
        return e;
    }
    BoolExpr parse_xor() {
        BoolExpr e = parse_and();
        while (accept('^')) {
            e = BoolExpr::binary(BoolExpr::Op::Xor, std::move(e), parse_and());
        }
        return e;
    }
    BoolExpr parse_and() {
        BoolExpr e = parse_unary();
        while (accept('&')) {
            e = BoolExpr::binary(BoolExpr::Op::And, std::move(e), parse_unary());
        }
        return e;
    }
    BoolExpr parse_unary() {
        if (accept('!')) {
            return BoolExpr::negate(parse_unary());
        }
        return parse_atom();
    }
    BoolExpr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            throw ExprSyntaxError(pos_, "unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            BoolExpr e = parse_or();
            skip_ws();
            if (!accept(')')) {
                throw ExprSyntaxError(pos_, "expected ')'");
            }
            return e;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return BoolExpr::constant(c == '1');
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            vars_.insert(name);
            return BoolExpr::var(std::move(name));
        }
        throw ExprSyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
    std::set<std::string> vars_;
};

int precedence(BoolExpr::Op op) {
    switch (op) {
        case BoolExpr::Op::Or:
            return 1;
        case BoolExpr::Op::Xor:
            return 2;
        case BoolExpr::Op::And:
            return 3;
        case BoolExpr::Op::Not:
            return 4;
        default:
            return 5;
    }
}

char symbol(BoolExpr::Op op) {
    switch (op) {
        case BoolExpr::Op::Or:
            return '|';
        case BoolExpr::Op::Xor:
            return '^';
        default:
            return '&';
    }
}

void print(const BoolExpr &e, std::string &out) {
    switch (e.op) {
        case BoolExpr::Op::Var:
            out += e.name;
            return;
        case BoolExpr::Op::Const:
            out += e.value ? '1' : '0';
            return;
        case BoolExpr::Op::Not: {
            out += '!';
            const bool wrap = precedence(e.lhs->op) < precedence(BoolExpr::Op::Not);
            if (wrap) {
                out += '(';
            }
            print(*e.lhs, out);
            if (wrap) {
                out += ')';
            }
            return;
        }
        default: {
            const int p = precedence(e.op);
            const bool wrap_l = precedence(e.lhs->op) < p;
            // Left-associative: an equal-precedence right operand needs parentheses.
            const bool wrap_r = precedence(e.rhs->op) <= p;
            if (wrap_l) {
                out += '(';
            }
            print(*e.lhs, out);
            if (wrap_l) {
                out += ')';
            }
            out += ' ';
            out += symbol(e.op);
            out += ' ';
            if (wrap_r) {
                out += '(';
            }
            print(*e.rhs, out);
            if (wrap_r) {
                out += ')';
            }
        }
    }
}

void collect(const BoolExpr &e, std::set<std::string> &vars) {
    if (e.op == BoolExpr::Op::Var) {
        vars.insert(e.name);
    }
    if (e.lhs) {
        collect(*e.lhs, vars);
    }
    if (e.rhs) {
        collect(*e.rhs, vars);
    }
}

}  // namespace

BoolExpr parse_bool_expr(std::string_view text) {
    return Parser(text).parse();
}

std::string pretty_print(const BoolExpr &e) {
    std::string out;
    print(e, out);
    return out;
}

std::vector<std::string> free_variables(const BoolExpr &e) {
    std::set<std::string> vars;
    collect(e, vars);
    return {vars.begin(), vars.end()};
}

bool evaluate(const BoolExpr &e, const std::map<std::string, bool> &assignment) {
    switch (e.op) {
        case BoolExpr::Op::Var: {
            auto it = assignment.find(e.name);
            if (it == assignment.end()) {
                throw Error("unmapped_variable", "variable '" + e.name + "' has no value");
            }
            return it->second;
        }
        case BoolExpr::Op::Const:
            return e.value;
        case BoolExpr::Op::Not:
            return !evaluate(*e.lhs, assignment);
        case BoolExpr::Op::And:
            return evaluate(*e.lhs, assignment) && evaluate(*e.rhs, assignment);
        case BoolExpr::Op::Or:
            return evaluate(*e.lhs, assignment) || evaluate(*e.rhs, assignment);
        case BoolExpr::Op::Xor:
            return evaluate(*e.lhs, assignment) != evaluate(*e.rhs, assignment);
    }
    return false;
}

}  // namespace qcwb
