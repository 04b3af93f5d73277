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

#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qcwb/error.hpp"

namespace qcwb {

inline constexpr size_t kMaxExprVariables = 10;

/// Immutable boolean expression tree; children are shared.
struct BoolExpr {
    enum class Op { Var, Const, Not, And, Or, Xor };

    Op op = Op::Const;
    std::string name;  // Var
    bool value = false;  // Const
    std::shared_ptr<const BoolExpr> lhs;  // Not, binary
    std::shared_ptr<const BoolExpr> rhs;  // binary

    static BoolExpr var(std::string name);
    static BoolExpr constant(bool value);
    static BoolExpr negate(BoolExpr e);
    static BoolExpr binary(Op op, BoolExpr a, BoolExpr b);

    bool operator==(const BoolExpr &other) const;
};

/// Syntax error carrying the byte offset of the offending token.
class ExprSyntaxError : public Error {
   public:
    ExprSyntaxError(size_t offset, const std::string &what)
        : Error("syntax_error", "syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {
    }
    size_t offset() const {
        return offset_;
    }

   private:
    size_t offset_;
};

/// Parses `|`, `^`, `&`, `!`, parentheses and `0`/`1`; precedence
/// NOT > AND > XOR > OR, binary operators left-associative.
BoolExpr parse_bool_expr(std::string_view text);

/// Minimal-parenthesis infix rendering that reparses to the same tree.
std::string pretty_print(const BoolExpr &e);

/// Distinct variable names, sorted.
std::vector<std::string> free_variables(const BoolExpr &e);

bool evaluate(const BoolExpr &e, const std::map<std::string, bool> &assignment);

}  // namespace qcwb
