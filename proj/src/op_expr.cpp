// Copyright 2026 The pomalg developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pomalg/op_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace pomalg {

struct OpExpr::Node {
    enum class Kind { Slot, Const, Sum, Diff, Scale, Mul, Sym, Comm, Pow };
    Kind kind;
    std::size_t slot = 0;
    double value = 0.0; ///< Const value, Scale coefficient, Pow exponent
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = OpExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

ComplexMatrix eval_node(const Node &n,
                        std::span<const ComplexMatrix> operands) {
    using Kind = Node::Kind;
    switch (n.kind) {
    case Kind::Slot:
        return operands[n.slot];
    case Kind::Const: {
        const Index d = operands.empty() ? 1 : operands[0].rows();
        return n.value * ComplexMatrix::Identity(d, d);
    }
    case Kind::Sum:
        return eval_node(*n.lhs, operands) + eval_node(*n.rhs, operands);
    case Kind::Diff:
        return eval_node(*n.lhs, operands) - eval_node(*n.rhs, operands);
    case Kind::Scale:
        return n.value * eval_node(*n.lhs, operands);
    case Kind::Mul:
        return eval_node(*n.lhs, operands) * eval_node(*n.rhs, operands);
    case Kind::Sym: {
        const ComplexMatrix p = eval_node(*n.lhs, operands);
        const ComplexMatrix q = eval_node(*n.rhs, operands);
        return 0.5 * (p * q + q * p);
    }
    case Kind::Comm: {
        const ComplexMatrix p = eval_node(*n.lhs, operands);
        const ComplexMatrix q = eval_node(*n.rhs, operands);
        return Complex(0.0, 1.0) * (p * q - q * p);
    }
    case Kind::Pow: {
        const ComplexMatrix base = eval_node(*n.lhs, operands);
        const int exponent = static_cast<int>(n.value);
        ComplexMatrix acc =
            ComplexMatrix::Identity(base.rows(), base.cols());
        for (int i = 0; i < exponent; ++i) {
            acc = acc * base;
        }
        return acc;
    }
    }
    throw NumericsError("OpExpr: unreachable node kind");
}

std::size_t max_slot_plus_one(const Node &n) {
    using Kind = Node::Kind;
    std::size_t used = 0;
    if (n.kind == Kind::Slot) {
        used = n.slot + 1;
    }
    if (n.lhs) {
        used = std::max(used, max_slot_plus_one(*n.lhs));
    }
    if (n.rhs) {
        used = std::max(used, max_slot_plus_one(*n.rhs));
    }
    return used;
}

bool preserving(const Node &n) {
    using Kind = Node::Kind;
    switch (n.kind) {
    case Kind::Slot:
    case Kind::Const:
        return true;
    case Kind::Scale:
    case Kind::Pow:
        return preserving(*n.lhs);
    case Kind::Sum:
    case Kind::Diff:
    case Kind::Sym:
    case Kind::Comm:
        return preserving(*n.lhs) && preserving(*n.rhs);
    case Kind::Mul:
        return false;
    }
    return false;
}

} // namespace

struct OpExprParser {
    std::string_view src;
    std::size_t pos = 0;
    const std::vector<std::string> &slots;

    explicit OpExprParser(std::string_view s,
                          const std::vector<std::string> &names)
        : src(s), slots(names) {}

    [[noreturn]] void fail(const std::string &msg) const {
        throw FormatError("OpExpr: " + msg + " at position " +
                          std::to_string(pos) + " in \"" + std::string(src) +
                          "\"");
    }

    void skip_ws() {
        while (pos < src.size() &&
               std::isspace(static_cast<unsigned char>(src[pos]))) {
            ++pos;
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        while (true) {
            if (eat('+')) {
                lhs = make({Node::Kind::Sum, 0, 0.0, lhs, parse_term()});
            } else if (eat('-')) {
                lhs = make({Node::Kind::Diff, 0, 0.0, lhs, parse_term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        while (eat('*')) {
            NodePtr rhs = parse_unary();
            lhs = fold_product(lhs, rhs);
        }
        return lhs;
    }

    // scalar*scalar folds to a scalar, scalar*operator to a Scale node;
    // operator*operator stays a (non-Hermitian) Mul
    NodePtr fold_product(const NodePtr &lhs, const NodePtr &rhs) {
        const bool lc = lhs->kind == Node::Kind::Const;
        const bool rc = rhs->kind == Node::Kind::Const;
        if (lc && rc) {
            return make({Node::Kind::Const, 0, lhs->value * rhs->value,
                         nullptr, nullptr});
        }
        if (lc) {
            return make({Node::Kind::Scale, 0, lhs->value, rhs, nullptr});
        }
        if (rc) {
            return make({Node::Kind::Scale, 0, rhs->value, lhs, nullptr});
        }
        return make({Node::Kind::Mul, 0, 0.0, lhs, rhs});
    }

    NodePtr parse_unary() {
        if (eat('-')) {
            NodePtr inner = parse_unary();
            if (inner->kind == Node::Kind::Const) {
                return make({Node::Kind::Const, 0, -inner->value, nullptr,
                             nullptr});
            }
            return make({Node::Kind::Scale, 0, -1.0, inner, nullptr});
        }
        if (eat('+')) {
            return parse_unary();
        }
        return parse_primary();
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos >= src.size()) {
            fail("unexpected end of expression");
        }
        const char c = src[pos];
        if (c == '(') {
            ++pos;
            NodePtr inner = parse_expr();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_ident();
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        double value = 0.0;
        const char *begin = src.data() + pos;
        const char *end = src.data() + src.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{}) {
            fail("malformed number");
        }
        pos = static_cast<std::size_t>(ptr - src.data());
        return make({Node::Kind::Const, 0, value, nullptr, nullptr});
    }

    NodePtr parse_ident() {
        const std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                src[pos] == '_')) {
            ++pos;
        }
        const std::string name(src.substr(start, pos - start));
        if (name == "sym" || name == "comm") {
            if (!eat('(')) {
                fail("expected '(' after " + name);
            }
            NodePtr first = parse_expr();
            if (!eat(',')) {
                fail("expected ',' in " + name);
            }
            NodePtr second = parse_expr();
            if (!eat(')')) {
                fail("expected ')' closing " + name);
            }
            return make({name == "sym" ? Node::Kind::Sym : Node::Kind::Comm,
                         0, 0.0, first, second});
        }
        if (name == "pow") {
            if (!eat('(')) {
                fail("expected '(' after pow");
            }
            NodePtr base = parse_expr();
            if (!eat(',')) {
                fail("expected ',' in pow");
            }
            NodePtr exponent = parse_expr();
            if (!eat(')')) {
                fail("expected ')' closing pow");
            }
            if (exponent->kind != Node::Kind::Const ||
                exponent->value < 0.0 ||
                exponent->value != std::floor(exponent->value)) {
                fail("pow exponent must be a non-negative integer literal");
            }
            return make(
                {Node::Kind::Pow, 0, exponent->value, base, nullptr});
        }
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (slots[i] == name) {
                return make({Node::Kind::Slot, i, 0.0, nullptr, nullptr});
            }
        }
        fail("unknown symbol '" + name + "'");
    }
};

OpExpr OpExpr::parse(std::string_view text,
                     const std::vector<std::string> &slot_names) {
    OpExprParser parser(text, slot_names);
    OpExpr expr;
    expr.root_ = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size()) {
        parser.fail("trailing input");
    }
    expr.text_ = std::string(text);
    expr.required_operands_ = max_slot_plus_one(*expr.root_);
    return expr;
}

ComplexMatrix OpExpr::eval(std::span<const ComplexMatrix> operands) const {
    if (operands.size() < required_operands_) {
        throw ShapeError("OpExpr::eval: expression references " +
                         std::to_string(required_operands_) +
                         " operand slots, got " +
                         std::to_string(operands.size()));
    }
    return eval_node(*root_, operands);
}

bool OpExpr::hermitian_preserving() const { return preserving(*root_); }

} // namespace pomalg
