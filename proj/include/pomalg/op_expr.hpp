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

#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pomalg/errors.hpp"
#include "pomalg/types.hpp"

namespace pomalg {

/// An algebraic expression over non-commuting operator slots.
///
/// Surface syntax: slot names (`a`, `x`, `b`, `x1`...), real literals,
/// `+`, `-`, `*`, parentheses, `sym(p,q)` for the symmetrised product
/// (pq+qp)/2, `comm(p,q)` for i[p,q], and `pow(p,n)` with integer n >= 0.
///
/// Sums, differences, real scalar multiples, sym, comm and pow map
/// Hermitian operands to a Hermitian result; a plain `*` between two
/// operator subexpressions does not, and such expressions are accepted
/// only where a complex-valued expectation is meaningful.
class OpExpr {
  public:
    static OpExpr parse(std::string_view text,
                        const std::vector<std::string> &slot_names);

    ComplexMatrix eval(std::span<const ComplexMatrix> operands) const;

    /// True when evaluation on Hermitian operands is Hermitian by
    /// construction (node-by-node closure).
    bool hermitian_preserving() const;

    /// Number of operands evaluation needs: one past the highest slot the
    /// expression actually references.
    std::size_t required_operands() const { return required_operands_; }

    const std::string &text() const { return text_; }

    struct Node;

  private:
    std::shared_ptr<const Node> root_;
    std::string text_;
    std::size_t required_operands_ = 0;

    friend struct OpExprParser;
};

} // namespace pomalg
