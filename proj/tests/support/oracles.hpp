//
// Copyright 2026 The lpform Authors
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
//
// Independent reference implementations the real code is checked against.
// Everything here is deliberately brute force and written straight from
// first principles rather than shared with the library.

#ifndef LPFORM_TESTS_SUPPORT_ORACLES_HPP_
#define LPFORM_TESTS_SUPPORT_ORACLES_HPP_

#include <array>
#include <vector>

#include "lpform/canonical.hpp"
#include "lpform/ir.hpp"

namespace lpform::testing {

// ---------------------------------------------------------------------
// Expression evaluation, for checking normalization by sampling.

inline Rational evaluate(const LinearExpr& expr,
                         const std::array<Rational, kMaxVariables>& point) {
  Rational value = expr.constant;
  for (int v = 0; v < kMaxVariables; ++v)
    value += expr.coeff(v) * point[static_cast<std::size_t>(v)];
  return value;
}

inline bool holds(const Constraint& con,
                  const std::array<Rational, kMaxVariables>& point) {
  const Rational lhs = evaluate(con.lhs, point);
  const Rational rhs = evaluate(con.rhs, point);
  return con.op == CmpOp::kLe ? lhs <= rhs : lhs >= rhs;
}

// ---------------------------------------------------------------------
// Pairwise ordering comparator, written rule by rule from the ordering
// contract. Returns -1, 0, or +1. Used to verify sort_declarations.

struct OrderedDecl {
  IrDecl decl;
  ConstraintType type = ConstraintType::kLinear;
  int position = 0;
};

inline int compare_rationals(const Rational& a, const Rational& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

inline int oracle_compare(const OrderedDecl& a, const OrderedDecl& b) {
  // Rule 1: objective before constraints.
  const bool a_obj = is_objective(a.decl);
  const bool b_obj = is_objective(b.decl);
  if (a_obj != b_obj) return a_obj ? -1 : 1;
  if (a_obj && b_obj) return 0;

  // Rule 2: constraint type order.
  if (a.type != b.type) return a.type < b.type ? -1 : 1;

  // Rule 3: position, for linear constraints.
  if (a.type == ConstraintType::kLinear && a.position != b.position)
    return a.position < b.position ? -1 : 1;

  const IrDecl na = normalize(a.decl);
  const IrDecl nb = normalize(b.decl);
  const auto& ca = std::get<Constraint>(na);
  const auto& cb = std::get<Constraint>(nb);

  // Rule 4: variable index sequence (x before y before z before w).
  const std::vector<int> va = ca.lhs.vars();
  const std::vector<int> vb = cb.lhs.vars();
  if (va != vb) return va < vb ? -1 : 1;

  // Rule 5: <= before >=.
  if (ca.op != cb.op) return ca.op == CmpOp::kLe ? -1 : 1;

  // Structural tie break: coefficients then right-hand side.
  for (int v = 0; v < kMaxVariables; ++v) {
    const int c = compare_rationals(ca.lhs.coeff(v), cb.lhs.coeff(v));
    if (c != 0) return c;
  }
  return compare_rationals(ca.rhs.constant, cb.rhs.constant);
}

// ---------------------------------------------------------------------
// Exhaustive maximum bipartite matching with equality edges, for checking
// match_declarations on small instances.

inline int max_matching_recurse(const std::vector<std::vector<bool>>& edge,
                                std::size_t gold_index,
                                std::vector<bool>& used) {
  if (gold_index == edge.size()) return 0;
  int best = max_matching_recurse(edge, gold_index + 1, used);  // skip
  for (std::size_t p = 0; p < used.size(); ++p) {
    if (used[p] || !edge[gold_index][p]) continue;
    used[p] = true;
    best = std::max(best,
                    1 + max_matching_recurse(edge, gold_index + 1, used));
    used[p] = false;
  }
  return best;
}

inline int exhaustive_max_matching(const std::vector<IrDecl>& predicted,
                                   const std::vector<IrDecl>& gold) {
  std::vector<std::vector<bool>> edge(gold.size(),
                                      std::vector<bool>(predicted.size()));
  for (std::size_t g = 0; g < gold.size(); ++g)
    for (std::size_t p = 0; p < predicted.size(); ++p)
      edge[g][p] = gold[g] == predicted[p];
  std::vector<bool> used(predicted.size(), false);
  return max_matching_recurse(edge, 0, used);
}

}  // namespace lpform::testing

#endif  // LPFORM_TESTS_SUPPORT_ORACLES_HPP_
