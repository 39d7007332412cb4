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
// The intermediate representation: a sequence of LP declarations written as
// plain mathematical expressions, e.g.
//
//   maximize 3x + 4y ; 3x + 4y <= 50 ; x >= 0
//
// Grammar (whitespace insignificant):
//
//   doc        := decl (";" decl)*
//   decl       := objective | constraint
//   objective  := ("maximize" | "minimize") expr
//   constraint := expr ("<=" | ">=") expr
//   expr       := "-"? term (("+" | "-") term)*
//   term       := number | number? var | number "(" expr ")"
//   var        := "x" | "y" | "z" | "w"
//   number     := decimal | integer "/" integer
//
// "<="/">=" may also be written as U+2264/U+2265. Parenthesized products
// ("0.3 ( x + y )") are distributed into linear terms while parsing; the
// fact that a declaration used one is reported through ParseInfo, not
// stored on the declaration itself. The leading "-" is accepted so that
// every printable document parses back.

#ifndef LPFORM_IR_HPP_
#define LPFORM_IR_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpform/error.hpp"
#include "lpform/rational.hpp"

namespace lpform {

inline constexpr int kMaxVariables = 4;

// Canonical variable aliases in index order: x, y, z, w.
char variable_alias(int index);       // throws std::out_of_range
int alias_index(char32_t alias);      // -1 when not an alias

// Linear expression over the four canonical aliases plus a constant.
// A zero coefficient and an absent term are the same thing.
struct LinearExpr {
  using Coeffs = Eigen::Matrix<Rational, kMaxVariables, 1>;

  Coeffs coeffs = Coeffs::Constant(Rational(0));
  Rational constant;

  const Rational& coeff(int var) const { return coeffs(var); }
  void set_coeff(int var, Rational value) { coeffs(var) = value; }

  bool has_var(int var) const { return !coeffs(var).is_zero(); }
  bool is_constant() const;              // no variable terms
  bool is_identically_zero() const;      // no terms and zero constant
  int term_count() const;
  int lowest_var() const;                // -1 when constant
  int highest_var() const;               // -1 when constant
  std::vector<int> vars() const;         // ascending indices of terms

  LinearExpr& operator+=(const LinearExpr& other);
  LinearExpr& operator-=(const LinearExpr& other);
  LinearExpr& operator*=(const Rational& scale);

  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) {
    return a += b;
  }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) {
    return a -= b;
  }
  friend LinearExpr operator*(LinearExpr a, const Rational& s) {
    return a *= s;
  }

  friend bool operator==(const LinearExpr& a, const LinearExpr& b) {
    for (int v = 0; v < kMaxVariables; ++v)
      if (a.coeffs(v) != b.coeffs(v)) return false;
    return a.constant == b.constant;
  }
  friend bool operator!=(const LinearExpr& a, const LinearExpr& b) {
    return !(a == b);
  }
};

enum class Direction { kMax, kMin };
enum class CmpOp { kLe, kGe };

inline CmpOp flipped(CmpOp op) { return op == CmpOp::kLe ? CmpOp::kGe : CmpOp::kLe; }

struct Objective {
  Direction direction = Direction::kMax;
  LinearExpr expr;

  friend bool operator==(const Objective&, const Objective&) = default;
};

struct Constraint {
  LinearExpr lhs;
  CmpOp op = CmpOp::kLe;
  LinearExpr rhs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

using IrDecl = std::variant<Objective, Constraint>;

inline bool is_objective(const IrDecl& d) {
  return std::holds_alternative<Objective>(d);
}
inline bool is_constraint(const IrDecl& d) {
  return std::holds_alternative<Constraint>(d);
}

struct IrDocument {
  std::vector<IrDecl> decls;

  friend bool operator==(const IrDocument&, const IrDocument&) = default;
};

// Per-declaration parse metadata, aligned with IrDocument::decls.
// ratio_origin[i] is true when declaration i used a parenthesized product.
struct ParseInfo {
  std::vector<bool> ratio_origin;
};

IrDocument parse_ir(std::string_view text);
IrDocument parse_ir(std::string_view text, ParseInfo& info);

// Canonical surface syntax: lowercase keywords, terms in alias order,
// coefficients as shortest exact decimal or a/b, declarations joined by
// " ; ". parse_ir(print_ir(doc)) == doc for every valid document.
std::string print_ir(const IrDocument& doc);
std::string print_decl(const IrDecl& decl);
std::string print_expr(const LinearExpr& expr);

// Rewrites a constraint to `terms op constant`: all variable terms on the
// left, the constant on the right. The operator is never flipped, so LE/GE
// identity survives for the ordering rules. Objectives pass through.
IrDecl normalize(const IrDecl& decl);
IrDocument normalize(const IrDocument& doc);
bool is_normalized(const IrDecl& decl);

}  // namespace lpform

#endif  // LPFORM_IR_HPP_
