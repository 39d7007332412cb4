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

#include "lpform/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "lpform/corpus.hpp"

namespace lpform {

namespace {

constexpr std::array<std::string_view, 7> kTypeNames = {
    "lowerbound", "upperbound", "xy", "xby", "sum", "linear", "ratio"};

}  // namespace

std::string_view to_string(ConstraintType type) {
  return kTypeNames[static_cast<int>(type)];
}

std::optional<ConstraintType> constraint_type_from_string(
    std::string_view s) {
  for (std::size_t i = 0; i < kTypeNames.size(); ++i)
    if (kTypeNames[i] == s) return static_cast<ConstraintType>(i);
  return std::nullopt;
}

ConstraintType classify(const IrDecl& decl, const ClassifyMeta& meta) {
  if (!is_constraint(decl))
    throw std::invalid_argument("classify expects a constraint");
  if (!is_normalized(decl))
    throw std::invalid_argument("classify expects a normalized constraint");
  const auto& con = std::get<Constraint>(decl);
  const LinearExpr& lhs = con.lhs;
  const Rational& rhs = con.rhs.constant;
  const Rational one(1);

  if (meta.ratio_origin) return ConstraintType::kRatio;

  std::vector<int> vars = lhs.vars();
  if (vars.size() == 1 && lhs.coeff(vars[0]) == one)
    return con.op == CmpOp::kGe ? ConstraintType::kLowerbound
                                : ConstraintType::kUpperbound;

  if (vars.size() == 2 && rhs.is_zero()) {
    const Rational& a = lhs.coeff(vars[0]);
    const Rational& b = lhs.coeff(vars[1]);
    if ((a == one && b == -one) || (a == -one && b == one))
      return ConstraintType::kXy;
    bool a_unit = a == one || a == -one;
    bool b_unit = b == one || b == -one;
    if ((a_unit && b.sign() == -a.sign()) || (b_unit && a.sign() == -b.sign()))
      return ConstraintType::kXby;
  }

  if (vars.size() >= 2) {
    bool all_ones = true;
    for (int v : vars)
      if (lhs.coeff(v) != one) all_ones = false;
    if (all_ones) return ConstraintType::kSum;
  }

  return ConstraintType::kLinear;
}

namespace {

struct SortKey {
  int decl_rank = 0;  // objective 0, constraint 1
  int type_rank = 0;
  int position = 0;  // source position, linear constraints only
  std::vector<int> var_seq;
  int op_rank = 0;
  std::vector<Rational> structure;  // coefficients then rhs

  friend bool operator<(const SortKey& a, const SortKey& b) {
    if (a.decl_rank != b.decl_rank) return a.decl_rank < b.decl_rank;
    if (a.type_rank != b.type_rank) return a.type_rank < b.type_rank;
    if (a.position != b.position) return a.position < b.position;
    if (a.var_seq != b.var_seq) return a.var_seq < b.var_seq;
    if (a.op_rank != b.op_rank) return a.op_rank < b.op_rank;
    return std::lexicographical_compare(a.structure.begin(), a.structure.end(),
                                        b.structure.begin(),
                                        b.structure.end());
  }
};

SortKey make_key(const IrDecl& decl, ConstraintType type, int position) {
  SortKey key;
  if (is_objective(decl)) return key;
  IrDecl norm = normalize(decl);
  const auto& con = std::get<Constraint>(norm);
  key.decl_rank = 1;
  key.type_rank = static_cast<int>(type);
  key.position = type == ConstraintType::kLinear ? position : 0;
  key.var_seq = con.lhs.vars();
  key.op_rank = con.op == CmpOp::kLe ? 0 : 1;
  for (int v = 0; v < kMaxVariables; ++v)
    key.structure.push_back(con.lhs.coeff(v));
  key.structure.push_back(con.rhs.constant);
  return key;
}

}  // namespace

IrDocument sort_declarations(const IrDocument& doc,
                             const std::vector<ConstraintType>& types,
                             const std::vector<int>& positions) {
  std::size_t constraints = 0;
  for (const IrDecl& d : doc.decls)
    if (is_constraint(d)) ++constraints;
  if (types.size() != constraints || positions.size() != constraints)
    throw std::invalid_argument(
        "sort_declarations: expected one type and one position per "
        "constraint (" +
        std::to_string(constraints) + " constraints, " +
        std::to_string(types.size()) + " types, " +
        std::to_string(positions.size()) + " positions)");

  std::vector<SortKey> keys;
  keys.reserve(doc.decls.size());
  std::size_t next = 0;
  for (const IrDecl& d : doc.decls) {
    if (is_constraint(d)) {
      keys.push_back(make_key(d, types[next], positions[next]));
      ++next;
    } else {
      keys.push_back(make_key(d, ConstraintType::kLinear, 0));
    }
  }

  std::vector<std::size_t> order(doc.decls.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return keys[a] < keys[b];
                   });

  IrDocument out;
  out.decls.reserve(doc.decls.size());
  for (std::size_t i : order) out.decls.push_back(doc.decls[i]);
  return out;
}

CanonicalForm to_canonical(const IrDocument& sorted_doc, int variable_count) {
  if (variable_count < 1 || variable_count > kMaxVariables)
    throw std::invalid_argument("variable count must be between 1 and 4");

  auto densify = [&](const LinearExpr& expr) {
    RationalVector v = RationalVector::Constant(variable_count, Rational(0));
    for (int var = 0; var < kMaxVariables; ++var) {
      if (!expr.has_var(var)) continue;
      if (var >= variable_count)
        throw ValidationError(
            std::string("alias '") + variable_alias(var) +
            "' is beyond the declared variable count " +
            std::to_string(variable_count));
      v(var) = expr.coeff(var);
    }
    return v;
  };

  CanonicalForm form;
  bool has_objective = false;
  for (const IrDecl& d : sorted_doc.decls) {
    if (const auto* obj = std::get_if<Objective>(&d)) {
      if (has_objective)
        throw ValidationError("document has more than one objective");
      has_objective = true;
      if (!obj->expr.constant.is_zero())
        throw ValidationError(
            "objective has a constant term, which has no canonical slot");
      form.direction = obj->direction;
      form.objective = densify(obj->expr);
      continue;
    }
    IrDecl norm = normalize(d);
    const auto& con = std::get<Constraint>(norm);
    CanonicalRow row;
    row.coeffs = densify(con.lhs);
    row.op = con.op;
    row.rhs = con.rhs.constant;
    form.rows.push_back(std::move(row));
  }
  if (!has_objective)
    throw ValidationError("document has no objective declaration");
  return form;
}

IrDocument canonicalize_gold(const Problem& problem) {
  IrDocument doc;
  std::vector<ConstraintType> types;
  std::vector<int> positions;
  std::size_t constraint_index = 0;
  for (const GoldDecl& g : problem.gold) {
    doc.decls.push_back(g.decl);
    if (!is_constraint(g.decl)) continue;
    ClassifyMeta meta;
    meta.ratio_origin =
        g.type_label.has_value() && *g.type_label == ConstraintType::kRatio;
    meta.source_position =
        constraint_index < problem.order_hints.size()
            ? problem.order_hints[constraint_index]
            : static_cast<int>(constraint_index);
    types.push_back(classify(normalize(g.decl), meta));
    positions.push_back(meta.source_position);
    ++constraint_index;
  }
  return sort_declarations(doc, types, positions);
}

CanonicalForm gold_canonical(const Problem& problem) {
  return to_canonical(canonicalize_gold(problem),
                      static_cast<int>(problem.variables.size()));
}

CanonicalForm convert_ir(std::string_view ir_text,
                         std::optional<int> variable_count) {
  ParseInfo info;
  IrDocument doc = parse_ir(ir_text, info);

  IrDocument norm = normalize(doc);
  std::vector<ConstraintType> types;
  std::vector<int> positions;
  int highest = -1;
  std::size_t constraint_index = 0;
  for (std::size_t i = 0; i < norm.decls.size(); ++i) {
    const IrDecl& d = norm.decls[i];
    if (const auto* obj = std::get_if<Objective>(&d)) {
      highest = std::max(highest, obj->expr.highest_var());
      continue;
    }
    const auto& con = std::get<Constraint>(d);
    highest = std::max(highest, con.lhs.highest_var());
    ClassifyMeta meta;
    meta.ratio_origin = info.ratio_origin[i];
    meta.source_position = static_cast<int>(constraint_index);
    types.push_back(classify(d, meta));
    positions.push_back(meta.source_position);
    ++constraint_index;
  }

  int count = variable_count.value_or(std::max(highest + 1, 1));
  return to_canonical(sort_declarations(norm, types, positions), count);
}

}  // namespace lpform
