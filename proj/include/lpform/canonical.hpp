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
// Constraint typing, the canonical declaration order, and conversion of
// ordered documents into dense coefficient form.
//
// Declarations are ordered by a composite key:
//   1. the objective precedes all constraints;
//   2. constraint type: lowerbound < upperbound < xy < xby < sum < linear
//      < ratio;
//   3. linear constraints: ascending source position;
//   4. within a type: ascending variable-index sequence (x before y before
//      z before w, then lexicographically);
//   5. remaining ties: <= before >=.
// Any tie left after rule 5 is broken structurally (coefficients, then
// right-hand side), so the order is total up to exact duplicates and does
// not depend on input order.

#ifndef LPFORM_CANONICAL_HPP_
#define LPFORM_CANONICAL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpform/ir.hpp"

namespace lpform {

struct Problem;  // corpus.hpp

enum class ConstraintType {
  kLowerbound = 0,
  kUpperbound,
  kXy,
  kXby,
  kSum,
  kLinear,
  kRatio,
};

std::string_view to_string(ConstraintType type);
std::optional<ConstraintType> constraint_type_from_string(std::string_view s);

struct ClassifyMeta {
  bool ratio_origin = false;
  int source_position = 0;
};

// Classifies a normalized constraint:
//   ratio       came from a parenthesized product (or is labeled so);
//   lowerbound  single variable, coefficient 1, >=;
//   upperbound  single variable, coefficient 1, <=;
//   xy          two variables with coefficients {+1, -1}, rhs 0;
//   xby         two variables, one coefficient +-1, the other of opposite
//               sign, rhs 0, and not xy;
//   sum         two or more variables, every coefficient exactly 1;
//   linear      everything else.
// Throws std::invalid_argument for objectives or unnormalized input.
ConstraintType classify(const IrDecl& decl, const ClassifyMeta& meta);

// Stable sort of a document by the composite key above. `types` and
// `positions` carry one entry per *constraint*, in document order; throws
// std::invalid_argument on length mismatch.
IrDocument sort_declarations(const IrDocument& doc,
                             const std::vector<ConstraintType>& types,
                             const std::vector<int>& positions);

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct CanonicalRow {
  RationalVector coeffs;
  CmpOp op = CmpOp::kLe;
  Rational rhs;

  friend bool operator==(const CanonicalRow& a, const CanonicalRow& b) {
    if (a.coeffs.size() != b.coeffs.size() || a.op != b.op || a.rhs != b.rhs)
      return false;
    for (Eigen::Index i = 0; i < a.coeffs.size(); ++i)
      if (a.coeffs(i) != b.coeffs(i)) return false;
    return true;
  }
};

struct CanonicalForm {
  Direction direction = Direction::kMax;
  RationalVector objective;
  std::vector<CanonicalRow> rows;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.direction != b.direction || a.rows != b.rows) return false;
    if (a.objective.size() != b.objective.size()) return false;
    for (Eigen::Index i = 0; i < a.objective.size(); ++i)
      if (a.objective(i) != b.objective(i)) return false;
    return true;
  }
};

// Converts an already-sorted document into dense vectors of length
// `variable_count`, preserving declaration order. The document must hold
// exactly one objective with a zero constant, and no declaration may use an
// alias at or beyond `variable_count`. Throws ValidationError otherwise.
CanonicalForm to_canonical(const IrDocument& sorted_doc, int variable_count);

// Gold declarations of a problem expressed as an IR document in canonical
// order. A "ratio" gold label supplies ratio-origin; all other types are
// derived from structure by classify().
IrDocument canonicalize_gold(const Problem& problem);

// to_canonical(canonicalize_gold(p)) with the problem's variable count.
CanonicalForm gold_canonical(const Problem& problem);

// Full second stage for one parsed IR string: parse, normalize, classify
// (ratio-origin from the parser), sort, convert. When `variable_count` is
// absent it is inferred as highest used alias + 1 (at least 1).
CanonicalForm convert_ir(std::string_view ir_text,
                         std::optional<int> variable_count = std::nullopt);

}  // namespace lpform

#endif  // LPFORM_CANONICAL_HPP_
