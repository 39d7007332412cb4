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
// Annotated LP word problems: one JSON record per line.
//
//   {"id": "p1",
//    "text": "A farmer ...",
//    "tags": [{"label": "VAR", "start": 2, "end": 8, "decl": 1}, ...],
//    "variables": ["corn", "wheat"],
//    "gold": [{"direction": "max", "coeffs": ["3", "4"]},
//             {"coeffs": ["3", "4"], "op": "<=", "rhs": "50",
//              "type": "linear"}],
//    "order_hints": [0]}
//
// Spans are half-open [start, end) ranges counted in Unicode scalar
// values. "decl" (optional) links a tag to a gold declaration index.
// "type" (optional) is one of lowerbound/upperbound/xy/xby/sum/linear/
// ratio. "order_hints" (optional) gives each constraint's source position;
// when absent the constraint index is used. Rationals are strings or JSON
// integers, never floats. Unknown labels and unknown fields are rejected.

#ifndef LPFORM_CORPUS_HPP_
#define LPFORM_CORPUS_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpform/canonical.hpp"
#include "lpform/ir.hpp"

namespace lpform {

enum class TagLabel { kVar, kParam, kLimit, kConstDir, kObjDir, kObjName };

std::string_view to_string(TagLabel label);
std::optional<TagLabel> tag_label_from_string(std::string_view s);

struct EntityTag {
  TagLabel label = TagLabel::kVar;
  int start = 0;  // half-open [start, end), in Unicode scalar values
  int end = 0;
  std::string surface;            // always equals text[start..end)
  std::optional<int> linked_decl;  // index into Problem::gold

  friend bool operator==(const EntityTag&, const EntityTag&) = default;
};

struct GoldDecl {
  IrDecl decl;  // objectives as given; constraints in `terms op const` form
  std::optional<ConstraintType> type_label;

  friend bool operator==(const GoldDecl&, const GoldDecl&) = default;
};

struct Problem {
  std::string id;
  std::string text;
  std::vector<EntityTag> tags;         // ascending by start, disjoint
  std::vector<std::string> variables;  // order of first mention; 1..4
  std::vector<GoldDecl> gold;          // exactly one objective
  std::vector<int> order_hints;        // one per constraint

  friend bool operator==(const Problem&, const Problem&) = default;
};

// Canonical alias ('x', 'y', 'z', 'w') of the problem's index-th variable;
// std::out_of_range when the problem has no such variable.
char variable_alias(const Problem& problem, int index);

// Throws ValidationError naming the violated field. `context` prefixes
// messages (e.g. "corpus.jsonl:12").
void validate_problem(const Problem& problem, const std::string& context);

std::vector<Problem> load_corpus(const std::filesystem::path& path);
std::vector<Problem> parse_corpus(std::istream& in,
                                  const std::string& source_name);

void save_corpus(const std::vector<Problem>& corpus, std::ostream& out);
std::string problem_to_json_line(const Problem& problem);

// Gold constraints whose stored type label disagrees with the structural
// classification. Surfaced by `lpform validate`; an empty result means the
// corpus matches the classification contract.
struct TypeDisagreement {
  std::string problem_id;
  int gold_index = 0;
  ConstraintType label = ConstraintType::kLinear;
  ConstraintType derived = ConstraintType::kLinear;
};

std::vector<TypeDisagreement> find_type_disagreements(const Problem& problem);

}  // namespace lpform

#endif  // LPFORM_CORPUS_HPP_
