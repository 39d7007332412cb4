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
// Declaration-level mapping accuracy:
//
//   accuracy = 1 - (sum FP_i + FN_i) / (sum D_i)
//
// over all problems i, where D counts gold declarations, FP counts
// predicted declarations with no gold match, and FN counts gold
// declarations with no predicted match. Matching is exact: a prediction
// matches a gold declaration iff direction/operator, every coefficient,
// and the constant agree as rationals. There is no partial credit, no
// scale-invariance (2x <= 10 does not match x <= 5), and no clamping:
// heavy over-generation can push accuracy below zero and is reported
// as-is.

#ifndef LPFORM_SCORER_HPP_
#define LPFORM_SCORER_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "lpform/canonical.hpp"
#include "lpform/corpus.hpp"
#include "lpform/ir.hpp"

namespace lpform {

struct MatchCounts {
  int matched = 0;
  int false_positives = 0;
  int false_negatives = 0;
};

// Multiset exact matching between normalized declarations. Duplicated
// identical declarations match one-for-one by multiplicity; the result
// equals an exhaustive maximum bipartite matching restricted to equality
// edges. Throws std::invalid_argument on unnormalized input.
MatchCounts match_declarations(const std::vector<IrDecl>& predicted,
                               const std::vector<IrDecl>& gold);

struct ProblemScore {
  std::string id;
  int declarations = 0;  // D_i
  int matched = 0;
  int false_positives = 0;
  int false_negatives = 0;
  bool parse_error = false;  // prediction was present but unusable
};

struct ScoreReport {
  std::vector<ProblemScore> per_problem;
  int total_declarations = 0;
  int total_false_positives = 0;
  int total_false_negatives = 0;
  Rational accuracy;
};

// One prediction record: either raw IR text or a canonical form record.
struct Prediction {
  std::string id;
  std::variant<std::string, CanonicalForm> payload;
};

// Line-delimited records {"id": ..., "ir": "..."} or
// {"id": ..., "canonical": {...}}.
std::vector<Prediction> load_predictions(const std::filesystem::path& path);
std::vector<Prediction> parse_predictions(std::istream& in,
                                          const std::string& source_name);

// Scores predictions against a corpus. A gold problem with no prediction
// contributes FN = D. A prediction that fails to parse as IR is treated
// the same way and flagged via ProblemScore::parse_error. A prediction id
// with no gold problem, a duplicate prediction id, and an empty corpus are
// errors.
ScoreReport score(const std::vector<Prediction>& predictions,
                  const std::vector<Problem>& corpus);

std::string score_report_to_json_line(const ScoreReport& report);
std::string format_report_table(const ScoreReport& report);

}  // namespace lpform

#endif  // LPFORM_SCORER_HPP_
