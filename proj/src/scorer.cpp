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

#include "lpform/scorer.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "lpform/serialize.hpp"

namespace lpform {

MatchCounts match_declarations(const std::vector<IrDecl>& predicted,
                               const std::vector<IrDecl>& gold) {
  for (const auto* side : {&predicted, &gold})
    for (const IrDecl& d : *side)
      if (!is_normalized(d))
        throw std::invalid_argument(
            "match_declarations expects normalized declarations");

  // The canonical printer is injective on normalized declarations, so the
  // printed form works as a multiset key. The maximum matching under
  // equality edges is sum over keys of min(pred count, gold count).
  std::map<std::string, int> pred_counts;
  for (const IrDecl& d : predicted) ++pred_counts[print_decl(d)];

  MatchCounts counts;
  std::map<std::string, int> gold_counts;
  for (const IrDecl& d : gold) ++gold_counts[print_decl(d)];
  for (const auto& [key, gold_count] : gold_counts) {
    auto it = pred_counts.find(key);
    const int pred_count = it == pred_counts.end() ? 0 : it->second;
    counts.matched += std::min(pred_count, gold_count);
  }
  counts.false_positives = static_cast<int>(predicted.size()) - counts.matched;
  counts.false_negatives = static_cast<int>(gold.size()) - counts.matched;
  return counts;
}

namespace {

std::vector<IrDecl> decls_from_canonical(const CanonicalForm& form) {
  std::vector<IrDecl> decls;
  Objective obj;
  obj.direction = form.direction;
  for (Eigen::Index v = 0; v < form.objective.size(); ++v)
    obj.expr.set_coeff(static_cast<int>(v), form.objective(v));
  decls.push_back(obj);
  for (const CanonicalRow& row : form.rows) {
    Constraint con;
    for (Eigen::Index v = 0; v < row.coeffs.size(); ++v)
      con.lhs.set_coeff(static_cast<int>(v), row.coeffs(v));
    con.op = row.op;
    con.rhs.constant = row.rhs;
    decls.push_back(con);
  }
  return decls;
}

std::vector<IrDecl> gold_decls(const Problem& problem) {
  std::vector<IrDecl> decls;
  decls.reserve(problem.gold.size());
  for (const GoldDecl& g : problem.gold) decls.push_back(g.decl);
  return decls;
}

}  // namespace

std::vector<Prediction> parse_predictions(std::istream& in,
                                          const std::string& source_name) {
  std::vector<Prediction> predictions;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string context =
        source_name + ":" + std::to_string(line_number);
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ValidationError(context,
                            std::string("malformed record: ") + e.what());
    }
    if (!record.is_object())
      throw ValidationError(context, "record must be a JSON object");
    check_fields(record, {"id", "ir", "canonical"}, context);
    if (!record.contains("id") || !record["id"].is_string())
      throw ValidationError(context, "field 'id' must be a string");
    Prediction pred;
    pred.id = record["id"].get<std::string>();
    const bool has_ir = record.contains("ir");
    const bool has_canonical = record.contains("canonical");
    if (has_ir == has_canonical)
      throw ValidationError(context,
                            "record must carry exactly one of 'ir' or "
                            "'canonical'");
    if (has_ir) {
      if (!record["ir"].is_string())
        throw ValidationError(context, "field 'ir' must be a string");
      pred.payload = record["ir"].get<std::string>();
    } else {
      pred.payload =
          canonical_form_from_json(record["canonical"], context + ".canonical");
    }
    predictions.push_back(std::move(pred));
  }
  return predictions;
}

std::vector<Prediction> load_predictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path.string(), "cannot open file");
  return parse_predictions(in, path.filename().string());
}

ScoreReport score(const std::vector<Prediction>& predictions,
                  const std::vector<Problem>& corpus) {
  std::unordered_map<std::string, const Prediction*> by_id;
  std::unordered_map<std::string, const Problem*> gold_by_id;
  for (const Problem& p : corpus) gold_by_id.emplace(p.id, &p);
  for (const Prediction& pred : predictions) {
    if (!gold_by_id.count(pred.id))
      throw ValidationError("prediction id '" + pred.id +
                            "' has no gold problem");
    if (!by_id.emplace(pred.id, &pred).second)
      throw ValidationError("duplicate prediction id '" + pred.id + "'");
  }

  ScoreReport report;
  for (const Problem& problem : corpus) {
    ProblemScore entry;
    entry.id = problem.id;
    entry.declarations = static_cast<int>(problem.gold.size());

    std::vector<IrDecl> predicted;
    auto it = by_id.find(problem.id);
    if (it != by_id.end()) {
      const Prediction& pred = *it->second;
      if (const auto* ir_text = std::get_if<std::string>(&pred.payload)) {
        try {
          IrDocument doc = parse_ir(*ir_text);
          for (const IrDecl& d : normalize(doc).decls) predicted.push_back(d);
        } catch (const ParseError&) {
          // An unusable prediction scores like a missing one: FN = D.
          entry.parse_error = true;
          predicted.clear();
        }
      } else {
        predicted = decls_from_canonical(std::get<CanonicalForm>(pred.payload));
      }
    }

    const MatchCounts counts = match_declarations(predicted, gold_decls(problem));
    entry.matched = counts.matched;
    entry.false_positives = counts.false_positives;
    entry.false_negatives = counts.false_negatives;
    report.total_declarations += entry.declarations;
    report.total_false_positives += entry.false_positives;
    report.total_false_negatives += entry.false_negatives;
    report.per_problem.push_back(std::move(entry));
  }

  if (report.total_declarations == 0)
    throw ValidationError("cannot score an empty corpus");
  report.accuracy =
      Rational(1) -
      Rational(report.total_false_positives + report.total_false_negatives,
               report.total_declarations);
  return report;
}

std::string score_report_to_json_line(const ScoreReport& report) {
  Json record;
  record["accuracy"] = report.accuracy.to_string();
  record["accuracy_decimal"] = report.accuracy.to_double();
  Json totals;
  totals["declarations"] = report.total_declarations;
  totals["false_positives"] = report.total_false_positives;
  totals["false_negatives"] = report.total_false_negatives;
  record["totals"] = std::move(totals);
  Json problems = Json::array();
  for (const ProblemScore& p : report.per_problem) {
    Json entry;
    entry["id"] = p.id;
    entry["declarations"] = p.declarations;
    entry["matched"] = p.matched;
    entry["false_positives"] = p.false_positives;
    entry["false_negatives"] = p.false_negatives;
    if (p.parse_error) entry["parse_error"] = true;
    problems.push_back(std::move(entry));
  }
  record["per_problem"] = std::move(problems);
  return record.dump();
}

std::string format_report_table(const ScoreReport& report) {
  std::ostringstream out;
  out << "id                              D  match     FP     FN\n";
  for (const ProblemScore& p : report.per_problem) {
    out << p.id;
    for (std::size_t k = p.id.size(); k < 30; ++k) out << ' ';
    char row[64];
    std::snprintf(row, sizeof(row), "%5d %6d %6d %6d", p.declarations,
                  p.matched, p.false_positives, p.false_negatives);
    out << row << (p.parse_error ? "  (parse error)" : "") << "\n";
  }
  out << "accuracy = " << report.accuracy.to_string();
  if (!report.accuracy.is_integer())
    out << " (" << report.accuracy.to_double() << ")";
  out << "\n";
  return out.str();
}

}  // namespace lpform
