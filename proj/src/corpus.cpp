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

#include "lpform/corpus.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "lpform/serialize.hpp"
#include "lpform/unicode.hpp"

namespace lpform {

namespace {

constexpr std::array<std::string_view, 6> kLabelNames = {
    "VAR", "PARAM", "LIMIT", "CONST_DIR", "OBJ_DIR", "OBJ_NAME"};

}  // namespace

std::string_view to_string(TagLabel label) {
  return kLabelNames[static_cast<int>(label)];
}

std::optional<TagLabel> tag_label_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i)
    if (kLabelNames[i] == s) return static_cast<TagLabel>(i);
  return std::nullopt;
}

namespace {

int int_field(const Json& object, const char* name,
              const std::string& context) {
  if (!object.contains(name))
    throw ValidationError(context, std::string("missing field '") + name + "'");
  const Json& v = object[name];
  if (!v.is_number_integer())
    throw ValidationError(context,
                          std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& object, const char* name,
                         const std::string& context) {
  if (!object.contains(name))
    throw ValidationError(context, std::string("missing field '") + name + "'");
  const Json& v = object[name];
  if (!v.is_string())
    throw ValidationError(context,
                          std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

EntityTag tag_from_json(const Json& record, const std::string& context) {
  if (!record.is_object())
    throw ValidationError(context, "tag must be an object");
  check_fields(record, {"label", "start", "end", "decl"}, context);
  EntityTag tag;
  const std::string label = string_field(record, "label", context);
  const auto parsed = tag_label_from_string(label);
  if (!parsed)
    throw ValidationError(context, "unknown tag label '" + label + "'");
  tag.label = *parsed;
  tag.start = int_field(record, "start", context);
  tag.end = int_field(record, "end", context);
  if (record.contains("decl")) {
    if (!record["decl"].is_number_integer())
      throw ValidationError(context, "field 'decl' must be an integer");
    tag.linked_decl = record["decl"].get<int>();
  }
  return tag;
}

LinearExpr expr_from_coeffs(const Json& coeffs, const std::string& context) {
  if (!coeffs.is_array())
    throw ValidationError(context, "field 'coeffs' must be an array");
  if (coeffs.size() < 1 || coeffs.size() > kMaxVariables)
    throw ValidationError(context,
                          "'coeffs' must have 1 to 4 entries, got " +
                              std::to_string(coeffs.size()));
  LinearExpr expr;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    expr.set_coeff(static_cast<int>(i), rational_from_json(coeffs[i], context));
  return expr;
}

GoldDecl gold_from_json(const Json& record, const std::string& context,
                        std::size_t variable_count) {
  if (!record.is_object())
    throw ValidationError(context, "declaration must be an object");
  const bool objective = record.contains("direction");
  GoldDecl gold;
  if (objective) {
    check_fields(record, {"direction", "coeffs"}, context);
    Objective obj;
    const std::string dir = string_field(record, "direction", context);
    if (dir == "max")
      obj.direction = Direction::kMax;
    else if (dir == "min")
      obj.direction = Direction::kMin;
    else
      throw ValidationError(context,
                            "field 'direction' must be \"max\" or \"min\"");
    if (!record.contains("coeffs"))
      throw ValidationError(context, "missing field 'coeffs'");
    obj.expr = expr_from_coeffs(record["coeffs"], context);
    if (obj.expr.is_identically_zero())
      throw ValidationError(context, "objective is identically zero");
    gold.decl = obj;
  } else {
    check_fields(record, {"coeffs", "op", "rhs", "type"}, context);
    for (const char* field : {"coeffs", "op", "rhs"})
      if (!record.contains(field))
        throw ValidationError(context,
                              std::string("missing field '") + field + "'");
    Constraint con;
    con.lhs = expr_from_coeffs(record["coeffs"], context);
    const std::string op = string_field(record, "op", context);
    if (op == "<=")
      con.op = CmpOp::kLe;
    else if (op == ">=")
      con.op = CmpOp::kGe;
    else
      throw ValidationError(context, "field 'op' must be \"<=\" or \">=\"");
    con.rhs.constant = rational_from_json(record["rhs"], context);
    if (con.lhs.is_constant())
      throw ValidationError(context, "constraint has no variable terms");
    gold.decl = con;
    if (record.contains("type")) {
      const std::string type = string_field(record, "type", context);
      const auto parsed = constraint_type_from_string(type);
      if (!parsed)
        throw ValidationError(context, "unknown constraint type '" + type + "'");
      gold.type_label = *parsed;
    }
  }

  // Dense coeff arrays must match the problem's variable count exactly.
  const Json& coeffs = record["coeffs"];
  if (coeffs.size() != variable_count)
    throw ValidationError(context,
                          "'coeffs' has " + std::to_string(coeffs.size()) +
                              " entries but the problem declares " +
                              std::to_string(variable_count) + " variables");
  return gold;
}

Problem problem_from_json(const Json& record, const std::string& context) {
  if (!record.is_object())
    throw ValidationError(context, "record must be a JSON object");
  check_fields(record,
               {"id", "text", "tags", "variables", "gold", "order_hints"},
               context);
  Problem p;
  p.id = string_field(record, "id", context);
  p.text = string_field(record, "text", context);

  if (!record.contains("variables") || !record["variables"].is_array())
    throw ValidationError(context, "field 'variables' must be an array");
  for (const Json& v : record["variables"]) {
    if (!v.is_string())
      throw ValidationError(context, "variable names must be strings");
    p.variables.push_back(v.get<std::string>());
  }
  if (p.variables.empty() || p.variables.size() > kMaxVariables)
    throw ValidationError(context,
                          "field 'variables' must list 1 to 4 variables, got " +
                              std::to_string(p.variables.size()));

  if (!record.contains("tags") || !record["tags"].is_array())
    throw ValidationError(context, "field 'tags' must be an array");
  int tag_index = 0;
  for (const Json& t : record["tags"])
    p.tags.push_back(tag_from_json(
        t, context + ".tags[" + std::to_string(tag_index++) + "]"));

  if (!record.contains("gold") || !record["gold"].is_array())
    throw ValidationError(context, "field 'gold' must be an array");
  int gold_index = 0;
  for (const Json& g : record["gold"])
    p.gold.push_back(gold_from_json(
        g, context + ".gold[" + std::to_string(gold_index++) + "]",
        p.variables.size()));

  std::size_t constraints = 0;
  for (const GoldDecl& g : p.gold)
    if (is_constraint(g.decl)) ++constraints;
  if (record.contains("order_hints")) {
    const Json& hints = record["order_hints"];
    if (!hints.is_array())
      throw ValidationError(context, "field 'order_hints' must be an array");
    for (const Json& h : hints) {
      if (!h.is_number_integer() || h.get<long long>() < 0)
        throw ValidationError(context,
                              "order hints must be non-negative integers");
      p.order_hints.push_back(h.get<int>());
    }
    if (p.order_hints.size() != constraints)
      throw ValidationError(
          context, "field 'order_hints' has " +
                       std::to_string(p.order_hints.size()) +
                       " entries but the problem has " +
                       std::to_string(constraints) + " constraints");
  } else {
    for (std::size_t i = 0; i < constraints; ++i)
      p.order_hints.push_back(static_cast<int>(i));
  }

  validate_problem(p, context);
  const std::u32string text = utf8_decode(p.text);
  for (EntityTag& tag : p.tags)
    tag.surface = utf8_encode(text.substr(tag.start, tag.end - tag.start));
  return p;
}

}  // namespace

char variable_alias(const Problem& problem, int index) {
  if (index < 0 || index >= static_cast<int>(problem.variables.size()))
    throw std::out_of_range("variable index " + std::to_string(index) +
                            " out of range for problem '" + problem.id +
                            "' with " +
                            std::to_string(problem.variables.size()) +
                            " variables");
  return variable_alias(index);
}

void validate_problem(const Problem& p, const std::string& context) {
  if (p.id.empty()) throw ValidationError(context, "field 'id' is empty");

  std::u32string text;
  try {
    text = utf8_decode(p.text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(context, std::string("field 'text': ") + e.what());
  }
  const int length = static_cast<int>(text.size());

  for (std::size_t i = 0; i < p.tags.size(); ++i) {
    const EntityTag& tag = p.tags[i];
    const std::string tag_context =
        context + ".tags[" + std::to_string(i) + "]";
    if (tag.start < 0 || tag.start >= tag.end || tag.end > length)
      throw ValidationError(
          tag_context, "span [" + std::to_string(tag.start) + ", " +
                           std::to_string(tag.end) +
                           ") is not a valid range into a text of length " +
                           std::to_string(length));
    const std::string slice =
        utf8_encode(text.substr(tag.start, tag.end - tag.start));
    if (!tag.surface.empty() && tag.surface != slice)
      throw ValidationError(tag_context,
                            "surface '" + tag.surface +
                                "' does not match the text slice '" + slice +
                                "'");
    if (tag.linked_decl &&
        (*tag.linked_decl < 0 ||
         *tag.linked_decl >= static_cast<int>(p.gold.size())))
      throw ValidationError(tag_context,
                            "field 'decl' points outside the gold list");
    if (i > 0) {
      const EntityTag& prev = p.tags[i - 1];
      if (tag.start < prev.start)
        throw ValidationError(tag_context, "tags are not sorted by start");
      if (tag.start < prev.end)
        throw ValidationError(
            tag_context,
            "span [" + std::to_string(tag.start) + ", " +
                std::to_string(tag.end) + ") overlaps span [" +
                std::to_string(prev.start) + ", " + std::to_string(prev.end) +
                ")");
    }
  }

  if (p.variables.empty() || p.variables.size() > kMaxVariables)
    throw ValidationError(context, "problems must declare 1 to 4 variables");

  int objectives = 0;
  std::size_t constraints = 0;
  for (std::size_t i = 0; i < p.gold.size(); ++i) {
    const std::string gold_context =
        context + ".gold[" + std::to_string(i) + "]";
    const GoldDecl& g = p.gold[i];
    if (is_objective(g.decl)) {
      ++objectives;
      const auto& obj = std::get<Objective>(g.decl);
      if (obj.expr.highest_var() >= static_cast<int>(p.variables.size()))
        throw ValidationError(gold_context,
                              "objective references an undeclared variable");
    } else {
      ++constraints;
      const auto& con = std::get<Constraint>(g.decl);
      if (!is_normalized(g.decl))
        throw ValidationError(gold_context,
                              "gold constraints must be in `terms op "
                              "constant` form");
      if (con.lhs.highest_var() >= static_cast<int>(p.variables.size()))
        throw ValidationError(gold_context,
                              "constraint references an undeclared variable");
    }
  }
  if (objectives != 1)
    throw ValidationError(context,
                          "expected exactly one objective declaration, got " +
                              std::to_string(objectives));
  if (p.order_hints.size() != constraints)
    throw ValidationError(context, "order_hints/constraint count mismatch");
  for (int hint : p.order_hints)
    if (hint < 0)
      throw ValidationError(context, "order hints must be non-negative");
}

std::vector<Problem> parse_corpus(std::istream& in,
                                  const std::string& source_name) {
  std::vector<Problem> corpus;
  std::unordered_set<std::string> seen_ids;
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
    Problem p = problem_from_json(record, context);
    if (!seen_ids.insert(p.id).second)
      throw ValidationError(context, "duplicate problem id '" + p.id + "'");
    corpus.push_back(std::move(p));
  }
  return corpus;
}

std::vector<Problem> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError(path.string(), "cannot open file");
  return parse_corpus(in, path.filename().string());
}

std::string problem_to_json_line(const Problem& p) {
  Json record;
  record["id"] = p.id;
  record["text"] = p.text;
  Json tags = Json::array();
  for (const EntityTag& tag : p.tags) {
    Json t;
    t["label"] = std::string(to_string(tag.label));
    t["start"] = tag.start;
    t["end"] = tag.end;
    if (tag.linked_decl) t["decl"] = *tag.linked_decl;
    tags.push_back(std::move(t));
  }
  record["tags"] = std::move(tags);
  record["variables"] = p.variables;
  Json gold = Json::array();
  for (const GoldDecl& g : p.gold) {
    Json d;
    if (const auto* obj = std::get_if<Objective>(&g.decl)) {
      d["direction"] = obj->direction == Direction::kMax ? "max" : "min";
      Json coeffs = Json::array();
      for (std::size_t v = 0; v < p.variables.size(); ++v)
        coeffs.push_back(rational_to_json(obj->expr.coeff(static_cast<int>(v))));
      d["coeffs"] = std::move(coeffs);
    } else {
      const auto& con = std::get<Constraint>(g.decl);
      Json coeffs = Json::array();
      for (std::size_t v = 0; v < p.variables.size(); ++v)
        coeffs.push_back(rational_to_json(con.lhs.coeff(static_cast<int>(v))));
      d["coeffs"] = std::move(coeffs);
      d["op"] = con.op == CmpOp::kLe ? "<=" : ">=";
      d["rhs"] = rational_to_json(con.rhs.constant);
      if (g.type_label) d["type"] = std::string(to_string(*g.type_label));
    }
    gold.push_back(std::move(d));
  }
  record["gold"] = std::move(gold);
  record["order_hints"] = p.order_hints;
  return record.dump();
}

void save_corpus(const std::vector<Problem>& corpus, std::ostream& out) {
  for (const Problem& p : corpus) out << problem_to_json_line(p) << "\n";
}

std::vector<TypeDisagreement> find_type_disagreements(const Problem& p) {
  std::vector<TypeDisagreement> out;
  std::size_t constraint_index = 0;
  for (std::size_t i = 0; i < p.gold.size(); ++i) {
    const GoldDecl& g = p.gold[i];
    if (!is_constraint(g.decl)) continue;
    const std::size_t position = constraint_index++;
    if (!g.type_label) continue;
    ClassifyMeta meta;
    meta.ratio_origin = *g.type_label == ConstraintType::kRatio;
    meta.source_position = position < p.order_hints.size()
                               ? p.order_hints[position]
                               : static_cast<int>(position);
    const ConstraintType derived = classify(normalize(g.decl), meta);
    if (derived != *g.type_label)
      out.push_back({p.id, static_cast<int>(i), *g.type_label, derived});
  }
  return out;
}

}  // namespace lpform
