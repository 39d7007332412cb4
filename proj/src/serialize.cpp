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

#include "lpform/serialize.hpp"

#include "lpform/error.hpp"

namespace lpform {

Rational rational_from_json(const Json& value, const std::string& context) {
  if (value.is_string()) {
    try {
      return Rational::from_string(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(context, e.what());
    }
  }
  if (value.is_number_integer())
    return Rational(value.get<long long>());
  if (value.is_number())
    throw ValidationError(context,
                          "rationals must be strings or integers, not "
                          "floats (write \"0.3\", not 0.3)");
  throw ValidationError(context, "expected a rational value");
}

Json rational_to_json(const Rational& value) {
  return Json(value.to_string());
}

Json canonical_form_to_json(const CanonicalForm& form) {
  Json record;
  record["direction"] = form.direction == Direction::kMax ? "max" : "min";
  Json objective = Json::array();
  for (Eigen::Index i = 0; i < form.objective.size(); ++i)
    objective.push_back(rational_to_json(form.objective(i)));
  record["objective"] = std::move(objective);
  Json rows = Json::array();
  for (const CanonicalRow& row : form.rows) {
    Json r;
    Json coeffs = Json::array();
    for (Eigen::Index i = 0; i < row.coeffs.size(); ++i)
      coeffs.push_back(rational_to_json(row.coeffs(i)));
    r["coeffs"] = std::move(coeffs);
    r["op"] = row.op == CmpOp::kLe ? "<=" : ">=";
    r["rhs"] = rational_to_json(row.rhs);
    rows.push_back(std::move(r));
  }
  record["rows"] = std::move(rows);
  return record;
}

namespace {

CmpOp op_from_json(const Json& value, const std::string& context) {
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s == "<=") return CmpOp::kLe;
    if (s == ">=") return CmpOp::kGe;
  }
  throw ValidationError(context, "field 'op' must be \"<=\" or \">=\"");
}

RationalVector vector_from_json(const Json& array, const std::string& context) {
  if (!array.is_array())
    throw ValidationError(context, "expected an array of rationals");
  if (array.size() < 1 || array.size() > kMaxVariables)
    throw ValidationError(context, "coefficient arrays must have 1 to " +
                                       std::to_string(kMaxVariables) +
                                       " entries, got " +
                                       std::to_string(array.size()));
  RationalVector v(array.size());
  for (std::size_t i = 0; i < array.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = rational_from_json(array[i], context);
  return v;
}

}  // namespace

CanonicalForm canonical_form_from_json(const Json& record,
                                       const std::string& context) {
  if (!record.is_object())
    throw ValidationError(context, "canonical record must be an object");
  check_fields(record, {"direction", "objective", "rows"}, context);
  for (const char* field : {"direction", "objective", "rows"})
    if (!record.contains(field))
      throw ValidationError(context,
                            std::string("missing field '") + field + "'");

  CanonicalForm form;
  const Json& dir = record["direction"];
  if (dir.is_string() && dir.get<std::string>() == "max")
    form.direction = Direction::kMax;
  else if (dir.is_string() && dir.get<std::string>() == "min")
    form.direction = Direction::kMin;
  else
    throw ValidationError(context, "field 'direction' must be \"max\" or "
                                   "\"min\"");

  form.objective = vector_from_json(record["objective"], context + ".objective");
  const Eigen::Index width = form.objective.size();

  if (!record["rows"].is_array())
    throw ValidationError(context, "field 'rows' must be an array");
  int index = 0;
  for (const Json& r : record["rows"]) {
    const std::string row_context =
        context + ".rows[" + std::to_string(index++) + "]";
    if (!r.is_object())
      throw ValidationError(row_context, "row must be an object");
    check_fields(r, {"coeffs", "op", "rhs"}, row_context);
    for (const char* field : {"coeffs", "op", "rhs"})
      if (!r.contains(field))
        throw ValidationError(row_context,
                              std::string("missing field '") + field + "'");
    CanonicalRow row;
    row.coeffs = vector_from_json(r["coeffs"], row_context + ".coeffs");
    if (row.coeffs.size() != width)
      throw ValidationError(row_context,
                            "row width " + std::to_string(row.coeffs.size()) +
                                " does not match objective width " +
                                std::to_string(width));
    row.op = op_from_json(r["op"], row_context);
    row.rhs = rational_from_json(r["rhs"], row_context + ".rhs");
    form.rows.push_back(std::move(row));
  }
  return form;
}

void check_fields(const Json& object,
                  std::initializer_list<const char*> allowed,
                  const std::string& context) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* name : allowed)
      if (item.key() == name) known = true;
    if (!known)
      throw ValidationError(context, "unknown field '" + item.key() + "'");
  }
}

}  // namespace lpform
