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
// JSON record forms shared by corpus files, prediction files, and the CLI.
// Rationals travel as strings ("3", "0.3", "7/10") or JSON integers, never
// floats.

#ifndef LPFORM_SERIALIZE_HPP_
#define LPFORM_SERIALIZE_HPP_

#include <string>

#include "json.hpp"
#include "lpform/canonical.hpp"

namespace lpform {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& value, const std::string& context);
Json rational_to_json(const Rational& value);

// {"direction": "max", "objective": ["3", "4"],
//  "rows": [{"coeffs": ["3", "4"], "op": "<=", "rhs": "50"}]}
Json canonical_form_to_json(const CanonicalForm& form);
CanonicalForm canonical_form_from_json(const Json& record,
                                       const std::string& context);

// Rejects JSON objects carrying fields outside `allowed`.
void check_fields(const Json& object, std::initializer_list<const char*> allowed,
                  const std::string& context);

}  // namespace lpform

#endif  // LPFORM_SERIALIZE_HPP_
