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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "lpform/corpus.hpp"

using namespace lpform;

namespace {

std::vector<Problem> corpus_from(const std::string& jsonl) {
  std::istringstream in(jsonl);
  return parse_corpus(in, "test");
}

const char* kFarmRecord =
    R"({"id":"farm","text":"Profit is 3 per acre of corn and 4 per acre of wheat; the farm cannot use more than 50 acres.",)"
    R"("tags":[{"label":"OBJ_NAME","start":0,"end":6},{"label":"PARAM","start":10,"end":11},{"label":"VAR","start":24,"end":28},)"
    R"({"label":"PARAM","start":33,"end":34},{"label":"VAR","start":47,"end":52},{"label":"CONST_DIR","start":63,"end":69,"decl":1},)"
    R"({"label":"LIMIT","start":84,"end":86}],)"
    R"("variables":["corn","wheat"],)"
    R"("gold":[{"direction":"max","coeffs":["3","4"]},{"coeffs":["1","1"],"op":"<=","rhs":"50","type":"sum"},)"
    R"({"coeffs":["1","0"],"op":">=","rhs":"0","type":"lowerbound"}],)"
    R"("order_hints":[0,1]})";

}  // namespace

TEST_CASE("loads a record with two variables, one objective, two constraints") {
  const std::vector<Problem> corpus = corpus_from(kFarmRecord);
  REQUIRE(corpus.size() == 1);
  const Problem& p = corpus[0];
  CHECK(p.id == "farm");
  CHECK(p.variables == std::vector<std::string>{"corn", "wheat"});
  REQUIRE(p.gold.size() == 3);
  CHECK(is_objective(p.gold[0].decl));
  CHECK(is_constraint(p.gold[1].decl));
  CHECK(p.gold[1].type_label == ConstraintType::kSum);
  CHECK(p.order_hints == std::vector<int>{0, 1});

  // Surfaces are filled in from the text.
  CHECK(p.tags[0].surface == "Profit");
  CHECK(p.tags[2].surface == "corn");
  CHECK(p.tags[5].surface == "cannot");
  CHECK(p.tags[5].linked_decl == 1);
}

TEST_CASE("variable aliases are grounded in the variables list") {
  const Problem p = corpus_from(kFarmRecord)[0];
  CHECK(variable_alias(p, 0) == 'x');
  CHECK(variable_alias(p, 1) == 'y');
  CHECK_THROWS_AS(variable_alias(p, 2), std::out_of_range);
  CHECK_THROWS_AS(variable_alias(p, -1), std::out_of_range);
}

TEST_CASE("load then save then load is the identity") {
  const std::vector<Problem> corpus = corpus_from(kFarmRecord);
  std::ostringstream out;
  save_corpus(corpus, out);
  const std::vector<Problem> again = corpus_from(out.str());
  CHECK(again == corpus);

  // And stable on the second generation byte for byte.
  std::ostringstream out2;
  save_corpus(again, out2);
  CHECK(out2.str() == out.str());
}

TEST_CASE("spans count unicode scalar values, not bytes") {
  // "café cannot exceed 50" -- the é is two bytes but one position.
  const std::string record =
      R"({"id":"u1","text":"café cannot exceed 50",)"
      R"("tags":[{"label":"VAR","start":0,"end":4},{"label":"CONST_DIR","start":5,"end":11},{"label":"LIMIT","start":19,"end":21}],)"
      R"("variables":["café"],)"
      R"("gold":[{"direction":"max","coeffs":["1"]},{"coeffs":["1"],"op":"<=","rhs":"50"}]})";
  const Problem p = corpus_from(record)[0];
  CHECK(p.tags[0].surface == "café");
  CHECK(p.tags[1].surface == "cannot");
  CHECK(p.tags[2].surface == "50");
  CHECK(p.order_hints == std::vector<int>{0});  // defaulted
}

TEST_CASE("schema violations fail loudly with the line and field") {
  auto message_of = [](const std::string& jsonl) {
    try {
      corpus_from(jsonl);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("(no error)");
  };

  SUBCASE("malformed JSON names the line") {
    const std::string msg = message_of("{nope");
    CHECK(msg.find("test:1") != std::string::npos);
    CHECK(msg.find("malformed") != std::string::npos);
  }
  SUBCASE("inverted span") {
    const std::string msg = message_of(
        R"({"id":"b","text":"hello world","tags":[{"label":"VAR","start":5,"end":3}],)"
        R"("variables":["v"],"gold":[{"direction":"max","coeffs":["1"]}]})");
    CHECK(msg.find("[5, 3)") != std::string::npos);
  }
  SUBCASE("five variables") {
    const std::string msg = message_of(
        R"({"id":"b","text":"t","tags":[],"variables":["a","b","c","d","e"],)"
        R"("gold":[{"direction":"max","coeffs":["1","1","1","1","1"]}]})");
    CHECK(msg.find("1 to 4 variables") != std::string::npos);
  }
  SUBCASE("overlapping spans list both") {
    const std::string msg = message_of(
        R"({"id":"b","text":"hello world","tags":[{"label":"VAR","start":0,"end":5},{"label":"LIMIT","start":3,"end":7}],)"
        R"("variables":["v"],"gold":[{"direction":"max","coeffs":["1"]}]})");
    CHECK(msg.find("[3, 7)") != std::string::npos);
    CHECK(msg.find("[0, 5)") != std::string::npos);
  }
  SUBCASE("unknown tag label") {
    CHECK(message_of(
              R"({"id":"b","text":"t","tags":[{"label":"THING","start":0,"end":1}],)"
              R"("variables":["v"],"gold":[{"direction":"max","coeffs":["1"]}]})")
              .find("unknown tag label") != std::string::npos);
  }
  SUBCASE("unknown fields are schema drift") {
    CHECK(message_of(
              R"({"id":"b","text":"t","tags":[],"variables":["v"],)"
              R"("gold":[{"direction":"max","coeffs":["1"]}],"extra":1})")
              .find("unknown field 'extra'") != std::string::npos);
  }
  SUBCASE("float coefficients are rejected") {
    CHECK(message_of(
              R"({"id":"b","text":"t","tags":[],"variables":["v"],)"
              R"("gold":[{"direction":"max","coeffs":[0.3]}]})")
              .find("not floats") != std::string::npos);
  }
  SUBCASE("missing objective") {
    CHECK(message_of(
              R"({"id":"b","text":"t","tags":[],"variables":["v"],)"
              R"("gold":[{"coeffs":["1"],"op":"<=","rhs":"5"}]})")
              .find("exactly one objective") != std::string::npos);
  }
  SUBCASE("two objectives") {
    CHECK(message_of(
              R"({"id":"b","text":"t","tags":[],"variables":["v"],)"
              R"("gold":[{"direction":"max","coeffs":["1"]},{"direction":"min","coeffs":["1"]}]})")
              .find("exactly one objective") != std::string::npos);
  }
  SUBCASE("coefficient width mismatch") {
    CHECK(message_of(
              R"({"id":"b","text":"t","tags":[],"variables":["v","w"],)"
              R"("gold":[{"direction":"max","coeffs":["1"]}]})")
              .find("2 variables") != std::string::npos);
  }
  SUBCASE("unknown constraint type") {
    CHECK(message_of(
              R"({"id":"b","text":"t","tags":[],"variables":["v"],)"
              R"("gold":[{"direction":"max","coeffs":["1"]},{"coeffs":["1"],"op":"<=","rhs":"5","type":"fancy"}]})")
              .find("unknown constraint type") != std::string::npos);
  }
  SUBCASE("duplicate ids") {
    const std::string two = std::string(kFarmRecord) + "\n" + kFarmRecord;
    CHECK(message_of(two).find("duplicate problem id") != std::string::npos);
  }
  SUBCASE("order hint count mismatch") {
    CHECK(message_of(
              R"({"id":"b","text":"t","tags":[],"variables":["v"],)"
              R"("gold":[{"direction":"max","coeffs":["1"]},{"coeffs":["1"],"op":"<=","rhs":"5"}],"order_hints":[0,1]})")
              .find("order_hints") != std::string::npos);
  }
}

TEST_CASE("tag spans must be sorted and disjoint") {
  const std::string unsorted =
      R"({"id":"b","text":"hello world","tags":[{"label":"VAR","start":6,"end":11},{"label":"LIMIT","start":0,"end":5}],)"
      R"("variables":["v"],"gold":[{"direction":"max","coeffs":["1"]}]})";
  CHECK_THROWS_AS(corpus_from(unsorted), ValidationError);
}

TEST_CASE("type labels are cross-checked against the classifier") {
  // "sum" label on a structurally linear constraint.
  const std::string record =
      R"({"id":"d","text":"t","tags":[],"variables":["a","b"],)"
      R"("gold":[{"direction":"max","coeffs":["1","1"]},{"coeffs":["2","1"],"op":"<=","rhs":"5","type":"sum"}]})";
  const Problem p = corpus_from(record)[0];
  const auto disagreements = find_type_disagreements(p);
  REQUIRE(disagreements.size() == 1);
  CHECK(disagreements[0].problem_id == "d");
  CHECK(disagreements[0].gold_index == 1);
  CHECK(disagreements[0].label == ConstraintType::kSum);
  CHECK(disagreements[0].derived == ConstraintType::kLinear);

  // Agreeing labels raise nothing; ratio labels agree by definition.
  const Problem farm = corpus_from(kFarmRecord)[0];
  CHECK(find_type_disagreements(farm).empty());
}
