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

#include <random>
#include <sstream>
#include <vector>

#include "lpform/embed.hpp"

using namespace lpform;

namespace {

template <typename Scalar>
EmbeddingTables<Scalar> random_tables(std::mt19937_64& rng, int vocab,
                                      int max_len, int tag_rows, int dim,
                                      Scalar lambda) {
  using Matrix = typename EmbeddingTables<Scalar>::Matrix;
  auto fill = [&](int rows, int cols) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        m(r, c) = Scalar(static_cast<int>(rng() % 19) - 9);
    return m;
  };
  return EmbeddingTables<Scalar>(fill(vocab, dim), fill(max_len, dim),
                                 tag_rows, lambda);
}

std::vector<int> random_ids(std::mt19937_64& rng, int length, int bound) {
  std::vector<int> ids(static_cast<std::size_t>(length));
  for (int& id : ids) id = static_cast<int>(rng() % static_cast<unsigned>(bound));
  return ids;
}

}  // namespace

TEST_CASE("the d=2 worked example composes to (3, 3)") {
  using Tables = EmbeddingTables<double>;
  Tables::Matrix tok(1, 2);
  tok << 1, 0;
  Tables::Matrix pos(1, 2);
  pos << 0, 1;
  Tables tables(tok, pos, /*tag_rows=*/1, /*scaling=*/2.0);
  tables.tag << 1, 1;

  const std::vector<int> tokens = {0};
  const std::vector<int> tags = {0};
  const auto out = compose(tables, tokens, tags);
  REQUIRE(out.rows() == 1);
  CHECK(out(0, 0) == doctest::Approx(3.0));
  CHECK(out(0, 1) == doctest::Approx(3.0));

  // Without the tag term the same position reads (1, 1).
  const auto base = baseline_compose(tables, tokens);
  CHECK(base(0, 0) == doctest::Approx(1.0));
  CHECK(base(0, 1) == doctest::Approx(1.0));
}

TEST_CASE("zero-initialized tag tables compose exactly like the baseline") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 120; ++round) {
    const Rational lambda(static_cast<int>(rng() % 21) - 10);
    auto tables = random_tables<Rational>(rng, 12, 16, kTagRowCount, 3, lambda);
    const int length = static_cast<int>(rng() % 17);
    const auto tokens = random_ids(rng, length, 12);
    const auto tags = random_ids(rng, length, kTagRowCount);
    const auto with_tags = compose<Rational>(tables, tokens, tags);
    const auto baseline = baseline_compose<Rational>(tables, tokens);
    REQUIRE(with_tags.rows() == length);
    for (int r = 0; r < length; ++r)
      for (int c = 0; c < 3; ++c) CHECK(with_tags(r, c) == baseline(r, c));
  }
}

TEST_CASE("lambda = 0 annihilates an arbitrary tag table") {
  std::mt19937_64 rng(6);
  auto tables = random_tables<Rational>(rng, 8, 8, 4, 2, Rational(0));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 2; ++c)
      tables.tag(r, c) = Rational(static_cast<int>(rng() % 9) - 4);
  const auto tokens = random_ids(rng, 8, 8);
  const auto tags = random_ids(rng, 8, 4);
  const auto with_tags = compose<Rational>(tables, tokens, tags);
  const auto baseline = baseline_compose<Rational>(tables, tokens);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 2; ++c) CHECK(with_tags(r, c) == baseline(r, c));
}

TEST_CASE("composition is linear in lambda") {
  std::mt19937_64 rng(7);

  SUBCASE("exactly, over rationals") {
    for (int round = 0; round < 40; ++round) {
      auto tables =
          random_tables<Rational>(rng, 10, 12, 5, 3, Rational(0));
      for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 3; ++c)
          tables.tag(r, c) = Rational(static_cast<int>(rng() % 9) - 4,
                                      1 + static_cast<int>(rng() % 3));
      const auto tokens = random_ids(rng, 10, 10);
      const auto tags = random_ids(rng, 10, 5);
      const Rational l1(static_cast<int>(rng() % 11) - 5, 2);
      const Rational l2(static_cast<int>(rng() % 11) - 5, 3);

      auto at = [&](Rational lambda) {
        tables.lambda = lambda;
        return compose<Rational>(tables, tokens, tags);
      };
      using Matrix = EmbeddingTables<Rational>::Matrix;
      const Matrix sum_of_parts = at(l1) + at(l2) - at(Rational(0));
      const Matrix combined = at(l1 + l2);
      for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 3; ++c)
          CHECK(sum_of_parts(r, c) == combined(r, c));
    }
  }

  SUBCASE("within 1e-12, in double precision") {
    for (int round = 0; round < 40; ++round) {
      auto tables = random_tables<double>(rng, 10, 12, 5, 3, 0.0);
      for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 3; ++c)
          tables.tag(r, c) = static_cast<double>(static_cast<int>(rng() % 9) - 4) / 3.0;
      const auto tokens = random_ids(rng, 10, 10);
      const auto tags = random_ids(rng, 10, 5);
      const double l1 = static_cast<double>(static_cast<int>(rng() % 11) - 5) / 2.0;
      const double l2 = static_cast<double>(static_cast<int>(rng() % 11) - 5) / 7.0;

      auto at = [&](double lambda) {
        tables.lambda = lambda;
        return compose<double>(tables, tokens, tags);
      };
      const Eigen::MatrixXd lhs = at(l1) + at(l2) - at(0.0);
      const Eigen::MatrixXd rhs = at(l1 + l2);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("empty sequences compose to empty outputs") {
  std::mt19937_64 rng(8);
  auto tables = random_tables<double>(rng, 4, 4, 2, 3, 5.0);
  CHECK(compose<double>(tables, {}, {}).rows() == 0);
  CHECK(baseline_compose<double>(tables, {}).rows() == 0);
}

TEST_CASE("id and length violations throw") {
  std::mt19937_64 rng(9);
  auto tables = random_tables<double>(rng, 4, 3, 2, 2, 1.0);
  const std::vector<int> ok = {0, 1};
  const std::vector<int> tags_ok = {0, 1};
  CHECK_THROWS_AS(compose<double>(tables, ok, std::vector<int>{0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(compose<double>(tables, std::vector<int>{4},
                                  std::vector<int>{0}),
                  std::out_of_range);
  CHECK_THROWS_AS(compose<double>(tables, std::vector<int>{-1},
                                  std::vector<int>{0}),
                  std::out_of_range);
  CHECK_THROWS_AS(compose<double>(tables, ok, std::vector<int>{0, 2}),
                  std::out_of_range);
  const std::vector<int> too_long = {0, 1, 2, 3};
  CHECK_THROWS_AS(baseline_compose<double>(tables, too_long),
                  std::out_of_range);
  CHECK_THROWS_AS(
      EmbeddingTables<double>(Eigen::MatrixXd::Zero(2, 3),
                              Eigen::MatrixXd::Zero(2, 2), 2, 1.0),
      std::invalid_argument);
}

TEST_CASE("tag rows are shared with the corpus label enum") {
  CHECK(kNullTagId == 0);
  CHECK(tag_row(TagLabel::kVar) == 1);
  CHECK(tag_row(TagLabel::kParam) == 2);
  CHECK(tag_row(TagLabel::kLimit) == 3);
  CHECK(tag_row(TagLabel::kConstDir) == 4);
  CHECK(tag_row(TagLabel::kObjDir) == 5);
  CHECK(tag_row(TagLabel::kObjName) == 6);
  CHECK(kTagRowCount == 7);
}

TEST_CASE("matrix files: rows cols header then row-major values") {
  std::istringstream good("2 3\n1 2 3\n4 5 6\n");
  const auto m = read_matrix<double>(good, "good");
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 3);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 2) == 6.0);

  std::istringstream rational_text("1 2\n1/2 0.25\n");
  const auto q = read_matrix<Rational>(rational_text, "q");
  CHECK(q(0, 0) == Rational(1, 2));
  CHECK(q(0, 1) == Rational(1, 4));

  std::istringstream short_file("2 2\n1 2 3\n");
  CHECK_THROWS_AS(read_matrix<double>(short_file, "short"), ValidationError);
  std::istringstream no_header("x\n");
  CHECK_THROWS_AS(read_matrix<double>(no_header, "nh"), ValidationError);
  std::istringstream bad_value("1 1\npotato\n");
  CHECK_THROWS_AS(read_matrix<double>(bad_value, "bv"), ValidationError);
}

TEST_CASE("the default scaling weight is 5") {
  CHECK(kDefaultLambda == 5.0);
}
