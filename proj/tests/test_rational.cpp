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

#include "lpform/rational.hpp"

using lpform::Rational;

TEST_CASE("construction reduces and normalizes sign") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, 2).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("from_string accepts integers, decimals, and fractions") {
  CHECK(Rational::from_string("3") == Rational(3));
  CHECK(Rational::from_string("-3") == Rational(-3));
  CHECK(Rational::from_string("0.3") == Rational(3, 10));
  CHECK(Rational::from_string("-0.3") == Rational(-3, 10));
  CHECK(Rational::from_string("3.0") == Rational(3));
  CHECK(Rational::from_string("0.25") == Rational(1, 4));
  CHECK(Rational::from_string("7/10") == Rational(7, 10));
  CHECK(Rational::from_string("-7/10") == Rational(-7, 10));
  CHECK(Rational::from_string("6/4") == Rational(3, 2));

  for (const char* bad : {"", ".", "1.", ".5", "1/", "/2", "1/0", "1.5/2",
                          "1//2", "a", "1a", "1 2", "--1", "0x10"})
    CHECK_THROWS_AS(Rational::from_string(bad), std::invalid_argument);
}

TEST_CASE("to_string prefers terminating decimals") {
  CHECK(Rational(3).to_string() == "3");
  CHECK(Rational(-3).to_string() == "-3");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(7, 10).to_string() == "0.7");
  CHECK(Rational(-3, 10).to_string() == "-0.3");
  CHECK(Rational(1, 4).to_string() == "0.25");
  CHECK(Rational(5, 2).to_string() == "2.5");
  CHECK(Rational(1, 8).to_string() == "0.125");
  CHECK(Rational(1, 20).to_string() == "0.05");
  CHECK(Rational(1, 3).to_string() == "1/3");
  CHECK(Rational(-5, 6).to_string() == "-5/6");
  CHECK(Rational(22, 7).to_string() == "22/7");
}

TEST_CASE("to_string round trips through from_string") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const long long num =
        static_cast<long long>(rng() % 2001) - 1000;
    const long long den = static_cast<long long>(rng() % 50) + 1;
    const Rational r(num, den);
    CHECK(Rational::from_string(r.to_string()) == r);
  }
}

TEST_CASE("overflow is an error, not a wrap") {
  const Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("works as an Eigen scalar") {
  Eigen::Matrix<Rational, Eigen::Dynamic, 1> v(3);
  v << Rational(1, 2), Rational(1, 3), Rational(1, 6);
  Eigen::Matrix<Rational, Eigen::Dynamic, 1> w = v + v;
  CHECK(w(0) == Rational(1));
  CHECK(w(1) == Rational(2, 3));
  CHECK(v.sum() == Rational(1));
  Eigen::Matrix<Rational, Eigen::Dynamic, 1> s = v * Rational(6);
  CHECK(s(2) == Rational(1));
}
