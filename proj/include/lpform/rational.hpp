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

#ifndef LPFORM_RATIONAL_HPP_
#define LPFORM_RATIONAL_HPP_

#include <Eigen/Core>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lpform {

// Exact rational number on 64-bit numerator/denominator, always stored
// reduced with a positive denominator. Coefficients and constants of word
// problems are tiny, so 64 bits leave enormous headroom; every operation
// still computes through 128 bits and throws std::overflow_error rather
// than wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT
  Rational(long long numerator, long long denominator)
      : num_(numerator), den_(denominator) {
    reduce();
  }

  // Accepts "3", "-3", "0.25", "-0.3", and "a/b" with integer a, b.
  // Decimal literals are converted exactly: "0.3" becomes 3/10.
  static Rational from_string(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Shortest exact decimal when the reduced denominator is 2^a * 5^b
  // ("0.3", "2.5", "7"), otherwise "a/b" ("1/3").
  std::string to_string() const;

  Rational operator-() const { return Rational(Checked(-wide(num_)), den_); }

  Rational& operator+=(const Rational& o) {
    return assign(wide(num_) * o.den_ + wide(o.num_) * den_,
                  wide(den_) * o.den_);
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    return assign(wide(num_) * o.num_, wide(den_) * o.den_);
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return assign(wide(num_) * o.den_, wide(den_) * o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  using Wide = __int128;

  static Wide wide(long long v) { return static_cast<Wide>(v); }

  static long long Checked(Wide v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
  }

  Rational(long long n, long long d, int) : num_(n), den_(d) {}  // pre-reduced

  Rational& assign(Wide n, Wide d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Wide an = n < 0 ? -n : n;
    Wide g = gcd_wide(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = Checked(n);
    den_ = Checked(d);
    return *this;
  }

  static Wide gcd_wide(Wide a, Wide b) {
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void reduce() { assign(wide(num_), wide(den_)); }

  long long num_;
  long long den_;
};

inline Rational Rational::from_string(std::string_view text) {
  auto fail = [&](const char* why) {
    throw std::invalid_argument("invalid rational literal '" +
                                std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](long long& out) {
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      fail("expected a digit");
    Wide v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > INT64_MAX) fail("magnitude too large");
      ++i;
    }
    out = static_cast<long long>(v);
  };
  long long whole = 0;
  digits(whole);
  Wide num = whole;
  Wide den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t start = i;
    long long frac = 0;
    digits(frac);
    std::size_t places = i - start;
    for (std::size_t k = 0; k < places; ++k) {
      den *= 10;
      if (den > INT64_MAX) fail("too many decimal places");
    }
    num = num * den + frac;
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    long long d = 0;
    digits(d);
    if (d == 0) fail("zero denominator");
    den = d;
  }
  if (i != text.size()) fail("trailing characters");
  if (negative) num = -num;
  Rational r;
  r.assign(num, den);
  return r;
}

inline std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  // A reduced fraction has a terminating decimal expansion exactly when the
  // denominator factors as 2^a * 5^b; max(a, b) digits suffice and, because
  // the fraction is reduced, none of them is a trailing zero.
  long long d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1 || twos > 18 || fives > 18)
    return std::to_string(num_) + "/" + std::to_string(den_);
  int places = twos > fives ? twos : fives;
  Wide scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  Wide scaled = (num_ < 0 ? -wide(num_) : wide(num_)) * scale / den_;
  std::string digits = std::to_string(static_cast<long long>(scaled));
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (num_ < 0 ? "-" : "") + digits;
}

}  // namespace lpform

namespace Eigen {

template <>
struct NumTraits<lpform::Rational> : GenericNumTraits<lpform::Rational> {
  using Real = lpform::Rational;
  using NonInteger = lpform::Rational;
  using Literal = lpform::Rational;
  using Nested = lpform::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 12,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // LPFORM_RATIONAL_HPP_
