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

#include "lpform/ir.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>

#include "lpform/unicode.hpp"

namespace lpform {

char variable_alias(int index) {
  static constexpr char kAliases[] = {'x', 'y', 'z', 'w'};
  if (index < 0 || index >= kMaxVariables)
    throw std::out_of_range("variable index " + std::to_string(index) +
                            " outside the x/y/z/w alias range");
  return kAliases[index];
}

int alias_index(char32_t alias) {
  switch (alias) {
    case U'x': return 0;
    case U'y': return 1;
    case U'z': return 2;
    case U'w': return 3;
    default: return -1;
  }
}

bool LinearExpr::is_constant() const {
  for (int v = 0; v < kMaxVariables; ++v)
    if (!coeffs(v).is_zero()) return false;
  return true;
}

bool LinearExpr::is_identically_zero() const {
  return is_constant() && constant.is_zero();
}

int LinearExpr::term_count() const {
  int n = 0;
  for (int v = 0; v < kMaxVariables; ++v)
    if (!coeffs(v).is_zero()) ++n;
  return n;
}

int LinearExpr::lowest_var() const {
  for (int v = 0; v < kMaxVariables; ++v)
    if (!coeffs(v).is_zero()) return v;
  return -1;
}

int LinearExpr::highest_var() const {
  for (int v = kMaxVariables - 1; v >= 0; --v)
    if (!coeffs(v).is_zero()) return v;
  return -1;
}

std::vector<int> LinearExpr::vars() const {
  std::vector<int> out;
  for (int v = 0; v < kMaxVariables; ++v)
    if (!coeffs(v).is_zero()) out.push_back(v);
  return out;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& other) {
  for (int v = 0; v < kMaxVariables; ++v) coeffs(v) += other.coeffs(v);
  constant += other.constant;
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& other) {
  for (int v = 0; v < kMaxVariables; ++v) coeffs(v) -= other.coeffs(v);
  constant -= other.constant;
  return *this;
}

LinearExpr& LinearExpr::operator*=(const Rational& scale) {
  for (int v = 0; v < kMaxVariables; ++v) coeffs(v) *= scale;
  constant *= scale;
  return *this;
}

namespace {

enum class Tok {
  kNumber,
  kVar,
  kMaximize,
  kMinimize,
  kPlus,
  kMinus,
  kLParen,
  kRParen,
  kLe,
  kGe,
  kEq,
  kSemicolon,
  kEnd,
};

struct Token {
  Tok kind;
  int column = 0;       // 1-based, in Unicode scalar values
  Rational number;      // kNumber
  int var = -1;         // kVar
};

class Lexer {
 public:
  explicit Lexer(std::u32string text) : text_(std::move(text)) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  static bool is_space(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
           c == U'\v';
  }
  static bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }
  static bool is_letter(char32_t c) {
    return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
  }

  [[noreturn]] void fail(ParseErrorKind kind, int column,
                         const std::string& message) const {
    throw ParseError(kind, column, message);
  }

  long long read_digits(const char* what) {
    int col = column();
    if (pos_ >= text_.size() || !is_digit(text_[pos_]))
      fail(ParseErrorKind::kLexical, col,
           std::string("malformed number: expected ") + what);
    long long v = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      if (v > (INT64_MAX - 9) / 10)
        fail(ParseErrorKind::kLexical, col, "number literal too large");
      v = v * 10 + static_cast<long long>(text_[pos_] - U'0');
      ++pos_;
    }
    return v;
  }

  int column() const { return static_cast<int>(pos_) + 1; }

  void advance() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    current_ = Token{};
    current_.kind = Tok::kEnd;
    current_.column = column();
    if (pos_ >= text_.size()) return;

    char32_t c = text_[pos_];
    int col = column();
    current_.column = col;

    if (is_digit(c)) {
      long long whole = read_digits("digits");
      Rational value(whole);
      if (pos_ < text_.size() && text_[pos_] == U'.') {
        ++pos_;
        std::size_t mark = pos_;
        long long frac = read_digits("digits after the decimal point");
        long long scale = 1;
        for (std::size_t k = mark; k < pos_; ++k) {
          if (scale > INT64_MAX / 10)
            fail(ParseErrorKind::kLexical, col, "too many decimal places");
          scale *= 10;
        }
        value = Rational(whole) + Rational(frac, scale);
      } else if (pos_ < text_.size() && text_[pos_] == U'/') {
        ++pos_;
        int dcol = column();
        long long den = read_digits("an integer denominator");
        if (den == 0)
          fail(ParseErrorKind::kLexical, dcol, "zero denominator");
        value = Rational(whole, den);
      }
      current_.kind = Tok::kNumber;
      current_.number = value;
      return;
    }

    if (is_letter(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_letter(text_[pos_])) ++pos_;
      std::u32string word = text_.substr(start, pos_ - start);
      if (word == U"maximize") {
        current_.kind = Tok::kMaximize;
      } else if (word == U"minimize") {
        current_.kind = Tok::kMinimize;
      } else if (word.size() == 1 && alias_index(word[0]) >= 0) {
        current_.kind = Tok::kVar;
        current_.var = alias_index(word[0]);
      } else {
        fail(ParseErrorKind::kUnknownAlias, col,
             "unknown keyword or variable alias '" + utf8_encode(word) +
                 "' (variables are x, y, z, w)");
      }
      return;
    }

    switch (c) {
      case U'+': current_.kind = Tok::kPlus; ++pos_; return;
      case U'-': current_.kind = Tok::kMinus; ++pos_; return;
      case U'(': current_.kind = Tok::kLParen; ++pos_; return;
      case U')': current_.kind = Tok::kRParen; ++pos_; return;
      case U';': current_.kind = Tok::kSemicolon; ++pos_; return;
      case U'≤': current_.kind = Tok::kLe; ++pos_; return;
      case U'≥': current_.kind = Tok::kGe; ++pos_; return;
      case U'<':
      case U'>':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == U'=') {
          current_.kind = c == U'<' ? Tok::kLe : Tok::kGe;
          pos_ += 2;
          return;
        }
        fail(ParseErrorKind::kLexical, col,
             std::string("strict inequality '") + static_cast<char>(c) +
                 "' is not supported; use " + (c == U'<' ? "'<='" : "'>='"));
      case U'=':
        ++pos_;
        if (pos_ < text_.size() && text_[pos_] == U'=') ++pos_;
        current_.kind = Tok::kEq;
        return;
      default:
        fail(ParseErrorKind::kLexical, col,
             "unknown symbol '" + utf8_encode(std::u32string(1, c)) + "'");
    }
  }

  std::u32string text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(std::string_view text, ParseInfo* info)
      : lexer_(utf8_decode(text)), info_(info) {}

  IrDocument parse_document() {
    IrDocument doc;
    doc.decls.push_back(parse_decl());
    while (lexer_.peek().kind == Tok::kSemicolon) {
      lexer_.take();
      doc.decls.push_back(parse_decl());
    }
    const Token t = lexer_.peek();
    if (t.kind != Tok::kEnd)
      throw ParseError(ParseErrorKind::kSyntax, t.column,
                       "expected ';' or end of input");
    int objectives = 0;
    for (const IrDecl& d : doc.decls) objectives += is_objective(d) ? 1 : 0;
    if (objectives > 1)
      throw ParseError(ParseErrorKind::kSemantic, 1,
                       "document has more than one objective");
    return doc;
  }

 private:
  IrDecl parse_decl() {
    decl_used_paren_ = false;
    const Token start = lexer_.peek();
    IrDecl decl = [&]() -> IrDecl {
      if (start.kind == Tok::kMaximize || start.kind == Tok::kMinimize) {
        lexer_.take();
        Objective obj;
        obj.direction = start.kind == Tok::kMaximize ? Direction::kMax
                                                     : Direction::kMin;
        obj.expr = parse_expr();
        if (obj.expr.is_identically_zero())
          throw ParseError(ParseErrorKind::kSemantic, start.column,
                           "objective expression is identically zero");
        return obj;
      }
      Constraint con;
      con.lhs = parse_expr();
      const Token op = lexer_.peek();
      if (op.kind == Tok::kLe || op.kind == Tok::kGe) {
        lexer_.take();
        con.op = op.kind == Tok::kLe ? CmpOp::kLe : CmpOp::kGe;
      } else if (op.kind == Tok::kEq) {
        throw ParseError(ParseErrorKind::kEquality, op.column,
                         "equality constraints are not supported; only "
                         "'<=' and '>=' exist");
      } else {
        throw ParseError(ParseErrorKind::kSyntax, op.column,
                         "expected '<=' or '>='");
      }
      con.rhs = parse_expr();
      if (con.lhs.is_constant() && con.rhs.is_constant())
        throw ParseError(ParseErrorKind::kSemantic, start.column,
                         "constraint has no variables on either side");
      return con;
    }();
    if (info_) info_->ratio_origin.push_back(decl_used_paren_);
    return decl;
  }

  LinearExpr parse_expr() {
    if (++depth_ > kMaxDepth)
      throw ParseError(ParseErrorKind::kSyntax, lexer_.peek().column,
                       "expression nesting too deep");
    LinearExpr acc;
    bool negate_first = false;
    if (lexer_.peek().kind == Tok::kMinus) {
      lexer_.take();
      negate_first = true;
    }
    LinearExpr first = parse_term();
    if (negate_first) first *= Rational(-1);
    acc += first;
    while (lexer_.peek().kind == Tok::kPlus ||
           lexer_.peek().kind == Tok::kMinus) {
      bool minus = lexer_.take().kind == Tok::kMinus;
      LinearExpr term = parse_term();
      if (minus)
        acc -= term;
      else
        acc += term;
    }
    --depth_;
    return acc;
  }

  LinearExpr parse_term() {
    const Token t = lexer_.peek();
    LinearExpr out;
    if (t.kind == Tok::kNumber) {
      lexer_.take();
      const Token next = lexer_.peek();
      if (next.kind == Tok::kVar) {
        lexer_.take();
        reject_juxtaposition();
        out.set_coeff(next.var, t.number);
        return out;
      }
      if (next.kind == Tok::kLParen) {
        lexer_.take();
        LinearExpr inner = parse_expr();
        const Token close = lexer_.peek();
        if (close.kind != Tok::kRParen)
          throw ParseError(ParseErrorKind::kSyntax, close.column,
                           "expected ')'");
        lexer_.take();
        decl_used_paren_ = true;
        return inner * t.number;
      }
      out.constant = t.number;
      return out;
    }
    if (t.kind == Tok::kVar) {
      lexer_.take();
      reject_juxtaposition();
      out.set_coeff(t.var, Rational(1));
      return out;
    }
    if (t.kind == Tok::kLParen)
      throw ParseError(ParseErrorKind::kSyntax, t.column,
                       "a parenthesized group must be preceded by a "
                       "coefficient");
    throw ParseError(ParseErrorKind::kSyntax, t.column,
                     "expected a number or a variable");
  }

  // After a variable, another variable or an opening paren would mean a
  // product of variables, which is not linear.
  void reject_juxtaposition() {
    const Token& next = lexer_.peek();
    if (next.kind == Tok::kVar || next.kind == Tok::kLParen)
      throw ParseError(ParseErrorKind::kNonlinear, next.column,
                       "products of variables are not linear");
    if (next.kind == Tok::kNumber)
      throw ParseError(ParseErrorKind::kSyntax, next.column,
                       "unexpected number after a variable; did you mean "
                       "'+' or '-'?");
  }

  static constexpr int kMaxDepth = 64;

  Lexer lexer_;
  ParseInfo* info_;
  bool decl_used_paren_ = false;
  int depth_ = 0;
};

void append_number(std::string& out, const Rational& value) {
  out += value.to_string();
}

}  // namespace

namespace {

IrDocument parse_with(std::string_view text, ParseInfo* info) {
  try {
    Parser parser(text, info);
    return parser.parse_document();
  } catch (const std::invalid_argument& e) {
    // Undecodable input (bad UTF-8) is a lexical error like any other.
    throw ParseError(ParseErrorKind::kLexical, 1, e.what());
  }
}

}  // namespace

IrDocument parse_ir(std::string_view text) {
  return parse_with(text, nullptr);
}

IrDocument parse_ir(std::string_view text, ParseInfo& info) {
  info.ratio_origin.clear();
  return parse_with(text, &info);
}

std::string print_expr(const LinearExpr& expr) {
  std::string out;
  bool first = true;
  auto emit = [&](const Rational& value, int var) {
    Rational mag = value.abs();
    if (first) {
      if (value.sign() < 0) out += '-';
      first = false;
    } else {
      out += value.sign() < 0 ? " - " : " + ";
    }
    if (var < 0) {
      append_number(out, mag);
    } else {
      if (mag != Rational(1)) append_number(out, mag);
      out += variable_alias(var);
    }
  };
  for (int v = 0; v < kMaxVariables; ++v)
    if (expr.has_var(v)) emit(expr.coeff(v), v);
  if (!expr.constant.is_zero() || first) emit(expr.constant, -1);
  return out;
}

std::string print_decl(const IrDecl& decl) {
  if (const auto* obj = std::get_if<Objective>(&decl)) {
    std::string out =
        obj->direction == Direction::kMax ? "maximize " : "minimize ";
    return out + print_expr(obj->expr);
  }
  const auto& con = std::get<Constraint>(decl);
  return print_expr(con.lhs) + (con.op == CmpOp::kLe ? " <= " : " >= ") +
         print_expr(con.rhs);
}

std::string print_ir(const IrDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.decls.size(); ++i) {
    if (i > 0) out += " ; ";
    out += print_decl(doc.decls[i]);
  }
  return out;
}

IrDecl normalize(const IrDecl& decl) {
  if (is_objective(decl)) return decl;
  const auto& con = std::get<Constraint>(decl);
  Constraint out;
  out.op = con.op;
  out.lhs = con.lhs;
  out.lhs -= con.rhs;
  out.rhs.constant = -out.lhs.constant;
  out.lhs.constant = Rational(0);
  return out;
}

IrDocument normalize(const IrDocument& doc) {
  IrDocument out;
  out.decls.reserve(doc.decls.size());
  for (const IrDecl& d : doc.decls) out.decls.push_back(normalize(d));
  return out;
}

bool is_normalized(const IrDecl& decl) {
  if (is_objective(decl)) return true;
  const auto& con = std::get<Constraint>(decl);
  return con.lhs.constant.is_zero() && con.rhs.is_constant();
}

}  // namespace lpform
