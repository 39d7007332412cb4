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
// Entity-tag embedding composition. An input position l with token id w_l
// and tag id t_l embeds as
//
//   token[w_l] + position[l] + lambda * tag[t_l]
//
// The tag table is zero at construction, so a fresh model composes exactly
// like the token+position baseline for any lambda. Scalar is double for
// bulk use or Rational where exactness matters; the algebra is identical.

#ifndef LPFORM_EMBED_HPP_
#define LPFORM_EMBED_HPP_

#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <string>

#include "lpform/corpus.hpp"
#include "lpform/error.hpp"
#include "lpform/rational.hpp"

namespace lpform {

// Default embedding scaling weight (lambda).
inline constexpr double kDefaultLambda = 5.0;

// Tag rows: 0 is the null tag for untagged tokens; entity labels follow in
// enum order.
inline constexpr int kNullTagId = 0;
inline constexpr int kTagRowCount = 7;

inline int tag_row(TagLabel label) { return static_cast<int>(label) + 1; }

template <typename Scalar>
struct EmbeddingTables {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix token;     // |vocab| x d
  Matrix position;  // L_max x d
  Matrix tag;       // |tagset| x d, all zeros at construction
  Scalar lambda;

  EmbeddingTables(Matrix token_table, Matrix position_table,
                  Eigen::Index tag_rows, Scalar scaling)
      : token(std::move(token_table)),
        position(std::move(position_table)),
        tag(Matrix::Constant(tag_rows, token.cols(), Scalar(0))),
        lambda(std::move(scaling)) {
    if (token.cols() != position.cols())
      throw std::invalid_argument(
          "token and position tables must share the embedding width");
  }

  Eigen::Index dim() const { return token.cols(); }
  Eigen::Index max_length() const { return position.rows(); }
};

template <typename Scalar>
typename EmbeddingTables<Scalar>::Matrix baseline_compose(
    const EmbeddingTables<Scalar>& tables, std::span<const int> tokens) {
  const Eigen::Index length = static_cast<Eigen::Index>(tokens.size());
  if (length > tables.max_length())
    throw std::out_of_range("sequence longer than the position table");
  typename EmbeddingTables<Scalar>::Matrix out(length, tables.dim());
  for (Eigen::Index l = 0; l < length; ++l) {
    const int w = tokens[static_cast<std::size_t>(l)];
    if (w < 0 || w >= tables.token.rows())
      throw std::out_of_range("token id " + std::to_string(w) +
                              " outside the vocabulary");
    out.row(l) = tables.token.row(w) + tables.position.row(l);
  }
  return out;
}

template <typename Scalar>
typename EmbeddingTables<Scalar>::Matrix compose(
    const EmbeddingTables<Scalar>& tables, std::span<const int> tokens,
    std::span<const int> tags) {
  if (tokens.size() != tags.size())
    throw std::invalid_argument("token and tag sequences differ in length (" +
                                std::to_string(tokens.size()) + " vs " +
                                std::to_string(tags.size()) + ")");
  typename EmbeddingTables<Scalar>::Matrix out =
      baseline_compose(tables, tokens);
  for (Eigen::Index l = 0; l < out.rows(); ++l) {
    const int t = tags[static_cast<std::size_t>(l)];
    if (t < 0 || t >= tables.tag.rows())
      throw std::out_of_range("tag id " + std::to_string(t) +
                              " outside the tag table");
    out.row(l) += tables.lambda * tables.tag.row(t);
  }
  return out;
}

// Plain text matrix file: a "rows cols" header line, then row-major values
// separated by whitespace. Values are doubles or rational literals
// depending on Scalar.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> read_matrix(
    std::istream& in, const std::string& context) {
  long long rows = 0;
  long long cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols <= 0)
    throw ValidationError(context, "expected a 'rows cols' header");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    for (long long c = 0; c < cols; ++c) {
      std::string word;
      if (!(in >> word))
        throw ValidationError(context,
                              "expected " + std::to_string(rows * cols) +
                                  " values, ran out at row " +
                                  std::to_string(r));
      try {
        if constexpr (std::is_same_v<Scalar, double>) {
          std::size_t used = 0;
          m(r, c) = std::stod(word, &used);
          if (used != word.size()) throw std::invalid_argument(word);
        } else {
          m(r, c) = Rational::from_string(word);
        }
      } catch (const std::exception&) {
        throw ValidationError(context, "bad matrix value '" + word + "'");
      }
    }
  }
  return m;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> load_matrix(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path.string(), "cannot open file");
  return read_matrix<Scalar>(in, path.filename().string());
}

}  // namespace lpform

#endif  // LPFORM_EMBED_HPP_
