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
// Command line driver. All commands are deterministic functions of their
// arguments; results go to stdout as line-delimited JSON (or a human table
// with --pretty), diagnostics to stderr. Exit codes: 0 success, 1 data or
// validation failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpform/augment.hpp"
#include "lpform/canonical.hpp"
#include "lpform/corpus.hpp"
#include "lpform/embed.hpp"
#include "lpform/scorer.hpp"
#include "lpform/serialize.hpp"

namespace {

using lpform::Json;

std::ostream& open_output(std::ofstream& file, const std::string& out_path) {
  if (out_path.empty()) return std::cout;
  file.open(out_path);
  if (!file)
    throw lpform::ValidationError(out_path, "cannot open output file");
  return file;
}

std::vector<int> parse_id_list(const std::string& text,
                               const std::string& what) {
  std::vector<int> ids;
  if (text.empty()) return ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw lpform::ValidationError(what, "bad id '" + item + "'");
    }
  }
  return ids;
}

int run_validate(const std::string& corpus_path) {
  const std::vector<lpform::Problem> corpus = lpform::load_corpus(corpus_path);
  int declarations = 0;
  Json disagreements = Json::array();
  int eligible_link_errors = 0;
  for (const lpform::Problem& p : corpus) {
    declarations += static_cast<int>(p.gold.size());
    for (const lpform::TypeDisagreement& d :
         lpform::find_type_disagreements(p)) {
      Json entry;
      entry["id"] = d.problem_id;
      entry["gold_index"] = d.gold_index;
      entry["label"] = std::string(lpform::to_string(d.label));
      entry["derived"] = std::string(lpform::to_string(d.derived));
      disagreements.push_back(std::move(entry));
      std::cerr << d.problem_id << ": gold[" << d.gold_index
                << "] is labeled '" << lpform::to_string(d.label)
                << "' but classifies as '" << lpform::to_string(d.derived)
                << "'\n";
    }
    try {
      (void)lpform::find_eligible(p);
    } catch (const lpform::ValidationError& e) {
      ++eligible_link_errors;
      std::cerr << e.what() << "\n";
    }
  }
  Json summary;
  summary["problems"] = corpus.size();
  summary["declarations"] = declarations;
  summary["type_disagreements"] = disagreements;
  summary["link_errors"] = eligible_link_errors;
  std::cout << summary.dump() << "\n";
  return disagreements.empty() && eligible_link_errors == 0 ? 0 : 1;
}

void run_parse(const std::string& ir_text, std::optional<int> vars,
               bool pretty) {
  const lpform::CanonicalForm form = lpform::convert_ir(ir_text, vars);
  const Json record = lpform::canonical_form_to_json(form);
  std::cout << (pretty ? record.dump(2) : record.dump()) << "\n";
}

int run_convert(const std::string& ir_file, const std::string& out_path) {
  std::ifstream in(ir_file);
  if (!in) throw lpform::ValidationError(ir_file, "cannot open file");
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);

  int failures = 0;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string context = ir_file + ":" + std::to_string(line_number);
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw lpform::ValidationError(context,
                                    std::string("malformed record: ") +
                                        e.what());
    }
    lpform::check_fields(record, {"id", "ir"}, context);
    if (!record.contains("id") || !record["id"].is_string() ||
        !record.contains("ir") || !record["ir"].is_string())
      throw lpform::ValidationError(context,
                                    "expected string fields 'id' and 'ir'");
    Json result;
    result["id"] = record["id"];
    try {
      result["canonical"] = lpform::canonical_form_to_json(
          lpform::convert_ir(record["ir"].get<std::string>()));
    } catch (const lpform::Error& e) {
      result["error"] = e.what();
      ++failures;
    }
    out << result.dump() << "\n";
  }
  if (failures > 0)
    std::cerr << failures << " record(s) failed to convert\n";
  return failures == 0 ? 0 : 1;
}

void run_canonicalize(const std::string& corpus_path,
                      const std::string& out_path) {
  const std::vector<lpform::Problem> corpus = lpform::load_corpus(corpus_path);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  for (const lpform::Problem& p : corpus) {
    Json record;
    record["id"] = p.id;
    record["ir"] = lpform::print_ir(lpform::canonicalize_gold(p));
    out << record.dump() << "\n";
  }
}

void run_score(const std::string& pred_path, const std::string& gold_path,
               const std::string& out_path, bool pretty) {
  const std::vector<lpform::Problem> corpus = lpform::load_corpus(gold_path);
  const std::vector<lpform::Prediction> preds =
      lpform::load_predictions(pred_path);
  const lpform::ScoreReport report = lpform::score(preds, corpus);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << lpform::score_report_to_json_line(report) << "\n";
  if (pretty) std::cout << lpform::format_report_table(report);
}

void run_augment(const std::string& corpus_path, double probability,
                 std::uint64_t seed, const std::string& out_path) {
  const std::vector<lpform::Problem> corpus = lpform::load_corpus(corpus_path);
  lpform::AugmentConfig config;
  config.reverse_probability = probability;
  config.seed = seed;
  const std::vector<lpform::Problem> augmented =
      lpform::augment_corpus(corpus, config);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  lpform::save_corpus(augmented, out);
}

void run_embed_check(const std::string& tok_path, const std::string& pos_path,
                     const std::string& tag_path, const std::string& tokens,
                     const std::string& tags, double lambda, bool pretty) {
  auto token_table = lpform::load_matrix<double>(tok_path);
  auto position_table = lpform::load_matrix<double>(pos_path);
  lpform::EmbeddingTables<double> tables(
      std::move(token_table), std::move(position_table),
      lpform::kTagRowCount, lambda);
  if (!tag_path.empty()) {
    auto tag_table = lpform::load_matrix<double>(tag_path);
    if (tag_table.cols() != tables.dim())
      throw lpform::ValidationError(tag_path,
                                    "tag table width does not match the "
                                    "embedding dimension");
    tables.tag = std::move(tag_table);
  }

  const std::vector<int> token_ids = parse_id_list(tokens, "--tokens");
  std::vector<int> tag_ids = parse_id_list(tags, "--tags");
  if (tag_ids.empty())
    tag_ids.assign(token_ids.size(), lpform::kNullTagId);

  const auto output = lpform::compose<double>(tables, token_ids, tag_ids);
  Json record;
  record["lambda"] = lambda;
  Json vectors = Json::array();
  for (Eigen::Index r = 0; r < output.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < output.cols(); ++c)
      row.push_back(output(r, c));
    vectors.push_back(std::move(row));
  }
  record["vectors"] = std::move(vectors);
  std::cout << (pretty ? record.dump(2) : record.dump()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lpform: auto-formulation toolkit for LP word problems.\n"
      "Parses declaration IR, orders and converts it to canonical form,\n"
      "scores predictions, augments corpora, and checks tag-embedding\n"
      "composition."};
  app.require_subcommand(1);
  int exit_code = 0;

  // validate
  auto* validate = app.add_subcommand(
      "validate", "Check a corpus against the schema and the constraint "
                  "type rules");
  std::string validate_corpus;
  validate->add_option("corpus", validate_corpus, "corpus JSONL file")
      ->required();
  validate->callback([&] { exit_code = run_validate(validate_corpus); });

  // parse
  auto* parse = app.add_subcommand(
      "parse", "Parse one IR string and print its canonical form");
  std::string parse_text;
  std::string parse_file;
  int parse_vars = 0;
  bool parse_pretty = false;
  parse->add_option("ir", parse_text, "IR text, e.g. \"maximize 3x + 4y ; "
                                      "3x + 4y <= 50\"");
  parse->add_option("--file", parse_file, "read the IR text from a file");
  parse->add_option("--vars", parse_vars,
                    "variable count (default: inferred from aliases)");
  parse->add_flag("--pretty", parse_pretty, "indent the output");
  parse->callback([&] {
    std::string text = parse_text;
    if (!parse_file.empty()) {
      std::ifstream in(parse_file);
      if (!in) throw lpform::ValidationError(parse_file, "cannot open file");
      std::stringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    }
    if (text.empty())
      throw CLI::ValidationError("parse",
                                 "provide an IR string or --file");
    run_parse(text,
              parse_vars > 0 ? std::optional<int>(parse_vars) : std::nullopt,
              parse_pretty);
  });

  // canonicalize
  auto* canonicalize = app.add_subcommand(
      "canonicalize",
      "Emit each problem's gold declarations as canonically ordered IR");
  std::string canonicalize_corpus;
  std::string canonicalize_out;
  canonicalize->add_option("corpus", canonicalize_corpus, "corpus JSONL file")
      ->required();
  canonicalize->add_option("--out", canonicalize_out, "output file");
  canonicalize->callback(
      [&] { run_canonicalize(canonicalize_corpus, canonicalize_out); });

  // convert
  auto* convert = app.add_subcommand(
      "convert", "Convert {id, ir} records to canonical form records");
  std::string convert_file;
  std::string convert_out;
  convert->add_option("ir_file", convert_file, "JSONL file of {id, ir}")
      ->required();
  convert->add_option("--out", convert_out, "output file");
  convert->callback(
      [&] { exit_code = run_convert(convert_file, convert_out); });

  // score
  auto* score = app.add_subcommand(
      "score", "Declaration-level mapping accuracy of predictions against "
               "a gold corpus");
  std::string score_pred;
  std::string score_gold;
  std::string score_out;
  bool score_pretty = false;
  score->add_option("--pred", score_pred, "prediction JSONL file")
      ->required();
  score->add_option("--gold", score_gold, "gold corpus JSONL file")
      ->required();
  score->add_option("--out", score_out, "write the JSON report here");
  score->add_flag("--pretty", score_pretty, "also print a per-problem table");
  score->callback(
      [&] { run_score(score_pred, score_gold, score_out, score_pretty); });

  // augment
  auto* augment = app.add_subcommand(
      "augment", "Reverse constraint directions (must not/can not/cannot "
                 "-> must) with probability p per site");
  std::string augment_corpus_path;
  std::string augment_out;
  lpform::AugmentConfig augment_defaults;
  double augment_p = augment_defaults.reverse_probability;
  std::uint64_t augment_seed = augment_defaults.seed;
  augment->add_option("corpus", augment_corpus_path, "corpus JSONL file")
      ->required();
  augment->add_option("--p", augment_p,
                      "probability of reversing each eligible site")
      ->capture_default_str();
  augment->add_option("--seed", augment_seed, "random seed")
      ->capture_default_str();
  augment->add_option("--out", augment_out, "output file");
  augment->callback([&] {
    run_augment(augment_corpus_path, augment_p, augment_seed, augment_out);
  });

  // embed-check
  auto* embed = app.add_subcommand(
      "embed-check", "Compose token + position + lambda * tag embeddings");
  std::string embed_tok;
  std::string embed_pos;
  std::string embed_tag;
  std::string embed_tokens;
  std::string embed_tags;
  double embed_lambda = lpform::kDefaultLambda;
  bool embed_pretty = false;
  embed->add_option("--tok", embed_tok, "token table file")->required();
  embed->add_option("--pos", embed_pos, "position table file")->required();
  embed->add_option("--tag", embed_tag,
                    "tag table file (default: all zeros)");
  embed->add_option("--tokens", embed_tokens, "comma-separated token ids")
      ->required();
  embed->add_option("--tags", embed_tags,
                    "comma-separated tag ids (default: all null)");
  embed->add_option("--lambda", embed_lambda, "embedding scaling weight")
      ->capture_default_str();
  embed->add_flag("--pretty", embed_pretty, "indent the output");
  embed->callback([&] {
    run_embed_check(embed_tok, embed_pos, embed_tag, embed_tokens, embed_tags,
                    embed_lambda, embed_pretty);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const lpform::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
