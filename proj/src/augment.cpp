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

#include "lpform/augment.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lpform/unicode.hpp"

namespace lpform {

namespace {

constexpr std::u32string_view kReplacement = U"must";

// Case-folds ASCII letters and collapses whitespace runs to single spaces.
std::string normalized_phrase(std::string_view surface) {
  std::string out;
  bool in_space = false;
  for (char c : surface) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = !out.empty();
      continue;
    }
    if (in_space) out += ' ';
    in_space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool is_eligible_phrase(std::string_view surface) {
  const std::string norm = normalized_phrase(surface);
  return norm == "must not" || norm == "can not" || norm == "cannot";
}

// Constraint gold indices ranked by order hint (source position).
std::vector<std::size_t> constraints_by_position(const Problem& p) {
  std::vector<std::size_t> constraint_gold;
  for (std::size_t i = 0; i < p.gold.size(); ++i)
    if (is_constraint(p.gold[i].decl)) constraint_gold.push_back(i);
  std::vector<std::size_t> rank(constraint_gold.size());
  std::iota(rank.begin(), rank.end(), 0);
  std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
    return p.order_hints[a] < p.order_hints[b];
  });
  for (std::size_t i = 1; i < rank.size(); ++i)
    if (p.order_hints[rank[i - 1]] == p.order_hints[rank[i]])
      throw ValidationError(p.id,
                            "duplicate order hints make tag-to-constraint "
                            "linking ambiguous");
  std::vector<std::size_t> out(rank.size());
  for (std::size_t i = 0; i < rank.size(); ++i)
    out[i] = constraint_gold[rank[i]];
  return out;
}

double next_uniform(std::mt19937_64& rng) {
  // 53-bit mantissa: identical across platforms, unlike
  // std::uniform_real_distribution.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

std::mt19937_64 problem_stream(std::uint64_t seed, const std::string& id) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(fnv1a64(id))));
}

std::vector<EligibleSite> find_eligible(const Problem& p) {
  std::vector<EligibleSite> sites;

  // Rank of each CONST_DIR tag among CONST_DIR tags, in span order.
  std::vector<std::size_t> const_dir_tags;
  for (std::size_t i = 0; i < p.tags.size(); ++i)
    if (p.tags[i].label == TagLabel::kConstDir) const_dir_tags.push_back(i);

  std::vector<std::size_t> positional;  // lazily built fallback map
  bool positional_ready = false;

  for (std::size_t rank = 0; rank < const_dir_tags.size(); ++rank) {
    const std::size_t tag_index = const_dir_tags[rank];
    const EntityTag& tag = p.tags[tag_index];
    if (!is_eligible_phrase(tag.surface)) continue;

    EligibleSite site;
    site.tag_index = tag_index;
    if (tag.linked_decl) {
      const int target = *tag.linked_decl;
      if (target < 0 || target >= static_cast<int>(p.gold.size()) ||
          !is_constraint(p.gold[target].decl))
        throw ValidationError(p.id, "tag " + std::to_string(tag_index) +
                                        " links to a declaration that is "
                                        "not a constraint");
      site.gold_index = static_cast<std::size_t>(target);
    } else {
      if (!positional_ready) {
        positional = constraints_by_position(p);
        positional_ready = true;
      }
      if (const_dir_tags.size() != positional.size())
        throw ValidationError(
            p.id, "cannot link constraint-direction tags positionally: " +
                      std::to_string(const_dir_tags.size()) +
                      " CONST_DIR tags vs " + std::to_string(positional.size()) +
                      " constraints; add explicit 'decl' links");
      site.gold_index = positional[rank];
    }
    sites.push_back(site);
  }
  return sites;
}

namespace {

std::string mark_augmented(const std::string& id) {
  if (id.find("#aug") != std::string::npos) return id;
  return id + "#aug1";
}

}  // namespace

ReverseResult reverse_constraint(const Problem& problem,
                                 const EligibleSite& site,
                                 std::mt19937_64& rng, double probability) {
  const double draw = next_uniform(rng);
  if (!(draw < probability)) return {problem, false};

  Problem out = problem;
  EntityTag& tag = out.tags.at(site.tag_index);
  std::u32string text = utf8_decode(out.text);
  const int old_end = tag.end;
  const int delta =
      static_cast<int>(kReplacement.size()) - (tag.end - tag.start);

  text.replace(tag.start, tag.end - tag.start, kReplacement);
  out.text = utf8_encode(text);
  tag.end = tag.start + static_cast<int>(kReplacement.size());
  tag.surface = utf8_encode(std::u32string(kReplacement));
  for (std::size_t i = 0; i < out.tags.size(); ++i) {
    if (i == site.tag_index) continue;
    EntityTag& other = out.tags[i];
    if (other.start >= old_end) {
      other.start += delta;
      other.end += delta;
    }
  }

  GoldDecl& gold = out.gold.at(site.gold_index);
  auto& con = std::get<Constraint>(gold.decl);
  con.op = flipped(con.op);

  out.id = mark_augmented(out.id);

  // Span repair must leave every surface equal to its slice.
  for (const EntityTag& t : out.tags) {
    const std::string slice =
        utf8_encode(text.substr(t.start, t.end - t.start));
    if (t.surface != slice)
      throw std::logic_error("span repair failed for tag over '" + t.surface +
                             "' in problem " + problem.id);
  }
  return {std::move(out), true};
}

std::vector<Problem> augment_corpus(const std::vector<Problem>& corpus,
                                    const AugmentConfig& config) {
  if (config.reverse_probability < 0.0 || config.reverse_probability > 1.0)
    throw std::invalid_argument("reverse probability must lie in [0, 1]");

  std::vector<Problem> out;
  out.reserve(corpus.size());
  std::vector<Problem> variants;
  for (const Problem& problem : corpus) {
    out.push_back(problem);
    const std::vector<EligibleSite> sites = find_eligible(problem);
    if (sites.empty()) continue;
    std::mt19937_64 rng = problem_stream(config.seed, problem.id);
    Problem current = problem;
    bool any = false;
    for (const EligibleSite& site : sites) {
      ReverseResult result =
          reverse_constraint(current, site, rng, config.reverse_probability);
      current = std::move(result.problem);
      any = any || result.rewritten;
    }
    if (any) variants.push_back(std::move(current));
  }
  for (Problem& v : variants) out.push_back(std::move(v));
  return out;
}

}  // namespace lpform
