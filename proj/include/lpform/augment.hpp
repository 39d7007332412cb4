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
// Data augmentation by reversing constraint direction: a CONST_DIR tag
// whose surface reads "must not", "can not", or "cannot" is rewritten to
// "must" and the linked gold constraint's operator is flipped (<= becomes
// >= and vice versa). Every tag span after the splice point is shifted so
// that tag surfaces keep matching the text. The rewrite is one-way; "must"
// is never turned back into "must not".

#ifndef LPFORM_AUGMENT_HPP_
#define LPFORM_AUGMENT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "lpform/corpus.hpp"

namespace lpform {

struct AugmentConfig {
  double reverse_probability = 0.3;  // p, drawn once per eligible site
  std::uint64_t seed = 0;
};

struct EligibleSite {
  std::size_t tag_index = 0;   // into Problem::tags, always a CONST_DIR tag
  std::size_t gold_index = 0;  // into Problem::gold, always a constraint
};

// Eligible rewrite sites: CONST_DIR tags whose surface, case-folded and
// whitespace-normalized, is one of the three phrases. Each site is linked
// to a gold constraint: through the tag's explicit `decl` field when
// present, otherwise positionally (the k-th CONST_DIR tag in span order
// maps to the constraint ranked k by order hint, which requires exactly
// one CONST_DIR tag per constraint and distinct hints). An eligible tag
// that cannot be linked unambiguously raises ValidationError.
std::vector<EligibleSite> find_eligible(const Problem& problem);

struct ReverseResult {
  Problem problem;
  bool rewritten = false;
};

// Draws exactly one value from `rng`; with probability `probability`
// splices "must" over the site's span, flips the linked constraint's
// operator, shifts all later tag spans, and marks the id with "#aug1".
// Otherwise returns the problem unchanged.
ReverseResult reverse_constraint(const Problem& problem,
                                 const EligibleSite& site,
                                 std::mt19937_64& rng, double probability);

// Original problems in order, then one augmented variant (id suffixed
// "#aug1") for every problem where at least one site fired. Deterministic
// for a fixed (corpus, p, seed): each problem draws from its own substream
// derived from the seed and the problem id, so the output does not depend
// on evaluation order.
std::vector<Problem> augment_corpus(const std::vector<Problem>& corpus,
                                    const AugmentConfig& config);

// The per-problem random stream used by augment_corpus.
std::mt19937_64 problem_stream(std::uint64_t seed, const std::string& id);

}  // namespace lpform

#endif  // LPFORM_AUGMENT_HPP_
