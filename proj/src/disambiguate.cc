// Copyright 2026 The HMT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hmt/disambiguate.h"

#include <algorithm>
#include <cmath>

#include "hmt/text.h"

namespace hmt {

std::vector<DisambiguationScore> score_candidates(
    std::string_view source_word, std::span<const Candidate> candidates,
    std::span<const std::string> left_context, const NGramModel& lm,
    const TranslationTable& lex) {
  std::vector<DisambiguationScore> scores;
  scores.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    DisambiguationScore s;
    s.candidate = c;
    const std::vector<std::string> words = english_tokens(c.english);
    // Multi-word glosses score by their words' mean lexical probability.
    double lex_sum = 0;
    for (const std::string& w : words) {
      lex_sum += std::max(lex.prob(source_word, w).value_or(0.0), kLexFloor);
    }
    s.log_lex = std::log(words.empty() ? kLexFloor
                                       : lex_sum / static_cast<double>(words.size()));
    s.log_lm = lm.continuation_logprob(left_context, words);
    s.total = s.log_lex + s.log_lm;
    scores.push_back(std::move(s));
  }
  return scores;
}

std::size_t argmax(std::span<const double> scores) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

std::size_t disambiguate(std::string_view source_word,
                         std::span<const Candidate> candidates,
                         std::span<const std::string> left_context,
                         const NGramModel& lm, const TranslationTable& lex) {
  if (candidates.size() <= 1) return 0;
  const auto scored =
      score_candidates(source_word, candidates, left_context, lm, lex);
  std::vector<double> totals;
  totals.reserve(scored.size());
  for (const auto& s : scored) totals.push_back(s.total);
  return argmax(totals);
}

void disambiguate_units(std::vector<TaggedUnit>& units, const NGramModel& lm,
                        const TranslationTable& lex) {
  std::vector<std::string> context;
  for (TaggedUnit& u : units) {
    if (!u.is_content_like() || u.candidates.empty()) continue;
    if (!u.chosen) {
      u.chosen = disambiguate(u.surface(), u.candidates, context, lm, lex);
    }
    for (std::string& w : english_tokens(u.chosen_candidate()->english)) {
      context.push_back(std::move(w));
    }
  }
}

}  // namespace hmt
