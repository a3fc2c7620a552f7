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

#ifndef HMT_DISAMBIGUATE_H_
#define HMT_DISAMBIGUATE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hmt/lex_table.h"
#include "hmt/ngram_model.h"
#include "hmt/tagger.h"

namespace hmt {

// log t(e | f) when the lexical table has no usable entry.
inline constexpr double kLexFloor = 1e-6;

struct DisambiguationScore {
  Candidate candidate;
  double log_lex = 0;
  double log_lm = 0;
  double total = 0;  // log_lex + log_lm
};

// Scores each candidate by log t(english | source) + log P_lm(english |
// left context). The source-side and shared-context terms are identical for
// all candidates and are left out.
std::vector<DisambiguationScore> score_candidates(
    std::string_view source_word, std::span<const Candidate> candidates,
    std::span<const std::string> left_context, const NGramModel& lm,
    const TranslationTable& lex);

// First index of the maximum; ties go to the lower index.
std::size_t argmax(std::span<const double> scores);

std::size_t disambiguate(std::string_view source_word,
                         std::span<const Candidate> candidates,
                         std::span<const std::string> left_context,
                         const NGramModel& lm, const TranslationTable& lex);

// Chooses a candidate for every unit that still has several, left to right,
// with the English chosen so far as LM context.
void disambiguate_units(std::vector<TaggedUnit>& units, const NGramModel& lm,
                        const TranslationTable& lex);

}  // namespace hmt

#endif  // HMT_DISAMBIGUATE_H_
