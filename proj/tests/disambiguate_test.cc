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

#include <cmath>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hmt/disambiguate.h"
#include "test_support.h"

namespace hmt {
namespace {

std::vector<std::vector<std::string>> sentences(const std::vector<std::string>& lines) {
  std::vector<std::vector<std::string>> out;
  for (const auto& l : lines) out.push_back(english_tokens(l));
  return out;
}

TEST(DisambiguateTest, SingleCandidateIsIndexZero) {
  const NGramModel lm = train_lm({}, 2, 1.0);
  const TranslationTable lex;
  const std::vector<Candidate> one = {{"gold", Tag::kNoun}};
  EXPECT_EQ(disambiguate("सोना", one, {}, lm, lex), 0u);
}

TEST(DisambiguateTest, SymmetricCandidatesTieToFirst) {
  const NGramModel lm = train_lm(sentences({"a x", "a y"}), 2, 1.0);
  TranslationTable lex;
  lex.set("क", "x", 0.5);
  lex.set("क", "y", 0.5);
  const std::vector<Candidate> c = {{"y", Tag::kNoun}, {"x", Tag::kNoun}};
  const std::vector<std::string> context = {"a"};
  EXPECT_EQ(disambiguate("क", c, context, lm, lex), 0u);
  const std::vector<Candidate> swapped = {{"x", Tag::kNoun}, {"y", Tag::kNoun}};
  EXPECT_EQ(disambiguate("क", swapped, context, lm, lex), 0u);
}

// LM trained on "vikas did development"; lexical probabilities equal, so the
// bigram P(. | did) decides: (1+1)/(1+6) for development against 1/(1+6).
TEST(DisambiguateTest, ContextSelectsDevelopment) {
  const NGramModel lm = train_lm(sentences({"vikas did development"}), 2, 1.0);
  TranslationTable lex;
  lex.set("विकास", "development", 0.5);
  lex.set("विकास", "vikas", 0.5);
  const std::vector<Candidate> c = {{"vikas", Tag::kName}, {"development", Tag::kNoun}};
  const std::vector<std::string> context = {"vikas", "did"};
  const auto scores = score_candidates("विकास", c, context, lm, lex);
  EXPECT_NEAR(scores[1].log_lm, std::log(2.0 / 7), 1e-12);
  EXPECT_NEAR(scores[0].log_lm, std::log(1.0 / 7), 1e-12);
  EXPECT_NEAR(scores[1].total, std::log(0.5) + std::log(2.0 / 7), 1e-12);
  EXPECT_EQ(disambiguate("विकास", c, context, lm, lex), 1u);
}

TEST(DisambiguateTest, MissingLexEntryUsesFloor) {
  const NGramModel lm = train_lm({}, 2, 1.0);
  const TranslationTable lex;
  const std::vector<Candidate> c = {{"gold", Tag::kNoun}};
  const auto scores = score_candidates("सोना", c, {}, lm, lex);
  EXPECT_DOUBLE_EQ(scores[0].log_lex, std::log(kLexFloor));
  EXPECT_TRUE(std::isfinite(scores[0].total));
}

TEST(DisambiguateTest, ArgmaxInvariantUnderSharedShift) {
  const std::vector<double> s = {-3.5, -1.25, -1.25, -7.0};
  std::vector<double> shifted;
  for (double v : s) shifted.push_back(v + 42.0);
  EXPECT_EQ(argmax(s), 1u);
  EXPECT_EQ(argmax(shifted), argmax(s));
}

TEST(DisambiguateTest, FixtureModelsPickGoldAndMango) {
  const Bundle& b = testing::fixture_bundle();
  const std::vector<Candidate> sona = {{"sleep", Tag::kVerb}, {"gold", Tag::kNoun}};
  const std::vector<std::string> sita = {"sita"};
  EXPECT_EQ(disambiguate("सोना", sona, sita, b.lm(), b.lex()), 1u);
  const std::vector<Candidate> aam = {{"common", Tag::kAdj}, {"mango", Tag::kNoun}};
  const std::vector<std::string> ram = {"ram"};
  EXPECT_EQ(disambiguate("आम", aam, ram, b.lm(), b.lex()), 1u);
}

TEST(DisambiguateTest, UnitsAreResolvedLeftToRight) {
  const Bundle& b = testing::fixture_bundle();
  auto units = tag_sentence(segment(tokenize("सीता सोना खरीद रही है"), b.examples()),
                            b.tagger_resources());
  disambiguate_units(units, b.lm(), b.lex());
  for (const TaggedUnit& u : units) {
    if (u.is_content_like()) {
      EXPECT_TRUE(u.chosen.has_value());
    }
  }
  EXPECT_EQ(units[1].chosen_candidate()->english, "gold");
}

}  // namespace
}  // namespace hmt
