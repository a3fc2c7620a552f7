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

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hmt/text.h"
#include "hmt/tokenizer.h"

namespace hmt {
namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

TEST(TextTest, NfcKeepsExcludedNuktaLettersDecomposed) {
  // क + nukta stays decomposed (composition exclusion); NFC is idempotent.
  const std::string decomposed = "\u0915\u093C";
  EXPECT_EQ(nfc(decomposed), decomposed);
  EXPECT_EQ(nfc("\u0958"), decomposed);
  EXPECT_EQ(nfc(nfc("विकास")), nfc("विकास"));
}

TEST(TextTest, TrimHandlesUnicodeSpaces) {
  EXPECT_EQ(trim("  राम  "), "राम");
  EXPECT_EQ(trim("   "), "");
  EXPECT_EQ(trim(""), "");
}

TEST(TextTest, CodepointCountCountsDevanagariSigns) {
  EXPECT_EQ(codepoint_count("हूँ"), 3u);
  EXPECT_EQ(codepoint_count("abc"), 3u);
}

TEST(TextTest, SplitKeepsEmptyFields) {
  const auto parts = split("a\t\tb", '\t');
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[1], "");
}

TEST(TokenizerTest, DetachesDandaAndQuestionMark) {
  EXPECT_EQ(surfaces(tokenize("विकास विकास ने किया।")),
            (std::vector<std::string>{"विकास", "विकास", "ने", "किया", "।"}));
  const auto tokens = tokenize("क्या आप लिख रहे हैं?");
  ASSERT_EQ(tokens.size(), 6u);
  EXPECT_FALSE(tokens.back().is_word());
  EXPECT_EQ(tokens.back().surface, "?");
}

TEST(TokenizerTest, FullStopOnlyAtChunkEnd) {
  EXPECT_EQ(surfaces(tokenize("3.5 kg.")),
            (std::vector<std::string>{"3.5", "kg", "."}));
}

TEST(TokenizerTest, EmptyAndBlankInput) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize(" \t ").empty());
}

TEST(TokenizerTest, WordSurfacesDropPunctuation) {
  EXPECT_EQ(word_surfaces(tokenize("राम, सीता!")),
            (std::vector<std::string>{"राम", "सीता"}));
}

}  // namespace
}  // namespace hmt
