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
#include "hmt/example_index.h"
#include "test_support.h"

namespace hmt {
namespace {

ExampleEntry entry(const std::string& hindi, const std::string& english) {
  return {word_surfaces(tokenize(hindi)), english, ExampleCategory::kIdiom};
}

std::vector<std::string> surfaces(const std::vector<Segment>& segments) {
  std::vector<std::string> out;
  for (const Segment& s : segments) out.push_back(s.surface());
  return out;
}

const ExampleIndex& fixture_index() {
  static const ExampleIndex index =
      build_index(load_examples(testing::fixture("examples.tsv")).entries);
  return index;
}

TEST(ExampleIndexTest, LongestMatchAtPosition) {
  const ExampleIndex index = build_index({entry("मुँह की बात छीनी", "x")});
  const auto tokens = tokenize("ओंकार ने मुँह की बात छीनी");
  const auto m = index.longest_match(tokens, 2);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->length, 4u);
  EXPECT_FALSE(index.longest_match(tokens, 0).has_value());
  EXPECT_FALSE(index.longest_match(tokens, 3).has_value());
}

TEST(ExampleIndexTest, PrefersLongerEntry) {
  const ExampleIndex index =
      build_index({entry("की बात", "short"), entry("मुँह की बात", "long")});
  const auto tokens = tokenize("मुँह की बात");
  const auto m = index.longest_match(tokens, 0);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->entry->english, "long");
  EXPECT_EQ(index.max_phrase_len(), 3u);
}

TEST(ExampleIndexTest, MatchDoesNotCrossPunctuation) {
  const ExampleIndex index = build_index({entry("अंगूठा दिखाया", "refused")});
  const auto tokens = tokenize("अंगूठा, दिखाया");
  EXPECT_FALSE(index.longest_match(tokens, 0).has_value());
}

TEST(ExampleIndexTest, EmptyIndexMissesEverything) {
  const ExampleIndex index;
  EXPECT_EQ(index.max_phrase_len(), 0u);
  const auto tokens = tokenize("राम");
  EXPECT_FALSE(index.longest_match(tokens, 0).has_value());
}

// Largest number of tokens coverable by non-overlapping example matches, by
// exhaustive search over every start/length choice.
std::size_t max_coverage(const std::vector<Token>& tokens, const ExampleIndex& index,
                         std::size_t pos) {
  if (pos >= tokens.size()) return 0;
  std::size_t best = max_coverage(tokens, index, pos + 1);
  for (const ExampleEntry& e : index.entries()) {
    const std::size_t n = e.hindi_tokens.size();
    if (pos + n > tokens.size()) continue;
    bool equal = true;
    for (std::size_t i = 0; i < n && equal; ++i) {
      equal = tokens[pos + i].is_word() && tokens[pos + i].surface == e.hindi_tokens[i];
    }
    if (equal) best = std::max(best, n + max_coverage(tokens, index, pos + n));
  }
  return best;
}

TEST(SegmentTest, GreedyMatchesOptimalCoverageOnFixtures) {
  std::size_t sentences = 0;
  for (const std::string& line : {std::string("ओमकार ने मुँह की बात छिनी"),
                                  std::string("राम नौ दो ग्यारह हो गया"),
                                  std::string("सीता मेरी आँखों का तारा है"),
                                  std::string("वह चलते चलते थक गया।"),
                                  std::string("दाल में कुछ काला है")}) {
    const auto tokens = tokenize(line);
    std::size_t greedy = 0;
    for (const Segment& seg : segment(tokens, fixture_index())) {
      if (seg.kind == SegmentKind::kExampleMatch) greedy += seg.tokens.size();
    }
    EXPECT_EQ(greedy, max_coverage(tokens, fixture_index(), 0)) << line;
    ++sentences;
  }
  EXPECT_EQ(sentences, 5u);
}

TEST(SegmentTest, NoLongerMatchAtAnySegmentStart) {
  const auto tokens = tokenize("राम ने मुँह की बात छीनी और नौ दो ग्यारह हो गया।");
  std::size_t pos = 0;
  for (const Segment& seg : segment(tokens, fixture_index())) {
    const auto m = fixture_index().longest_match(tokens, pos);
    if (m) {
      EXPECT_EQ(seg.kind, SegmentKind::kExampleMatch);
      EXPECT_EQ(seg.tokens.size(), m->length);
    }
    pos += seg.tokens.size();
  }
  EXPECT_EQ(pos, tokens.size());
}

TEST(SegmentTest, EmptyInput) {
  EXPECT_TRUE(segment({}, fixture_index()).empty());
}

TEST(SegmentTest, IdiomBecomesOneSegmentAndMarkerIsKept) {
  const auto segs = segment(tokenize("ओंकार ने मुँह की बात छीनी"), fixture_index());
  EXPECT_EQ(surfaces(segs),
            (std::vector<std::string>{"ओंकार", "ने", "मुँह की बात छीनी"}));
  EXPECT_EQ(segs[2].kind, SegmentKind::kExampleMatch);
  EXPECT_EQ(segs[2].translation, "said what one was about to say");
  EXPECT_EQ(segs[2].category, ExampleCategory::kIdiom);
}

TEST(SegmentTest, SentenceWithoutExamplesSplitsIntoWords) {
  const auto segs = segment(tokenize("ओंकार और अजय जा रहे थे"), fixture_index());
  EXPECT_EQ(surfaces(segs),
            (std::vector<std::string>{"ओंकार", "और", "अजय", "जा", "रहे", "थे"}));
  for (const Segment& s : segs) EXPECT_EQ(s.kind, SegmentKind::kWord);
}

TEST(SegmentTest, PunctuationIsItsOwnSegment) {
  const auto segs = segment(tokenize("वह धड़ाम से गिरी।"), fixture_index());
  ASSERT_EQ(segs.size(), 4u);
  EXPECT_EQ(segs[1].translation, "with a bump");
  EXPECT_TRUE(segs[3].is_punctuation());
}

TEST(SegmentTest, ConcatenationReproducesTokens) {
  for (const char* s : {"ओंकार ने मुँह की बात छीनी", "दाल में कुछ काला है!",
                        "राम, नौ दो ग्यारह हो गया।", "क्या आप लिख रहे हैं?"}) {
    const auto tokens = tokenize(s);
    std::vector<Token> joined;
    for (const Segment& seg : segment(tokens, fixture_index())) {
      joined.insert(joined.end(), seg.tokens.begin(), seg.tokens.end());
    }
    EXPECT_EQ(joined, tokens) << s;
  }
}

TEST(SegmentTest, WholeSentenceExample) {
  const auto segs = segment(
      tokenize("ऑटोरिक्शा दिल्ली में यातायात का एक प्रभावी माध्यम है"), fixture_index());
  ASSERT_EQ(segs.size(), 1u);
  EXPECT_EQ(segs[0].category, ExampleCategory::kFullSentence);
}

}  // namespace
}  // namespace hmt
