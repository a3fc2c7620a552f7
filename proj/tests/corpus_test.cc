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

#include <algorithm>
#include <sstream>

#include "gtest/gtest.h"
#include "hmt/corpus.h"
#include "test_support.h"

namespace hmt {
namespace {

TEST(DictionaryTest, ParsesEntry) {
  std::istringstream in("विकास\tdevelopment\tNOUN\n");
  const auto r = parse_dictionary(in);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].hindi, "विकास");
  EXPECT_EQ(r.entries[0].english, "development");
  EXPECT_EQ(r.entries[0].tag, Tag::kNoun);
  EXPECT_TRUE(r.rejects.empty());
}

TEST(DictionaryTest, EmptyFileLoadsNothing) {
  std::istringstream in("");
  const auto r = parse_dictionary(in);
  EXPECT_TRUE(r.entries.empty());
  EXPECT_TRUE(r.rejects.empty());
}

TEST(DictionaryTest, ShortLineIsRejectedOthersLoad) {
  std::istringstream in("भारत\tindia\tNOUN\nसेब\tapple\nदेश\tcountry\tNOUN\n");
  const auto r = parse_dictionary(in);
  EXPECT_EQ(r.entries.size(), 2u);
  ASSERT_EQ(r.rejects.size(), 1u);
  EXPECT_EQ(r.rejects[0].line, 2u);
}

TEST(DictionaryTest, UnknownTagAndDuplicatesAreRejected) {
  std::istringstream in(
      "भारत\tindia\tNOUN\nभारत\tindia\tNOUN\nदेश\tcountry\tPLACE\n\nआम\tmango\tNOUN\n");
  const auto r = parse_dictionary(in);
  EXPECT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.rejects.size(), 2u);
  EXPECT_EQ(r.entries.size() + r.rejects.size(), r.nonblank_lines);
}

TEST(DictionaryTest, NormalizesToNfc) {
  std::istringstream in("ड़\tx\tNOUN\nड़\ty\tNOUN\n");
  const auto r = parse_dictionary(in);
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].hindi, r.entries[1].hindi);
}

TEST(DictionaryTest, MissingFileIsFatal) {
  EXPECT_THROW(load_dictionary("/nonexistent/dictionary.tsv"), LoadError);
}

TEST(DictionaryTest, RoundTripsThroughTsv) {
  const auto first = load_dictionary(testing::fixture("dictionary.tsv"));
  ASSERT_TRUE(first.rejects.empty());
  std::ostringstream out;
  write_dictionary(out, first.entries);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_dictionary(in).entries, first.entries);
}

TEST(ExamplesTest, IdiomHasFourTokens) {
  std::istringstream in("मुँह की बात छीनी\tsaid what one was about to say\tidiom\n");
  const auto r = parse_examples(in);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].hindi_tokens.size(), 4u);
  EXPECT_EQ(r.entries[0].category, ExampleCategory::kIdiom);
}

TEST(ExamplesTest, FullSentenceHasNineTokens) {
  std::istringstream in(
      "ऑटोरिक्शा दिल्ली में यातायात का एक प्रभावी माध्यम है\t"
      "Autoriksha is an effective medium for journey in Delhi\tfull_sentence\n");
  const auto r = parse_examples(in);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].hindi_tokens.size(), 9u);
}

TEST(ExamplesTest, FirstDuplicateIsKept) {
  std::istringstream in("अंगूठा दिखाया\trefused\tidiom\nअंगूठा  दिखाया\tshowed thumb\tphrase\n");
  const auto r = parse_examples(in);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].english, "refused");
  EXPECT_EQ(r.rejects.size(), 1u);
}

TEST(ExamplesTest, RoundTripsThroughTsv) {
  const auto first = load_examples(testing::fixture("examples.tsv"));
  std::ostringstream out;
  write_examples(out, first.entries);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_examples(in).entries, first.entries);
}

TEST(ParallelTest, KeepsFileOrder) {
  std::istringstream in("भारत मेरा देश है\tIndia is my country\nराम\tRam\n");
  const auto r = parse_parallel(in);
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[1].english, "Ram");
}

TEST(ParallelTest, ExtraTabsAreRejected) {
  std::istringstream in("a\tb\tc\td\nराम\tRam\n");
  const auto r = parse_parallel(in);
  EXPECT_EQ(r.entries.size(), 1u);
  ASSERT_EQ(r.rejects.size(), 1u);
  EXPECT_EQ(r.rejects[0].line, 1u);
}

TEST(ParallelTest, LoadedPlusRejectedEqualsNonblankLines) {
  std::istringstream in("a\tb\n\nc\n\td\ne\tf\n   \n");
  const auto r = parse_parallel(in);
  EXPECT_EQ(r.entries.size() + r.rejects.size(), r.nonblank_lines);
  EXPECT_EQ(r.nonblank_lines, 4u);
}

TEST(RejectsReportTest, WritesLineAndReason) {
  const auto dir = testing::temp_dir("rejects");
  const auto input = dir / "parallel.tsv";
  testing::write_file(input, "bad\n");
  const auto r = load_parallel(input);
  const auto report = write_rejects_report(input, r.rejects);
  EXPECT_EQ(report.filename(), "parallel.tsv.rejects");
  const std::string text = testing::read_file(report);
  EXPECT_EQ(text.substr(0, 2), "1\t");
  std::filesystem::remove_all(dir);
}

TEST(CorpusStatsTest, EmptyCorpusIsAllZero) {
  EXPECT_EQ(corpus_stats({}), CorpusStats{});
}

TEST(CorpusStatsTest, OnePair) {
  const std::vector<ParallelPair> pairs = {{"भारत मेरा देश है", "India is my country"}};
  const CorpusStats s = corpus_stats(pairs);
  EXPECT_EQ(s.tokens.hindi, 4u);
  EXPECT_EQ(s.tokens.english, 4u);
  EXPECT_EQ(s.sentences, 1u);
  EXPECT_EQ(s.short_sentences.hindi, 1u);
  EXPECT_EQ(s.short_sentences.english, 1u);
  EXPECT_EQ(s.long_sentences.hindi, 0u);
  EXPECT_EQ(s.characters.english, 19u);
  EXPECT_EQ(s.characters.hindi, 16u);
}

TEST(CorpusStatsTest, TypesAreCaseSensitiveOnEnglish) {
  const std::vector<ParallelPair> pairs = {{"राम राम", "Ram ram"}};
  const CorpusStats s = corpus_stats(pairs);
  EXPECT_EQ(s.types.hindi, 1u);
  EXPECT_EQ(s.types.english, 2u);
}

TEST(CorpusStatsTest, ShortLongSplitPerSide) {
  const std::vector<ParallelPair> pairs = {
      {"एक दो तीन चार पांच छह सात आठ नौ दस ग्यारह", "one two"}};
  const CorpusStats s = corpus_stats(pairs);
  EXPECT_EQ(s.long_sentences.hindi, 1u);
  EXPECT_EQ(s.short_sentences.english, 1u);
}

TEST(CorpusStatsTest, PermutationInvariant) {
  auto pairs = load_parallel(testing::fixture("parallel.tsv")).entries;
  const CorpusStats before = corpus_stats(pairs);
  std::reverse(pairs.begin(), pairs.end());
  EXPECT_EQ(corpus_stats(pairs), before);
}

}  // namespace
}  // namespace hmt
