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

#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "hmt/transliterate.h"
#include "test_support.h"

namespace hmt {
namespace {

const TransliterationTable& table() {
  static const TransliterationTable t =
      TransliterationTable::load(testing::fixture("translit.tsv"));
  return t;
}

struct Case {
  const char* devanagari;
  const char* latin;
};

class TransliterateFixtureTest : public ::testing::TestWithParam<Case> {};

TEST_P(TransliterateFixtureTest, MatchesExpectedSpelling) {
  EXPECT_EQ(transliterate(GetParam().devanagari, table()), GetParam().latin);
}

INSTANTIATE_TEST_SUITE_P(
    Names, TransliterateFixtureTest,
    ::testing::Values(Case{"विकास", "vikas"}, Case{"ओमकार", "omkar"},
                      Case{"धारिया", "dhariya"}, Case{"भारत", "bharat"},
                      Case{"अजय", "ajay"}, Case{"मोहन", "mohan"},
                      Case{"सीता", "sita"}, Case{"राम", "ram"},
                      Case{"ओंकार", "onkar"}, Case{"दिल्ली", "dilli"},
                      Case{"क्षमा", "kshama"}, Case{"ज़रा", "zara"},
                      Case{"लड़का", "ladka"}));

TEST(TransliterateTest, OutputIsLowercaseAscii) {
  for (const char* w : {"विकास", "ऑटोरिक्शा", "प्रभावी", "हूँ", "दुःख"}) {
    const std::string out = transliterate(w, table());
    EXPECT_FALSE(out.empty()) << w;
    for (char c : out) EXPECT_TRUE(c >= 'a' && c <= 'z') << w << " -> " << out;
  }
}

TEST(TransliterateTest, UncoveredCodepointIsNamed) {
  try {
    transliterate("राम१", table());
    FAIL() << "expected UncoveredCodepoint";
  } catch (const UncoveredCodepoint& e) {
    EXPECT_EQ(e.codepoint(), U'१');
    EXPECT_NE(std::string(e.what()).find("U+0967"), std::string::npos);
  }
}

TEST(TransliterateTest, LenientEmitsPlaceholder) {
  const auto r = transliterate_lenient("राम१", table());
  EXPECT_EQ(r.text, "ramu0967");
  ASSERT_EQ(r.uncovered.size(), 1u);
  EXPECT_EQ(r.uncovered[0], U'१');
}

TEST(TransliterationTableTest, AcceptsCodepointKeysAndRoundTrips) {
  std::istringstream in("U+0915\tk\nा\ta\n");
  const auto t = TransliterationTable::parse(in);
  EXPECT_EQ(transliterate("का", t), "ka");
  std::ostringstream out;
  t.write(out);
  std::istringstream again(out.str());
  EXPECT_EQ(TransliterationTable::parse(again).entries(), t.entries());
}

TEST(TransliterationTableTest, RejectsNonLatinValues) {
  std::istringstream in("क\tK1\n");
  EXPECT_THROW(TransliterationTable::parse(in), FormatError);
}

}  // namespace
}  // namespace hmt
