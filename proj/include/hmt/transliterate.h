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

#ifndef HMT_TRANSLITERATE_H_
#define HMT_TRANSLITERATE_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hmt {

// Devanagari -> Latin letter table. Keys are single codepoints or clusters
// (e.g. "क्ष", "ज़"); values are lower-case ASCII letters. Whether a key is a
// consonant, an independent vowel, a dependent vowel sign or a nasal/visarga
// sign follows from the Unicode block position of its first codepoint.
class TransliterationTable {
 public:
  // `devanagari<TAB>latin` lines; `U+XXXX` is accepted as a key spelling.
  static TransliterationTable parse(std::istream& in);
  static TransliterationTable load(const std::filesystem::path& path);

  void add(std::u32string key, std::string latin);

  // Longest key that is a prefix of `text`; returns its length (0 if none).
  std::size_t match(std::u32string_view text, std::string_view* latin) const;

  const std::map<std::u32string, std::string>& entries() const {
    return entries_;
  }
  void write(std::ostream& out) const;

 private:
  std::map<std::u32string, std::string> entries_;
  std::size_t max_key_len_ = 0;
};

class UncoveredCodepoint : public std::runtime_error {
 public:
  explicit UncoveredCodepoint(char32_t c);
  char32_t codepoint() const { return codepoint_; }

 private:
  char32_t codepoint_;
};

// Consonants carry an inherent "a" unless followed by a vowel sign or a
// virama. The inherent vowel is dropped word-finally and in the medial
// context vowel + C _ C + vowel, which gives "vikas", "omkar", "dhariya".
// Throws UncoveredCodepoint for characters missing from the table.
std::string transliterate(std::string_view word,
                          const TransliterationTable& table);

struct LenientTransliteration {
  std::string text;
  std::vector<char32_t> uncovered;
};

// Same as transliterate, but each uncovered codepoint is emitted as a
// "uXXXX" placeholder and reported.
LenientTransliteration transliterate_lenient(std::string_view word,
                                             const TransliterationTable& table);

}  // namespace hmt

#endif  // HMT_TRANSLITERATE_H_
