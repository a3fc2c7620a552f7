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

#include "hmt/tokenizer.h"

#include "hmt/text.h"

namespace hmt {

bool is_punctuation(char32_t c) {
  return c == U'।' || c == U'॥' || c == U'?' || c == U'!' || c == U',';
}

namespace {

void flush_chunk(std::u32string_view chunk, std::vector<Token>& out) {
  // Trailing full stops are punctuation; interior ones stay in the word.
  size_t end = chunk.size();
  while (end > 0 && chunk[end - 1] == U'.') --end;
  std::u32string word;
  for (size_t i = 0; i < end; ++i) {
    if (is_punctuation(chunk[i])) {
      if (!word.empty()) {
        out.push_back({encode_utf8(word), TokenKind::kWord});
        word.clear();
      }
      out.push_back({encode_utf8(chunk[i]), TokenKind::kPunctuation});
    } else {
      word.push_back(chunk[i]);
    }
  }
  if (!word.empty()) out.push_back({encode_utf8(word), TokenKind::kWord});
  for (size_t i = end; i < chunk.size(); ++i) {
    out.push_back({".", TokenKind::kPunctuation});
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  const std::u32string codepoints = decode_utf8(nfc(text));
  size_t begin = 0;
  for (size_t i = 0; i <= codepoints.size(); ++i) {
    if (i == codepoints.size() || is_unicode_space(codepoints[i])) {
      if (i > begin) {
        flush_chunk(std::u32string_view(codepoints).substr(begin, i - begin),
                    tokens);
      }
      begin = i + 1;
    }
  }
  return tokens;
}

std::vector<std::string> word_surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (t.is_word()) words.push_back(t.surface);
  }
  return words;
}

}  // namespace hmt
