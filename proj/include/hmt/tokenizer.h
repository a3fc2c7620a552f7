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

#ifndef HMT_TOKENIZER_H_
#define HMT_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace hmt {

enum class TokenKind { kWord, kPunctuation };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;

  bool is_word() const { return kind == TokenKind::kWord; }
  friend bool operator==(const Token&, const Token&) = default;
};

// True for the single-codepoint punctuation marks the tokenizer detaches:
// danda "।", double danda "॥", "?", "!" and ",". A full stop is detached
// only at the end of a whitespace-delimited chunk (so "3.5" survives).
bool is_punctuation(char32_t c);

// NFC-normalizes `text`, splits on Unicode whitespace and emits punctuation
// as separate single-codepoint tokens. Never produces empty tokens.
std::vector<Token> tokenize(std::string_view text);

// Surfaces of the word tokens only.
std::vector<std::string> word_surfaces(const std::vector<Token>& tokens);

}  // namespace hmt

#endif  // HMT_TOKENIZER_H_
