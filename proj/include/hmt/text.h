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

#ifndef HMT_TEXT_H_
#define HMT_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace hmt {

// NFC-normalizes UTF-8 text. Invalid UTF-8 sequences are replaced by U+FFFD.
std::string nfc(std::string_view text);

// Decodes UTF-8 into codepoints; invalid bytes become U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view codepoints);
std::string encode_utf8(char32_t codepoint);

// Number of codepoints in a UTF-8 string.
std::size_t codepoint_count(std::string_view text);

bool is_unicode_space(char32_t c);

// Strips leading/trailing ASCII and Unicode whitespace.
std::string_view trim(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);

std::string ascii_lower(std::string_view text);

// "U+0950" style name for diagnostics.
std::string codepoint_name(char32_t c);

// Splits on ASCII spaces, dropping empties.
std::vector<std::string> split_words(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace hmt

#endif  // HMT_TEXT_H_
