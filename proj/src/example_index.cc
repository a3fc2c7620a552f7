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

#include "hmt/example_index.h"

#include <algorithm>

#include "hmt/text.h"

namespace hmt {
namespace {

constexpr char kKeySeparator = '\x1f';

std::string key_of(std::span<const std::string> words) {
  std::string key;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) key += kKeySeparator;
    key += words[i];
  }
  return key;
}

}  // namespace

ExampleIndex::ExampleIndex(std::vector<ExampleEntry> entries)
    : entries_(std::move(entries)) {
  by_key_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& tokens = entries_[i].hindi_tokens;
    if (tokens.empty()) continue;
    // First entry wins on duplicate keys.
    if (by_key_.emplace(key_of(tokens), i).second) {
      max_phrase_len_ = std::max(max_phrase_len_, tokens.size());
    }
  }
}

std::optional<ExampleIndex::Match> ExampleIndex::longest_match(
    std::span<const Token> tokens, std::size_t start) const {
  if (start >= tokens.size() || max_phrase_len_ == 0) return std::nullopt;
  // Only the run of word tokens starting at `start` can match.
  std::vector<std::string> words;
  for (std::size_t i = start;
       i < tokens.size() && words.size() < max_phrase_len_ && tokens[i].is_word();
       ++i) {
    words.push_back(tokens[i].surface);
  }
  for (std::size_t len = words.size(); len > 0; --len) {
    auto it = by_key_.find(key_of(std::span(words).first(len)));
    if (it != by_key_.end()) return Match{len, &entries_[it->second]};
  }
  return std::nullopt;
}

ExampleIndex build_index(std::vector<ExampleEntry> entries) {
  return ExampleIndex(std::move(entries));
}

std::string Segment::surface() const {
  std::vector<std::string> parts;
  parts.reserve(tokens.size());
  for (const Token& t : tokens) parts.push_back(t.surface);
  return join(parts, " ");
}

std::vector<Segment> segment(std::span<const Token> tokens,
                             const ExampleIndex& index) {
  std::vector<Segment> segments;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    if (auto match = index.longest_match(tokens, pos)) {
      Segment s;
      s.kind = SegmentKind::kExampleMatch;
      s.tokens.assign(tokens.begin() + pos, tokens.begin() + pos + match->length);
      s.translation = match->entry->english;
      s.category = match->entry->category;
      segments.push_back(std::move(s));
      pos += match->length;
    } else {
      Segment s;
      s.tokens.push_back(tokens[pos]);
      segments.push_back(std::move(s));
      ++pos;
    }
  }
  return segments;
}

}  // namespace hmt
