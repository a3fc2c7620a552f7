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

#ifndef HMT_EXAMPLE_INDEX_H_
#define HMT_EXAMPLE_INDEX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hmt/corpus.h"
#include "hmt/tokenizer.h"

namespace hmt {

// Exact token-sequence index over the example database. Lookups at a
// position try lengths from max_phrase_len() down to 1, so each query costs
// at most max_phrase_len() hash probes.
class ExampleIndex {
 public:
  struct Match {
    std::size_t length = 0;
    const ExampleEntry* entry = nullptr;
  };

  ExampleIndex() = default;
  explicit ExampleIndex(std::vector<ExampleEntry> entries);

  // Longest entry whose tokens equal tokens[start, start + length).
  std::optional<Match> longest_match(std::span<const Token> tokens,
                                     std::size_t start) const;

  std::size_t max_phrase_len() const { return max_phrase_len_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<ExampleEntry>& entries() const { return entries_; }

 private:
  std::vector<ExampleEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_key_;
  std::size_t max_phrase_len_ = 0;
};

ExampleIndex build_index(std::vector<ExampleEntry> entries);

enum class SegmentKind { kExampleMatch, kWord };

struct Segment {
  SegmentKind kind = SegmentKind::kWord;
  std::vector<Token> tokens;
  std::optional<std::string> translation;  // set iff kExampleMatch
  std::optional<ExampleCategory> category;

  bool is_punctuation() const {
    return kind == SegmentKind::kWord && tokens.size() == 1 &&
           !tokens.front().is_word();
  }
  // Space-joined surfaces.
  std::string surface() const;
};

// Greedy leftmost-longest segmentation. Concatenating the tokens of the
// returned segments reproduces `tokens` exactly.
std::vector<Segment> segment(std::span<const Token> tokens,
                             const ExampleIndex& index);

}  // namespace hmt

#endif  // HMT_EXAMPLE_INDEX_H_
