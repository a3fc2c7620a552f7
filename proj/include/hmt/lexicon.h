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

#ifndef HMT_LEXICON_H_
#define HMT_LEXICON_H_

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hmt/corpus.h"
#include "hmt/tag.h"

namespace hmt {

struct Sense {
  std::string english;
  Tag tag = Tag::kNoun;
  friend bool operator==(const Sense&, const Sense&) = default;
};

// Hindi surface -> senses, in dictionary file order.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::span<const DictionaryEntry> entries);

  // Empty when out of vocabulary. `word` must already be NFC.
  std::span<const Sense> lookup(std::string_view word) const;
  bool contains(std::string_view word) const { return !lookup(word).empty(); }
  std::size_t size() const { return senses_.size(); }

 private:
  std::unordered_map<std::string, std::vector<Sense>> senses_;
};

}  // namespace hmt

#endif  // HMT_LEXICON_H_
