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

#include "hmt/lexicon.h"

namespace hmt {

Lexicon::Lexicon(std::span<const DictionaryEntry> entries) {
  for (const DictionaryEntry& e : entries) {
    senses_[e.hindi].push_back({e.english, e.tag});
  }
}

std::span<const Sense> Lexicon::lookup(std::string_view word) const {
  auto it = senses_.find(std::string(word));
  if (it == senses_.end()) return {};
  return it->second;
}

}  // namespace hmt
