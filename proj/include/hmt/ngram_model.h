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

#ifndef HMT_NGRAM_MODEL_H_
#define HMT_NGRAM_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hmt {

// Add-k smoothed n-gram model over whitespace tokens. Each sentence is padded
// with order-1 start symbols and one end symbol; every padded symbol is part
// of the vocabulary, and one extra UNK slot absorbs unseen tokens:
//
//   P(w | h) = (c(h, w) + k) / (c(h) + k * (|V| + 1))
//
// so every conditional distribution sums to one over V plus UNK.
class NGramModel {
 public:
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";
  static constexpr std::string_view kUnk = "<unk>";

  NGramModel(int order, double k);

  int order() const { return order_; }
  double k() const { return k_; }
  const std::set<std::string, std::less<>>& vocabulary() const { return vocab_; }
  // |V| + 1 for UNK.
  std::size_t effective_vocab_size() const { return vocab_.size() + 1; }

  void add_sentence(std::span<const std::string> tokens);

  // `history` holds the preceding tokens; only the last order-1 are used and
  // shorter histories are left-padded with start symbols.
  double prob(std::span<const std::string> history, std::string_view token) const;
  double logprob(std::span<const std::string> history, std::string_view token) const;

  // Natural-log probability of a whole padded sentence, end symbol included.
  double sentence_logprob(std::span<const std::string> tokens) const;

  // Sum of log P(c_i | left_context + c_<i): the part of a sentence score that
  // changes when `continuation` is appended to `left_context`.
  double continuation_logprob(std::span<const std::string> left_context,
                              std::span<const std::string> continuation) const;

  std::uint64_t count(std::span<const std::string> context,
                      std::string_view token) const;
  std::uint64_t context_total(std::span<const std::string> context) const;

  // Header `order<TAB>k`, then `context<TAB>token<TAB>count` sorted by
  // context and token (context tokens space-joined).
  void write(std::ostream& out) const;
  static NGramModel parse(std::istream& in);
  static NGramModel load(const std::filesystem::path& path);

 private:
  std::string context_key(std::span<const std::string> history) const;
  std::string_view map_token(std::string_view token) const;

  int order_;
  double k_;
  std::map<std::string, std::map<std::string, std::uint64_t, std::less<>>, std::less<>>
      counts_;
  std::map<std::string, std::uint64_t, std::less<>> context_totals_;
  std::set<std::string, std::less<>> vocab_;
};

NGramModel train_lm(std::span<const std::vector<std::string>> sentences,
                    int order, double k);

// Natural log of `lm` probability for the whole sentence.
double lm_logprob(const NGramModel& lm, std::span<const std::string> tokens);

// Lower-cased word tokens of an English sentence, as used by the LM and the
// lexical table.
std::vector<std::string> english_tokens(std::string_view sentence);

}  // namespace hmt

#endif  // HMT_NGRAM_MODEL_H_
