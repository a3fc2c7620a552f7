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

#ifndef HMT_LEX_TABLE_H_
#define HMT_LEX_TABLE_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hmt/corpus.h"

namespace hmt {

// t(target | source) lexical translation probabilities. Every source row
// sums to one.
class TranslationTable {
 public:
  static constexpr std::string_view kNull = "<null>";

  using Row = std::map<std::string, double, std::less<>>;

  // nullopt when the source word has no row.
  std::optional<double> prob(std::string_view source, std::string_view target) const;
  const Row* row(std::string_view source) const;
  bool empty() const { return rows_.empty(); }
  std::size_t size() const { return rows_.size(); }
  const std::map<std::string, Row, std::less<>>& rows() const { return rows_; }

  void set(const std::string& source, const std::string& target, double p) {
    rows_[source][target] = p;
  }

  // `source<TAB>target<TAB>prob`, sorted, shortest round-trip doubles.
  void write(std::ostream& out) const;
  static TranslationTable parse(std::istream& in);
  static TranslationTable load(const std::filesystem::path& path);

 private:
  std::map<std::string, Row, std::less<>> rows_;
};

// A parallel pair as word tokens: Hindi as-is, English lower-cased.
struct Bitext {
  std::vector<std::string> source;
  std::vector<std::string> target;
};

std::vector<Bitext> make_bitext(std::span<const ParallelPair> pairs);

// Lexical-model EM with a NULL source word. Rows start uniform over the
// target words each source word co-occurs with; each iteration collects
// expected alignment counts and renormalizes per source word.
TranslationTable train_lex(std::span<const Bitext> corpus, int iterations);
TranslationTable train_lex(std::span<const ParallelPair> pairs, int iterations);

// sum over pairs and target words of log( sum_i t(e_j | f_i) / (l + 1) ),
// with f_0 = NULL. Non-decreasing over EM iterations.
double corpus_log_likelihood(const TranslationTable& table,
                             std::span<const Bitext> corpus);

}  // namespace hmt

#endif  // HMT_LEX_TABLE_H_
