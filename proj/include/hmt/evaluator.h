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

#ifndef HMT_EVALUATOR_H_
#define HMT_EVALUATOR_H_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hmt/batch.h"
#include "hmt/corpus.h"

namespace hmt {

struct EditStats {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;   // reference tokens missing from the hypothesis
  std::size_t insertions = 0;  // hypothesis tokens absent from the reference
  std::size_t ref_length = 0;

  std::size_t distance() const { return substitutions + deletions + insertions; }
  friend bool operator==(const EditStats&, const EditStats&) = default;
};

// Lower-cases, strips trailing . ! ? from the sentence and splits on
// whitespace.
std::vector<std::string> normalize_for_wer(std::string_view sentence);

// Unit-cost Levenshtein alignment. Among equal-cost alignments the backtrace
// prefers a diagonal step, then a deletion, then an insertion.
EditStats wer(std::span<const std::string> hypothesis,
              std::span<const std::string> reference);

// (S+D+I)/N; 0 when both sides are empty; +inf when only N is 0.
double wer_value(const EditStats& stats);

enum class SentenceCategory { kComplex, kSimple, kIdiom, kAmbiguous };
inline constexpr std::array<SentenceCategory, 4> kAllCategories = {
    SentenceCategory::kComplex, SentenceCategory::kSimple,
    SentenceCategory::kIdiom, SentenceCategory::kAmbiguous};

std::string_view sentence_category_name(SentenceCategory c);
std::optional<SentenceCategory> parse_sentence_category(std::string_view name);

struct TestRecord {
  std::string source;
  std::string reference;
  SentenceCategory category = SentenceCategory::kSimple;
};

// `hindi<TAB>english_reference<TAB>category`.
LoadResult<TestRecord> parse_testset(std::istream& in);
LoadResult<TestRecord> load_testset(const std::filesystem::path& path);

struct EvalRecord {
  std::string source;
  std::string reference;
  std::string hypothesis;
  SentenceCategory category = SentenceCategory::kSimple;
  EditStats stats;
  double wer = 0;
  double sent_acc = 1;  // 1 - wer, unclamped
  bool valid = true;    // false when the reference is empty
  std::optional<std::string> error;  // translation failure

  // Value used for aggregation: 0 for failed or invalid records, otherwise
  // sent_acc clamped at 0.
  double clamped_acc() const;
};

EvalRecord score_record(const TestRecord& test, std::string hypothesis);

struct CategorySummary {
  std::size_t count = 0;
  std::optional<double> mean_percent;  // empty when count == 0
};

struct EvalReport {
  std::string system = "Proposed System";
  std::vector<EvalRecord> records;
  std::array<CategorySummary, 4> categories;  // indexed like kAllCategories
  CategorySummary overall;

  const CategorySummary& category(SentenceCategory c) const {
    return categories[static_cast<std::size_t>(c)];
  }
};

// Aggregates clamped per-record accuracy by category and overall.
EvalReport summarize(std::vector<EvalRecord> records);

// Translates every source with `translate` (concurrently when threads > 1)
// and scores it. A throwing translation yields a failed record.
EvalReport evaluate_corpus(std::span<const TestRecord> tests,
                           const LineFunction& translate, int threads = 1);

// "12.34", or "n/a" for an empty summary.
std::string format_percent(const CategorySummary& summary);

nlohmann::json report_to_json(const EvalReport& report);

// Tab-separated table with one column per category and a row for the system.
std::string report_table(const EvalReport& report);

}  // namespace hmt

#endif  // HMT_EVALUATOR_H_
