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

#include "hmt/evaluator.h"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "hmt/text.h"

namespace hmt {

std::vector<std::string> normalize_for_wer(std::string_view sentence) {
  std::string s = ascii_lower(trim(sentence));
  while (!s.empty() &&
         (s.back() == '.' || s.back() == '!' || s.back() == '?' ||
          s.back() == ' ')) {
    s.pop_back();
  }
  return split_words(s);
}

EditStats wer(std::span<const std::string> hypothesis,
              std::span<const std::string> reference) {
  const std::size_t n = reference.size();
  const std::size_t m = hypothesis.size();
  // d[i][j]: distance between reference[0, i) and hypothesis[0, j).
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag =
          d[i - 1][j - 1] + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      d[i][j] = std::min({diag, d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }

  EditStats stats;
  stats.ref_length = n;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = reference[i - 1] == hypothesis[j - 1];
      if (d[i][j] == d[i - 1][j - 1] + (same ? 0 : 1)) {
        if (!same) ++stats.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      ++stats.deletions;
      --i;
    } else {
      ++stats.insertions;
      --j;
    }
  }
  return stats;
}

double wer_value(const EditStats& stats) {
  if (stats.ref_length == 0) {
    return stats.distance() == 0 ? 0.0
                                 : std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(stats.distance()) /
         static_cast<double>(stats.ref_length);
}

std::string_view sentence_category_name(SentenceCategory c) {
  switch (c) {
    case SentenceCategory::kComplex: return "complex";
    case SentenceCategory::kSimple: return "simple";
    case SentenceCategory::kIdiom: return "idiom";
    case SentenceCategory::kAmbiguous: return "ambiguous";
  }
  return "?";
}

std::optional<SentenceCategory> parse_sentence_category(std::string_view name) {
  for (SentenceCategory c : kAllCategories) {
    if (sentence_category_name(c) == name) return c;
  }
  return std::nullopt;
}

LoadResult<TestRecord> parse_testset(std::istream& in) {
  LoadResult<TestRecord> result;
  for_each_table_line(in, [&](std::size_t line,
                              const std::vector<std::string_view>& f) {
    ++result.nonblank_lines;
    if (f.size() != 3) {
      result.rejects.push_back({line, "expected 3 tab-separated fields"});
      return;
    }
    auto category = parse_sentence_category(f[2]);
    if (!category) {
      result.rejects.push_back({line, "unknown category '" + std::string(f[2]) + "'"});
      return;
    }
    if (f[0].empty()) {
      result.rejects.push_back({line, "empty source sentence"});
      return;
    }
    result.entries.push_back({nfc(f[0]), std::string(f[1]), *category});
  });
  return result;
}

LoadResult<TestRecord> load_testset(const std::filesystem::path& path) {
  return load_table(path, [](std::istream& in) { return parse_testset(in); });
}

double EvalRecord::clamped_acc() const {
  if (error || !valid) return 0.0;
  return std::max(0.0, sent_acc);
}

EvalRecord score_record(const TestRecord& test, std::string hypothesis) {
  EvalRecord r;
  r.source = test.source;
  r.reference = test.reference;
  r.hypothesis = std::move(hypothesis);
  r.category = test.category;
  const auto hyp = normalize_for_wer(r.hypothesis);
  const auto ref = normalize_for_wer(r.reference);
  r.stats = wer(hyp, ref);
  r.wer = wer_value(r.stats);
  r.sent_acc = 1.0 - r.wer;
  r.valid = r.stats.ref_length > 0 || r.stats.distance() == 0;
  return r;
}

EvalReport summarize(std::vector<EvalRecord> records) {
  EvalReport report;
  std::array<double, 4> sums{};
  double total = 0;
  for (const EvalRecord& r : records) {
    const auto c = static_cast<std::size_t>(r.category);
    ++report.categories[c].count;
    sums[c] += r.clamped_acc();
    total += r.clamped_acc();
  }
  for (std::size_t c = 0; c < sums.size(); ++c) {
    if (report.categories[c].count > 0) {
      report.categories[c].mean_percent =
          100.0 * sums[c] / static_cast<double>(report.categories[c].count);
    }
  }
  report.overall.count = records.size();
  if (!records.empty()) {
    report.overall.mean_percent =
        100.0 * total / static_cast<double>(records.size());
  }
  report.records = std::move(records);
  return report;
}

EvalReport evaluate_corpus(std::span<const TestRecord> tests,
                           const LineFunction& translate, int threads) {
  std::vector<std::string> sources;
  sources.reserve(tests.size());
  for (const TestRecord& t : tests) sources.push_back(t.source);
  const std::vector<BatchItem> items = run_batch(sources, translate, threads);
  std::vector<EvalRecord> records;
  records.reserve(tests.size());
  for (std::size_t i = 0; i < tests.size(); ++i) {
    EvalRecord r = score_record(tests[i], items[i].output);
    r.error = items[i].error;
    records.push_back(std::move(r));
  }
  return summarize(std::move(records));
}

std::string format_percent(const CategorySummary& summary) {
  if (!summary.mean_percent) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *summary.mean_percent);
  return buf;
}

namespace {

nlohmann::json finite_or_null(double v) {
  if (v == std::numeric_limits<double>::infinity() ||
      v == -std::numeric_limits<double>::infinity()) {
    return nullptr;
  }
  return v;
}

nlohmann::json summary_json(const CategorySummary& s) {
  nlohmann::json j;
  j["count"] = s.count;
  j["mean_percent"] = s.mean_percent ? nlohmann::json(*s.mean_percent) : nullptr;
  j["formatted"] = format_percent(s);
  return j;
}

}  // namespace

nlohmann::json report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["system"] = report.system;
  j["records"] = nlohmann::json::array();
  for (const EvalRecord& r : report.records) {
    nlohmann::json jr;
    jr["source"] = r.source;
    jr["reference"] = r.reference;
    jr["hypothesis"] = r.hypothesis;
    jr["category"] = sentence_category_name(r.category);
    jr["substitutions"] = r.stats.substitutions;
    jr["deletions"] = r.stats.deletions;
    jr["insertions"] = r.stats.insertions;
    jr["ref_length"] = r.stats.ref_length;
    jr["wer"] = finite_or_null(r.wer);
    jr["sent_acc"] = finite_or_null(r.sent_acc);
    jr["sent_acc_clamped"] = r.clamped_acc();
    jr["valid"] = r.valid;
    jr["error"] = r.error ? nlohmann::json(*r.error) : nullptr;
    j["records"].push_back(std::move(jr));
  }
  for (SentenceCategory c : kAllCategories) {
    j["categories"][std::string(sentence_category_name(c))] =
        summary_json(report.category(c));
  }
  j["overall"] = summary_json(report.overall);
  return j;
}

std::string report_table(const EvalReport& report) {
  std::string out =
      "MT \\ Sent Type\tComplex Sentence\tSimple Sentence\tIdioms\t"
      "Sentences With Ambiguity\n";
  out += report.system;
  for (SentenceCategory c : {SentenceCategory::kComplex, SentenceCategory::kSimple,
                             SentenceCategory::kIdiom, SentenceCategory::kAmbiguous}) {
    out += '\t';
    out += format_percent(report.category(c));
  }
  out += '\n';
  return out;
}

}  // namespace hmt
