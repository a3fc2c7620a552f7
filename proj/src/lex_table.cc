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

#include "hmt/lex_table.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "hmt/ngram_model.h"
#include "hmt/text.h"
#include "hmt/tokenizer.h"

namespace hmt {

std::optional<double> TranslationTable::prob(std::string_view source,
                                             std::string_view target) const {
  const Row* r = row(source);
  if (!r) return std::nullopt;
  auto it = r->find(target);
  return it == r->end() ? 0.0 : it->second;
}

const TranslationTable::Row* TranslationTable::row(std::string_view source) const {
  auto it = rows_.find(source);
  return it == rows_.end() ? nullptr : &it->second;
}

void TranslationTable::write(std::ostream& out) const {
  char buf[64];
  for (const auto& [source, r] : rows_) {
    for (const auto& [target, p] : r) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), p);
      out << source << '\t' << target << '\t' << std::string_view(buf, end - buf)
          << '\n';
    }
  }
}

TranslationTable TranslationTable::parse(std::istream& in) {
  TranslationTable table;
  for_each_table_line(in, [&](std::size_t line,
                              const std::vector<std::string_view>& f) {
    if (f.size() != 3) throw FormatError(line, "expected source<TAB>target<TAB>prob");
    double p = 0;
    auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), p);
    if (ec != std::errc() || ptr != f[2].data() + f[2].size() || p < 0 || p > 1) {
      throw FormatError(line, "bad probability '" + std::string(f[2]) + "'");
    }
    table.set(std::string(f[0]), std::string(f[1]), p);
  });
  return table;
}

TranslationTable TranslationTable::load(const std::filesystem::path& path) {
  return load_table(path, [](std::istream& in) { return parse(in); });
}

std::vector<Bitext> make_bitext(std::span<const ParallelPair> pairs) {
  std::vector<Bitext> corpus;
  corpus.reserve(pairs.size());
  for (const ParallelPair& p : pairs) {
    corpus.push_back({word_surfaces(tokenize(p.hindi)), english_tokens(p.english)});
  }
  return corpus;
}

namespace {

// Source words of a pair with the NULL word prepended.
std::vector<std::string_view> sources_with_null(const Bitext& b) {
  std::vector<std::string_view> f;
  f.reserve(b.source.size() + 1);
  f.push_back(TranslationTable::kNull);
  for (const auto& s : b.source) f.push_back(s);
  return f;
}

}  // namespace

TranslationTable train_lex(std::span<const Bitext> corpus, int iterations) {
  if (iterations < 1) throw std::invalid_argument("EM iterations must be >= 1");
  // Uniform start over co-occurring targets.
  std::map<std::string, std::set<std::string>, std::less<>> cooc;
  for (const Bitext& b : corpus) {
    if (b.target.empty()) continue;
    for (std::string_view f : sources_with_null(b)) {
      auto& targets = cooc[std::string(f)];
      targets.insert(b.target.begin(), b.target.end());
    }
  }
  TranslationTable table;
  for (const auto& [f, targets] : cooc) {
    const double p = 1.0 / static_cast<double>(targets.size());
    for (const auto& e : targets) table.set(f, e, p);
  }

  for (int it = 0; it < iterations; ++it) {
    std::map<std::string, std::map<std::string, double, std::less<>>, std::less<>>
        expected;
    for (const Bitext& b : corpus) {
      const std::vector<std::string_view> f = sources_with_null(b);
      for (const std::string& e : b.target) {
        double denom = 0;
        for (std::string_view s : f) denom += table.prob(s, e).value_or(0.0);
        if (denom <= 0) continue;
        for (std::string_view s : f) {
          expected[std::string(s)][e] += table.prob(s, e).value_or(0.0) / denom;
        }
      }
    }
    TranslationTable next;
    for (const auto& [f, row] : expected) {
      double total = 0;
      for (const auto& [e, c] : row) total += c;
      for (const auto& [e, c] : row) next.set(f, e, c / total);
    }
    table = std::move(next);
  }
  return table;
}

TranslationTable train_lex(std::span<const ParallelPair> pairs, int iterations) {
  const std::vector<Bitext> corpus = make_bitext(pairs);
  return train_lex(corpus, iterations);
}

double corpus_log_likelihood(const TranslationTable& table,
                             std::span<const Bitext> corpus) {
  double total = 0;
  for (const Bitext& b : corpus) {
    const std::vector<std::string_view> f = sources_with_null(b);
    for (const std::string& e : b.target) {
      double sum = 0;
      for (std::string_view s : f) sum += table.prob(s, e).value_or(0.0);
      total += std::log(sum / static_cast<double>(f.size()));
    }
  }
  return total;
}

}  // namespace hmt
