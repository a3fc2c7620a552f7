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

#include "hmt/ngram_model.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "hmt/corpus.h"
#include "hmt/text.h"
#include "hmt/tokenizer.h"

namespace hmt {

namespace {

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

double parse_double(std::string_view text, std::size_t line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError(line, "bad number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

NGramModel::NGramModel(int order, double k) : order_(order), k_(k) {
  if (order < 1) throw std::invalid_argument("n-gram order must be >= 1");
  if (!(k > 0)) throw std::invalid_argument("smoothing k must be positive");
}

std::string_view NGramModel::map_token(std::string_view token) const {
  return vocab_.count(token) ? token : kUnk;
}

std::string NGramModel::context_key(std::span<const std::string> history) const {
  const std::size_t need = static_cast<std::size_t>(order_ - 1);
  std::vector<std::string_view> ctx;
  ctx.reserve(need);
  const std::size_t have = std::min(need, history.size());
  for (std::size_t i = have; i < need; ++i) ctx.push_back(kBos);
  for (std::size_t i = history.size() - have; i < history.size(); ++i) {
    ctx.push_back(map_token(history[i]));
  }
  std::string key;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) key += ' ';
    key += ctx[i];
  }
  return key;
}

void NGramModel::add_sentence(std::span<const std::string> tokens) {
  std::vector<std::string> padded(static_cast<std::size_t>(order_ - 1),
                                  std::string(kBos));
  padded.insert(padded.end(), tokens.begin(), tokens.end());
  padded.emplace_back(kEos);
  for (const std::string& t : padded) vocab_.insert(t);
  const std::size_t start = static_cast<std::size_t>(order_ - 1);
  for (std::size_t i = start; i < padded.size(); ++i) {
    std::string key;
    for (std::size_t j = i - start; j < i; ++j) {
      if (j > i - start) key += ' ';
      key += padded[j];
    }
    ++counts_[key][padded[i]];
    ++context_totals_[key];
  }
}

std::uint64_t NGramModel::count(std::span<const std::string> context,
                                std::string_view token) const {
  auto it = counts_.find(context_key(context));
  if (it == counts_.end()) return 0;
  auto jt = it->second.find(map_token(token));
  return jt == it->second.end() ? 0 : jt->second;
}

std::uint64_t NGramModel::context_total(std::span<const std::string> context) const {
  auto it = context_totals_.find(context_key(context));
  return it == context_totals_.end() ? 0 : it->second;
}

double NGramModel::prob(std::span<const std::string> history,
                        std::string_view token) const {
  const double numerator = static_cast<double>(count(history, token)) + k_;
  const double denominator =
      static_cast<double>(context_total(history)) +
      k_ * static_cast<double>(effective_vocab_size());
  return numerator / denominator;
}

double NGramModel::logprob(std::span<const std::string> history,
                           std::string_view token) const {
  return std::log(prob(history, token));
}

double NGramModel::sentence_logprob(std::span<const std::string> tokens) const {
  std::vector<std::string> seq(tokens.begin(), tokens.end());
  seq.emplace_back(kEos);
  double total = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    total += logprob(std::span(seq).first(i), seq[i]);
  }
  return total;
}

double NGramModel::continuation_logprob(
    std::span<const std::string> left_context,
    std::span<const std::string> continuation) const {
  std::vector<std::string> history(left_context.begin(), left_context.end());
  double total = 0;
  for (const std::string& t : continuation) {
    total += logprob(history, t);
    history.push_back(t);
  }
  return total;
}

void NGramModel::write(std::ostream& out) const {
  out << order_ << '\t' << format_double(k_) << '\n';
  for (const auto& [context, tokens] : counts_) {
    for (const auto& [token, c] : tokens) {
      out << context << '\t' << token << '\t' << c << '\n';
    }
  }
}

NGramModel NGramModel::parse(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError(1, "missing order<TAB>k header");
  std::vector<std::string_view> header = split(line, '\t');
  if (header.size() != 2) throw FormatError(1, "expected order<TAB>k header");
  NGramModel model(static_cast<int>(parse_double(header[0], 1)),
                   parse_double(header[1], 1));
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string_view> f = split(line, '\t');
    if (f.size() != 3) throw FormatError(line_number, "expected context<TAB>token<TAB>count");
    const auto c = static_cast<std::uint64_t>(parse_double(f[2], line_number));
    std::string context(f[0]);
    model.counts_[context][std::string(f[1])] += c;
    model.context_totals_[context] += c;
    model.vocab_.emplace(f[1]);
    for (const std::string& t : split_words(context)) model.vocab_.insert(t);
  }
  return model;
}

NGramModel NGramModel::load(const std::filesystem::path& path) {
  return load_table(path, [](std::istream& in) { return parse(in); });
}

NGramModel train_lm(std::span<const std::vector<std::string>> sentences,
                    int order, double k) {
  NGramModel model(order, k);
  for (const auto& s : sentences) model.add_sentence(s);
  return model;
}

double lm_logprob(const NGramModel& lm, std::span<const std::string> tokens) {
  return lm.sentence_logprob(tokens);
}

std::vector<std::string> english_tokens(std::string_view sentence) {
  std::vector<std::string> words = word_surfaces(tokenize(sentence));
  for (std::string& w : words) w = ascii_lower(w);
  return words;
}

}  // namespace hmt
