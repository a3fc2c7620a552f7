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

// hmt: build a translation bundle, translate Hindi text, evaluate a test set.
//
// Exit codes: 0 success, 1 completed with warnings, 2 configuration or load
// error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hmt/batch.h"
#include "hmt/config.h"
#include "hmt/evaluator.h"
#include "hmt/pipeline.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitWarnings = 1;
constexpr int kExitLoadError = 2;

struct Flags {
  std::string config;
  std::string data_dir;
  std::string bundle_dir;
  bool trace = false;
  int lm_order = 0;
  double lm_k = 0;
  int em_iters = 0;
  int threads = 0;
  std::string format = "text";
};

struct Options {
  CLI::Option* data_dir = nullptr;
  CLI::Option* bundle_dir = nullptr;
  CLI::Option* lm_order = nullptr;
  CLI::Option* lm_k = nullptr;
  CLI::Option* em_iters = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* trace = nullptr;
};

void add_common(CLI::App& app, Flags& f, Options& o) {
  app.add_option("--config", f.config, "key = value configuration file");
  o.data_dir = app.add_option("--data-dir", f.data_dir, "directory of source files");
  o.bundle_dir = app.add_option("--bundle-dir", f.bundle_dir, "model bundle directory");
  o.trace = app.add_flag("--trace", f.trace, "print each pipeline stage");
  o.lm_order = app.add_option("--lm-order", f.lm_order, "n-gram order");
  o.lm_k = app.add_option("--lm-k", f.lm_k, "add-k smoothing constant");
  o.em_iters = app.add_option("--em-iters", f.em_iters, "lexical EM iterations");
  o.threads = app.add_option("--threads", f.threads, "worker threads");
  app.add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

// Config file first, then flags on top.
hmt::PipelineConfig resolve_config(const Flags& f, const Options& o) {
  hmt::PipelineConfig config;
  if (!f.config.empty()) config = hmt::load_config(f.config);
  if (o.data_dir->count()) config.data_dir = f.data_dir;
  if (o.bundle_dir->count()) config.bundle_dir = f.bundle_dir;
  if (o.lm_order->count()) config.lm_order = f.lm_order;
  if (o.lm_k->count()) config.lm_k = f.lm_k;
  if (o.em_iters->count()) config.em_iters = f.em_iters;
  if (o.threads->count()) config.threads = f.threads;
  if (o.trace->count()) config.trace = true;
  config.validate();
  return config;
}

nlohmann::json result_json(const hmt::TranslationResult& r) {
  nlohmann::json j;
  j["schema_version"] = hmt::kSchemaVersion;
  j["source"] = r.source;
  j["output"] = r.output;
  j["rule"] = r.rule_id;
  j["segments"] = nlohmann::json::array();
  for (const hmt::Segment& seg : r.segments) j["segments"].push_back(seg.surface());
  j["warnings"] = r.warnings;
  j["trace"] = nlohmann::json::array();
  for (const auto& [stage, value] : r.trace) {
    j["trace"].push_back({{"stage", stage}, {"value", value}});
  }
  return j;
}

std::string result_text(const hmt::TranslationResult& r, bool trace) {
  if (!trace) return r.output;
  std::string out = "Input: " + r.source + "\n";
  for (const auto& [stage, value] : r.trace) out += stage + ": " + value + "\n";
  out += "Output: " + r.output;
  return out;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

int run_build(const hmt::PipelineConfig& config) {
  hmt::RejectReport rejects;
  const hmt::Bundle bundle = hmt::Bundle::build(config, &rejects);
  bundle.save(config.bundle_dir);
  std::size_t total = 0;
  for (const auto& [path, list] : rejects) {
    const auto report = hmt::write_rejects_report(path, list);
    total += list.size();
    if (!list.empty()) {
      std::cerr << "warning: " << list.size() << " rejected line(s) in "
                << path.string() << ", see " << report.string() << '\n';
    }
  }
  std::cout << "bundle written to " << config.bundle_dir.string() << ": "
            << bundle.dictionary().size() << " dictionary entries, "
            << bundle.examples().size() << " examples, "
            << bundle.grammar().rules().size() << " grammar rules, "
            << bundle.lex().size() << " lexical rows\n";
  return total > 0 ? kExitWarnings : kExitOk;
}

int run_translate(const hmt::PipelineConfig& config, std::vector<std::string> lines,
                  bool json, bool pretty) {
  const hmt::Bundle bundle = hmt::Bundle::load(config.bundle_dir);
  std::atomic<bool> warned = false;
  const bool trace = config.trace;
  const hmt::LineFunction fn = [&](const std::string& line) {
    const hmt::TranslationResult r = bundle.translate(line, trace);
    if (!r.warnings.empty()) warned = true;
    if (json) return result_json(r).dump(pretty ? 2 : -1);
    return result_text(r, trace);
  };
  const std::vector<hmt::BatchItem> items = hmt::run_batch(lines, fn, config.threads);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].error) {
      std::cerr << "error: line " << i + 1 << ": " << *items[i].error << '\n';
      warned = true;
      std::cout << '\n';
      continue;
    }
    std::cout << items[i].output << '\n';
    if (trace && !json && i + 1 < items.size()) std::cout << '\n';
  }
  return warned ? kExitWarnings : kExitOk;
}

int run_evaluate(const hmt::PipelineConfig& config, const std::string& testset,
                 const std::string& report_prefix, bool json) {
  const hmt::Bundle bundle = hmt::Bundle::load(config.bundle_dir);
  const hmt::LoadResult<hmt::TestRecord> tests = hmt::load_testset(testset);
  for (const hmt::Reject& r : tests.rejects) {
    std::cerr << "warning: " << testset << ": line " << r.line << ": " << r.reason
              << " (skipped)\n";
  }
  const hmt::EvalReport report = hmt::evaluate_corpus(
      tests.entries,
      [&](const std::string& s) { return bundle.translate(s).output; },
      config.threads);
  const nlohmann::json j = hmt::report_to_json(report);
  const std::string table = hmt::report_table(report);
  if (!report_prefix.empty()) {
    std::ofstream(report_prefix + ".json") << j.dump(2) << '\n';
    std::ofstream(report_prefix + ".txt") << table;
  }
  if (json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << table << "Overall\t" << hmt::format_percent(report.overall) << '\n';
  }
  return tests.rejects.empty() ? kExitOk : kExitWarnings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid Hindi to English machine translation"};
  app.require_subcommand(1);
  Flags flags;
  Options opts;

  CLI::App* build = app.add_subcommand("build", "load sources, train models, write a bundle");
  add_common(*build, flags, opts);

  std::vector<std::string> sentences;
  std::string input;
  CLI::App* translate = app.add_subcommand(
      "translate", "translate sentences given as arguments, --input file or stdin");
  Flags tflags;
  Options topts;
  add_common(*translate, tflags, topts);
  translate->add_option("sentence", sentences, "sentences to translate");
  translate->add_option("--input", input, "file with one sentence per line");

  CLI::App* inspect = app.add_subcommand("inspect", "translate with a full stage trace");
  Flags iflags;
  Options iopts;
  std::vector<std::string> inspect_sentences;
  add_common(*inspect, iflags, iopts);
  inspect->add_option("sentence", inspect_sentences, "sentences to inspect")->required();

  CLI::App* evaluate = app.add_subcommand("evaluate", "score a test set");
  Flags eflags;
  Options eopts;
  std::string testset;
  std::string report_prefix = "eval_report";
  add_common(*evaluate, eflags, eopts);
  evaluate->add_option("testset", testset, "hindi<TAB>reference<TAB>category file")
      ->required();
  evaluate->add_option("--report", report_prefix,
                       "write <prefix>.json and <prefix>.txt (empty to skip)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return run_build(resolve_config(flags, opts));
    if (*translate) {
      const hmt::PipelineConfig config = resolve_config(tflags, topts);
      std::vector<std::string> lines = sentences;
      if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw hmt::LoadError(input, "cannot open file");
        lines = read_lines(in);
      } else if (lines.empty()) {
        lines = read_lines(std::cin);
      }
      return run_translate(config, std::move(lines), tflags.format == "json", false);
    }
    if (*inspect) {
      hmt::PipelineConfig config = resolve_config(iflags, iopts);
      config.trace = true;
      return run_translate(config, inspect_sentences, iflags.format == "json", true);
    }
    if (*evaluate) {
      return run_evaluate(resolve_config(eflags, eopts), testset, report_prefix,
                          eflags.format == "json");
    }
  } catch (const hmt::LoadError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLoadError;
  } catch (const hmt::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLoadError;
  }
  return kExitOk;
}
