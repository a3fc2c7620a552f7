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

#ifndef HMT_BATCH_H_
#define HMT_BATCH_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hmt {

struct BatchItem {
  std::string output;
  std::optional<std::string> error;  // set iff the function threw
  friend bool operator==(const BatchItem&, const BatchItem&) = default;
};

using LineFunction = std::function<std::string(const std::string&)>;

// Applies `fn` to every input; item i always holds the result for input i.
// `fn` must be safe to call concurrently.
std::vector<BatchItem> run_batch(const std::vector<std::string>& inputs,
                                 const LineFunction& fn, int threads);

// Single-threaded reference for run_batch.
std::vector<BatchItem> run_batch_serial(const std::vector<std::string>& inputs,
                                        const LineFunction& fn);

}  // namespace hmt

#endif  // HMT_BATCH_H_
