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

#include "hmt/batch.h"

#include <exception>

#include <omp.h>

namespace hmt {
namespace {

BatchItem apply(const LineFunction& fn, const std::string& input) {
  BatchItem item;
  try {
    item.output = fn(input);
  } catch (const std::exception& e) {
    item.error = e.what();
  } catch (...) {
    item.error = "unknown error";
  }
  return item;
}

}  // namespace

std::vector<BatchItem> run_batch(const std::vector<std::string>& inputs,
                                 const LineFunction& fn, int threads) {
  if (threads <= 1) return run_batch_serial(inputs, fn);
  std::vector<BatchItem> out(inputs.size());
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = apply(fn, inputs[i]);
  }
  return out;
}

std::vector<BatchItem> run_batch_serial(const std::vector<std::string>& inputs,
                                        const LineFunction& fn) {
  std::vector<BatchItem> out;
  out.reserve(inputs.size());
  for (const std::string& in : inputs) out.push_back(apply(fn, in));
  return out;
}

}  // namespace hmt
