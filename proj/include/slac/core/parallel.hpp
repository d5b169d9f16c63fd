/*
Copyright 2026 The slac Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

     https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SLAC_CORE_PARALLEL_HPP
#define SLAC_CORE_PARALLEL_HPP

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "slac/core/types.hpp"

namespace slac {

/// Runs body(begin, end) over contiguous chunks of [0, count).
///
/// Each index is visited by exactly one worker, so callers that write only to
/// per-index slots get results independent of the worker count. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <typename Body>
void parallel_for(Index count, int workers, Body&& body) {
  if (count <= 0) return;
  const Index n_workers = std::clamp<Index>(workers, 1, count);
  if (n_workers == 1) {
    body(Index{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_workers));
  const Index chunk = (count + n_workers - 1) / n_workers;
  for (Index w = 0; w < n_workers; ++w) {
    const Index begin = w * chunk;
    const Index end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace slac

#endif  // SLAC_CORE_PARALLEL_HPP
