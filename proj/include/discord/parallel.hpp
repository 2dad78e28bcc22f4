// Copyright 2026 The discord-kit Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <utility>
#include <vector>

namespace discord {

/// Execution policy for the sweep kernels. Every parallel kernel has a serial
/// path with identical per-index work, so results agree bit for bit.
enum class Exec { serial, parallel };

/// Thread cap: DISCORD_KIT_THREADS when set to a positive integer, otherwise
/// the OpenMP default.
int thread_limit();

/// Runs f(i) for i in [0, n). Work items must be independent. The first
/// exception thrown by any item is rethrown after the loop.
template <class F>
void for_each_index(Exec exec, std::size_t n, F&& f) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr first;
  std::mutex guard;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

template <class T, class F>
std::vector<T> map_indices(Exec exec, std::size_t n, F&& f) {
  std::vector<T> out(n);
  for_each_index(exec, n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace discord
