// Copyright 2026 The cjwe Authors.
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

#include "cjwe/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cjwe {

namespace {

std::atomic<unsigned> g_threads{1};
std::mutex g_limits_mutex;
Limits g_limits;

}  // namespace

Limits limits() {
  std::lock_guard lock(g_limits_mutex);
  return g_limits;
}

void set_limits(const Limits& l) {
  std::lock_guard lock(g_limits_mutex);
  g_limits = l;
}

unsigned threads() { return g_threads.load(); }

void set_threads(unsigned n) { g_threads.store(std::max(1u, n)); }

void parallel_chunks(std::uint64_t count, std::size_t chunks,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body) {
  if (count == 0) return;
  chunks = static_cast<std::size_t>(std::clamp<std::uint64_t>(chunks, 1, count));
  auto bounds = [&](std::size_t c) { return count * c / chunks; };

  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads(), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c, bounds(c), bounds(c + 1));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        body(c, bounds(c), bounds(c + 1));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cjwe
