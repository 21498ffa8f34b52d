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

#ifndef CJWE_PARALLEL_HPP
#define CJWE_PARALLEL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>

namespace cjwe {

/// Process-wide execution settings. Defaults suit desk-scale runs.
struct Limits {
  std::uint64_t max_codewords = std::uint64_t{1} << 24;
  std::uint64_t max_permutations = 40320;  // 8!
};

Limits limits();
void set_limits(const Limits& l);

/// Number of worker threads used by the parallel kernels (>= 1).
unsigned threads();
void set_threads(unsigned n);

/// Splits [0, count) into contiguous chunks and calls body(chunk, begin, end)
/// on up to threads() workers. Chunk boundaries depend only on `count` and
/// `chunks`, never on the thread count, so per-chunk results merged in chunk
/// order are schedule independent.
void parallel_chunks(std::uint64_t count, std::size_t chunks,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body);

}  // namespace cjwe

#endif  // CJWE_PARALLEL_HPP
