/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "seqgroves/value.hpp"

namespace seqgroves {

inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > (std::uint64_t{1} << 50) / base) {
      throw std::invalid_argument("enumeration space too large");
    }
    out *= base;
  }
  return out;
}

/// index-th tuple of grid^length in lexicographic order (position 1 is the
/// most significant digit).
inline std::vector<Value> nth_tuple(std::span<const Value> grid, int length, std::uint64_t index) {
  std::vector<Value> out(static_cast<std::size_t>(length));
  const std::uint64_t g = grid.size();
  for (int pos = length - 1; pos >= 0; --pos) {
    out[static_cast<std::size_t>(pos)] = grid[static_cast<std::size_t>(index % g)];
    index /= g;
  }
  return out;
}

/// Scans probe(0..count-1) exhaustively and returns the hit with the smallest
/// index, if any. Every index is visited regardless of hits, so side counters
/// accumulated by the probe are partition-independent, and so is the result.
/// The probe must be a pure function of the index (plus atomic side effects).
template <typename W, typename Fn>
std::optional<std::pair<std::uint64_t, W>> sweep_first(std::uint64_t count, int jobs, Fn&& probe) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count < 256) {
    std::optional<std::pair<std::uint64_t, W>> best;
    for (std::uint64_t i = 0; i < count; ++i) {
      if (best) {
        probe(i);  // keep side counters exact
        continue;
      }
      if (std::optional<W> hit = probe(i)) best.emplace(i, std::move(*hit));
    }
    return best;
  }

  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  std::optional<std::pair<std::uint64_t, W>> best;
  const std::uint64_t chunk = 256;
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t start = next.fetch_add(chunk);
      if (start >= count) return;
      const std::uint64_t stop = std::min(count, start + chunk);
      for (std::uint64_t i = start; i < stop; ++i) {
        if (std::optional<W> hit = probe(i)) {
          std::lock_guard<std::mutex> lock(mu);
          if (!best || i < best->first) best.emplace(i, std::move(*hit));
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return best;
}

}  // namespace seqgroves
