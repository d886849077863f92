// Copyright 2026 The lcert Authors
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

#include "lcert/hashing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "lcert/error.hpp"

namespace lcert {

namespace {

constexpr std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

std::optional<std::uint64_t> raw_family_size(std::uint64_t k, std::uint64_t l) {
  if (k < 1 || k > l) return std::nullopt;
  const long double kk = static_cast<long double>(k);
  const long double value = kk * std::exp(kk) * std::log2(static_cast<long double>(l));
  if (!(value < 9223372036854775808.0L)) return std::nullopt;
  const auto size = static_cast<std::uint64_t>(std::ceil(value));
  return std::max<std::uint64_t>(size, 1);
}

constexpr std::uint64_t kBlock = 1 << 14;

// First perfect seed in [lo, hi), or 0.
std::uint64_t scan(const HashFamily& family, std::span<const std::uint64_t> set, std::uint64_t lo,
                   std::uint64_t hi, std::vector<std::uint64_t>& stamp) {
  for (std::uint64_t seed = lo; seed < hi; ++seed) {
    bool ok = true;
    for (std::uint64_t x : set) {
      const std::uint64_t h = family(seed, x);
      if (stamp[h] == seed) {
        ok = false;
        break;
      }
      stamp[h] = seed;
    }
    if (ok) return seed;
  }
  return 0;
}

}  // namespace

std::uint64_t prf64(std::uint64_t seed, std::uint64_t x) {
  const std::uint64_t key = mix(seed * 0x9E3779B97F4A7C15ULL + 0x243F6A8885A308D3ULL);
  return mix(mix(x ^ key) + seed);
}

std::uint64_t family_size(std::uint64_t k, std::uint64_t l) {
  if (k < 1 || k > l) {
    throw InvalidArgument("hash family needs 1 <= k <= l (k=" + std::to_string(k) +
                          ", l=" + std::to_string(l) + ")");
  }
  auto size = raw_family_size(k, l);
  if (!size) throw CapacityError("hash family size overflows 2^63 for k=" + std::to_string(k));
  return *size;
}

unsigned seed_bit_length(std::uint64_t k, std::uint64_t l) { return ceil_log2(family_size(k, l)); }

std::uint64_t eval(std::uint64_t k, std::uint64_t l, std::uint64_t seed, std::uint64_t x) {
  const std::uint64_t size = family_size(k, l);
  if (seed < 1 || seed > size) throw InvalidArgument("seed outside 1.." + std::to_string(size));
  if (x < 1 || x > l) throw InvalidArgument("point outside 1.." + std::to_string(l));
  return 1 + prf64(seed, x) % k;
}

std::optional<HashFamily> HashFamily::make(std::uint64_t k, std::uint64_t l) {
  auto size = raw_family_size(k, l);
  if (!size) return std::nullopt;
  return HashFamily(k, l, *size);
}

std::optional<std::uint64_t> HashFamily::decode_seed(BitReader& reader) const {
  const std::uint64_t index = reader.take(seed_bits());
  if (index >= size_) return std::nullopt;
  return index + 1;
}

bool is_perfect(const HashFamily& family, std::uint64_t seed, std::span<const std::uint64_t> set) {
  std::vector<char> hit(family.k() + 1, 0);
  for (std::uint64_t x : set) {
    const std::uint64_t h = family(seed, x);
    if (hit[h]) return false;
    hit[h] = 1;
  }
  return true;
}

PerfectSeed find_perfect_seed(std::uint64_t k, std::uint64_t l, std::span<const std::uint64_t> set,
                              const SeedSearchOptions& options) {
  if (set.size() != k) throw InvalidArgument("perfect-hash set must have exactly k elements");
  if (k > options.max_k) {
    throw CapacityError("k=" + std::to_string(k) + " exceeds the perfect-hash cap of " +
                        std::to_string(options.max_k));
  }
  const std::uint64_t size = family_size(k, l);
  const HashFamily family = *HashFamily::make(k, l);
  {
    std::vector<std::uint64_t> sorted(set.begin(), set.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("perfect-hash set has repeated elements");
    }
    for (auto x : sorted) {
      if (!family.valid_point(x)) throw InvalidArgument("perfect-hash set element outside 1..l");
    }
  }

  const unsigned jobs = std::max(1u, options.jobs);
  std::uint64_t found = 0;
  if (jobs == 1) {
    std::vector<std::uint64_t> stamp(k + 1, 0);
    found = scan(family, set, 1, size + 1, stamp);
  } else {
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    const std::uint64_t blocks = (size + kBlock - 1) / kBlock;
    auto worker = [&] {
      std::vector<std::uint64_t> stamp(k + 1, 0);
      for (;;) {
        const std::uint64_t b = next_block.fetch_add(1);
        if (b >= blocks) return;
        const std::uint64_t lo = 1 + b * kBlock;
        if (lo > best.load()) return;
        const std::uint64_t hi = std::min(size + 1, lo + kBlock);
        if (std::uint64_t s = scan(family, set, lo, hi, stamp)) {
          std::uint64_t cur = best.load();
          while (s < cur && !best.compare_exchange_weak(cur, s)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (best.load() != std::numeric_limits<std::uint64_t>::max()) found = best.load();
  }
  if (found == 0) {
    throw CapacityError("no perfect seed among the " + std::to_string(size) +
                        " members of the family");
  }
  return PerfectSeed{found};
}

}  // namespace lcert
