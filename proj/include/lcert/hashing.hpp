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

// A seeded family of functions [l] -> [k] with ceil(k * e^k * log2 l)
// members. Member `seed` maps x to 1 + (prf64(seed, x) mod k); see
// docs/prf64.md for the bit-exact definition and test vectors.
//
// The family is not proven (k, l)-perfect. find_perfect_seed searches it
// linearly and reports exhaustion instead of growing the family, so encoded
// seeds always take exactly ceil(log2 |family|) bits.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "lcert/bits.hpp"

namespace lcert {

inline constexpr std::uint64_t kDefaultMaxPerfectK = 20;

std::uint64_t prf64(std::uint64_t seed, std::uint64_t x);

// ceil(k * e^k * log2 l), at least 1. Throws InvalidArgument unless
// 1 <= k <= l, CapacityError if the result is 2^63 or more.
std::uint64_t family_size(std::uint64_t k, std::uint64_t l);

// ceil(log2 family_size(k, l)).
unsigned seed_bit_length(std::uint64_t k, std::uint64_t l);

// Member `seed` of the family evaluated at x. Throws InvalidArgument unless
// seed is in 1..family_size(k, l) and x in 1..l.
std::uint64_t eval(std::uint64_t k, std::uint64_t l, std::uint64_t seed, std::uint64_t x);

// Non-throwing handle for verifiers, which must reject rather than fail on
// whatever a certificate claims.
class HashFamily {
 public:
  // nullopt when (k, l) does not define a family or its size overflows.
  static std::optional<HashFamily> make(std::uint64_t k, std::uint64_t l);

  std::uint64_t k() const { return k_; }
  std::uint64_t l() const { return l_; }
  std::uint64_t size() const { return size_; }
  unsigned seed_bits() const { return ceil_log2(size_); }

  bool valid_seed(std::uint64_t seed) const { return seed >= 1 && seed <= size_; }
  bool valid_point(std::uint64_t x) const { return x >= 1 && x <= l_; }
  // Preconditions: valid_seed(seed) and valid_point(x).
  std::uint64_t operator()(std::uint64_t seed, std::uint64_t x) const {
    return 1 + prf64(seed, x) % k_;
  }

  // Seeds are written as seed - 1 in seed_bits() bits.
  void encode_seed(std::uint64_t seed, BitString& out) const { out.append(seed - 1, seed_bits()); }
  // nullopt if the decoded index is not a member.
  std::optional<std::uint64_t> decode_seed(BitReader& reader) const;

 private:
  HashFamily(std::uint64_t k, std::uint64_t l, std::uint64_t size) : k_(k), l_(l), size_(size) {}
  std::uint64_t k_;
  std::uint64_t l_;
  std::uint64_t size_;
};

struct PerfectSeed {
  std::uint64_t seed = 0;
};

struct SeedSearchOptions {
  std::uint64_t max_k = kDefaultMaxPerfectK;
  unsigned jobs = 1;
};

// Smallest seed in 1..family_size(k, l) injective on `set`. Throws
// InvalidArgument unless `set` holds k distinct points of 1..l, and
// CapacityError if k exceeds options.max_k or no member of the family is
// perfect for the set.
PerfectSeed find_perfect_seed(std::uint64_t k, std::uint64_t l, std::span<const std::uint64_t> set,
                              const SeedSearchOptions& options = {});

bool is_perfect(const HashFamily& family, std::uint64_t seed, std::span<const std::uint64_t> set);

}  // namespace lcert
