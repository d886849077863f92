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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lcert/error.hpp"

namespace lcert {
namespace {

struct SizeCase {
  std::uint64_t k;
  std::uint64_t l;
  std::uint64_t size;
  unsigned bits;
};

// Computed with mpmath at 50 digits.
const SizeCase kSizes[] = {
    {1, 2, 3, 2},
    {2, 16, 60, 6},
    {8, 1024, 238477, 18},
    {1, 10, 10, 4},
    {3, 10, 201, 8},
    {8, 256, 190782, 18},
    {4, 100, 1451, 11},
    {3, 3, 96, 7},
    {2, 3, 24, 5},
    {1, 3, 5, 3},
    {16, std::uint64_t{1} << 32, 4549688587ULL, 33},
    {16, 4096, 1706133220ULL, 31},
    {8, 512, 214629, 18},
    {12, 1728, 21004914, 25},
    {20, 8000, 125810945323ULL, 37},
    {12, std::uint64_t{1} << 32, 62497840, 26},
    {8, std::uint64_t{1} << 32, 763126, 20},
    {2, 100, 99, 7},
    {3, 100, 401, 9},
};

TEST(FamilySize, FrozenValues) {
  for (const auto& c : kSizes) {
    EXPECT_EQ(family_size(c.k, c.l), c.size) << c.k << "," << c.l;
    EXPECT_EQ(seed_bit_length(c.k, c.l), c.bits) << c.k << "," << c.l;
    auto fam = HashFamily::make(c.k, c.l);
    ASSERT_TRUE(fam.has_value());
    EXPECT_EQ(fam->size(), c.size);
    EXPECT_EQ(fam->seed_bits(), c.bits);
  }
}

TEST(FamilySize, DegenerateAndInvalid) {
  // log2(1) = 0 still yields one member.
  EXPECT_EQ(family_size(1, 1), 1u);
  EXPECT_EQ(seed_bit_length(1, 1), 0u);
  EXPECT_THROW(family_size(0, 5), InvalidArgument);
  EXPECT_THROW(family_size(6, 5), InvalidArgument);
  EXPECT_THROW(family_size(60, 1000), CapacityError);
  EXPECT_FALSE(HashFamily::make(0, 5).has_value());
  EXPECT_FALSE(HashFamily::make(6, 5).has_value());
  EXPECT_FALSE(HashFamily::make(60, 1000).has_value());
}

TEST(Prf64, Vectors) {
  struct V {
    std::uint64_t seed, x, out;
  };
  const V vectors[] = {
      {1, 1, 0x4a6af215dbc0bfd9ULL},
      {1, 2, 0xf1f2dca7f98fed0eULL},
      {2, 1, 0xdd050f3c94f2dc00ULL},
      {7, 42, 0x329da3f43a13537cULL},
      {60, 16, 0x40dc86e931f52d4cULL},
      {238477, 1024, 0xfc4ceb5a35dc7215ULL},
      {1000003, 123456789, 0x51f97c0252f2c845ULL},
      {4294967296ULL, 4294967296ULL, 0xbfb0afe9f558d369ULL},
      {9223372036854775808ULL, 5, 0xdba66035ff1d8e1bULL},
      {18446744073709551615ULL, 18446744073709551615ULL, 0xad200e6c7df16ff3ULL},
  };
  for (const auto& v : vectors) EXPECT_EQ(prf64(v.seed, v.x), v.out) << v.seed << "," << v.x;
}

TEST(Eval, RangeAndValidation) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    for (std::uint64_t x = 1; x <= 16; ++x) {
      const auto h = eval(2, 16, seed, x);
      EXPECT_GE(h, 1u);
      EXPECT_LE(h, 2u);
      EXPECT_EQ(h, 1 + prf64(seed, x) % 2);
    }
  }
  EXPECT_THROW(eval(2, 16, 0, 1), InvalidArgument);
  EXPECT_THROW(eval(2, 16, 61, 1), InvalidArgument);
  EXPECT_THROW(eval(2, 16, 1, 0), InvalidArgument);
  EXPECT_THROW(eval(2, 16, 1, 17), InvalidArgument);
}

TEST(HashFamily, SeedEncoding) {
  auto fam = *HashFamily::make(2, 16);  // 60 members, 6 bits
  for (std::uint64_t seed : {1u, 2u, 33u, 60u}) {
    BitString b;
    fam.encode_seed(seed, b);
    ASSERT_EQ(b.size(), 6u);
    BitReader rd(b);
    EXPECT_EQ(fam.decode_seed(rd), seed);
  }
  BitString first;
  fam.encode_seed(1, first);
  EXPECT_EQ(first.to_string(), "000000");
  for (std::uint64_t raw = 60; raw < 64; ++raw) {
    BitString b;
    b.append(raw, 6);
    BitReader rd(b);
    EXPECT_FALSE(fam.decode_seed(rd).has_value()) << raw;
  }
}

std::uint64_t naive_first_perfect(std::uint64_t k, std::uint64_t l,
                                  const std::vector<std::uint64_t>& set) {
  const std::uint64_t size = family_size(k, l);
  for (std::uint64_t seed = 1; seed <= size; ++seed) {
    std::set<std::uint64_t> images;
    for (auto x : set) images.insert(eval(k, l, seed, x));
    if (images.size() == set.size()) return seed;
  }
  return 0;
}

std::vector<std::uint64_t> random_subset(std::uint64_t k, std::uint64_t l, std::mt19937_64& rng) {
  std::set<std::uint64_t> s;
  while (s.size() < k) s.insert(1 + rng() % l);
  std::vector<std::uint64_t> v(s.begin(), s.end());
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

TEST(FindPerfectSeed, SmallestSeedMatchesNaiveScan) {
  std::mt19937_64 rng(5);
  const std::pair<std::uint64_t, std::uint64_t> pairs[] = {{1, 3}, {2, 3}, {3, 10}, {4, 100}, {6, 50}};
  for (auto [k, l] : pairs) {
    for (int trial = 0; trial < 40; ++trial) {
      auto set = random_subset(k, l, rng);
      const auto expected = naive_first_perfect(k, l, set);
      ASSERT_NE(expected, 0u);
      EXPECT_EQ(find_perfect_seed(k, l, set).seed, expected);
      EXPECT_TRUE(is_perfect(*HashFamily::make(k, l), expected, set));
    }
  }
}

TEST(FindPerfectSeed, ThreadCountDoesNotChangeTheResult) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    auto set = random_subset(9, 1000, rng);
    const auto one = find_perfect_seed(9, 1000, set).seed;
    EXPECT_EQ(find_perfect_seed(9, 1000, set, {kDefaultMaxPerfectK, 4}).seed, one);
  }
}

TEST(FindPerfectSeed, Validation) {
  std::vector<std::uint64_t> dup{3, 3};
  std::vector<std::uint64_t> out_of_range{1, 11};
  std::vector<std::uint64_t> short_set{1};
  EXPECT_THROW(find_perfect_seed(2, 10, dup), InvalidArgument);
  EXPECT_THROW(find_perfect_seed(2, 10, out_of_range), InvalidArgument);
  EXPECT_THROW(find_perfect_seed(2, 10, short_set), InvalidArgument);
  std::vector<std::uint64_t> big(21);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = i + 1;
  EXPECT_THROW(find_perfect_seed(21, 100, big), CapacityError);
  std::vector<std::uint64_t> three{1, 2, 3};
  EXPECT_THROW(find_perfect_seed(3, 10, three, {2, 1}), CapacityError);
}

TEST(IsPerfect, CollisionDetected) {
  auto fam = *HashFamily::make(2, 16);
  std::vector<std::uint64_t> set{1, 2};
  for (std::uint64_t seed = 1; seed <= fam.size(); ++seed) {
    EXPECT_EQ(is_perfect(fam, seed, set), fam(seed, 1) != fam(seed, 2));
  }
}

}  // namespace
}  // namespace lcert
