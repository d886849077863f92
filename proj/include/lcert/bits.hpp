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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lcert {

// ceil(log2(x)) for x >= 1; 0 for x <= 1.
constexpr unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

// Number of bits needed to write any value in 0..max, i.e. ceil(log2(max+1)).
constexpr unsigned width_for(std::uint64_t max) {
  return static_cast<unsigned>(std::bit_width(max));
}

// A finite bit string. Bit 0 is the first bit written; multi-bit fields are
// written most-significant bit first.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size) : size_(size), words_((size + 63) / 64) {}

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  void push_back(bool bit);
  // Appends the low `width` bits of value, most significant first.
  // width <= 64; value must fit.
  void append(std::uint64_t value, unsigned width);
  void append(const BitString& other);

  // Reads `width` bits (<= 64) starting at pos, most significant first.
  std::uint64_t read(std::size_t pos, unsigned width) const;
  BitString slice(std::size_t pos, std::size_t len) const;

  std::size_t popcount() const;

  // Hex encoding, four bits per digit, first bit is the high bit of the
  // first digit. The last digit is zero-padded. Empty strings encode as "-".
  std::string to_hex() const;
  // Inverse of to_hex. Throws ParseError (line 0) on bad digits, a digit
  // count that disagrees with bit_length, or non-zero pad bits.
  static BitString from_hex(std::string_view hex, std::size_t bit_length);

  // '0'/'1' text, for diagnostics and tests.
  std::string to_string() const;
  static BitString from_string(std::string_view bits);

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Cursor over a BitString used by certificate decoders.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(&bits) {}

  std::size_t remaining() const { return bits_->size() - pos_; }
  std::uint64_t take(unsigned width) {
    std::uint64_t v = bits_->read(pos_, width);
    pos_ += width;
    return v;
  }
  BitString take_bits(std::size_t len) {
    BitString s = bits_->slice(pos_, len);
    pos_ += len;
    return s;
  }

 private:
  const BitString* bits_;
  std::size_t pos_ = 0;
};

}  // namespace lcert
