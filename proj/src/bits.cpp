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

#include "lcert/bits.hpp"

#include <cassert>

#include "lcert/error.hpp"

namespace lcert {

void BitString::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

void BitString::push_back(bool bit) {
  if (size_ % 64 == 0) words_.push_back(0);
  ++size_;
  set(size_ - 1, bit);
}

void BitString::append(std::uint64_t value, unsigned width) {
  assert(width <= 64);
  assert(width == 64 || (value >> width) == 0);
  for (unsigned b = width; b-- > 0;) push_back((value >> b) & 1u);
}

void BitString::append(const BitString& other) {
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other.get(i));
}

std::uint64_t BitString::read(std::size_t pos, unsigned width) const {
  assert(width <= 64 && pos + width <= size_);
  std::uint64_t v = 0;
  for (unsigned b = 0; b < width; ++b) v = (v << 1) | (get(pos + b) ? 1u : 0u);
  return v;
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  assert(pos + len <= size_);
  BitString out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (get(pos + i)) out.set(i, true);
  }
  return out;
}

std::size_t BitString::popcount() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::string BitString::to_hex() const {
  if (size_ == 0) return "-";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((size_ + 3) / 4);
  for (std::size_t i = 0; i < size_; i += 4) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      nibble <<= 1;
      if (i + b < size_ && get(i + b)) nibble |= 1;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bit_length) {
  if (hex == "-") {
    if (bit_length != 0) throw ParseError("empty hex for non-empty certificate", 0);
    return {};
  }
  if (hex.size() != (bit_length + 3) / 4) {
    throw ParseError("hex digit count does not match bit length " +
                         std::to_string(bit_length),
                     0);
  }
  BitString out(bit_length);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const char c = hex[d];
    unsigned nibble;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw ParseError(std::string("bad hex digit '") + c + "'", 0);
    }
    for (std::size_t b = 0; b < 4; ++b) {
      const bool bit = (nibble >> (3 - b)) & 1u;
      const std::size_t i = d * 4 + b;
      if (i < bit_length) {
        if (bit) out.set(i, true);
      } else if (bit) {
        throw ParseError("non-zero pad bits in last hex digit", 0);
      }
    }
  }
  return out;
}

std::string BitString::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitString BitString::from_string(std::string_view bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i, true);
    } else if (bits[i] != '0') {
      throw ParseError("bit strings contain only 0 and 1", 0);
    }
  }
  return out;
}

}  // namespace lcert
