// Copyright 2026 The minrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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
#include <functional>
#include <string>
#include <vector>

namespace minrep {

/// Fixed-length bit vector packed into 64-bit words.
///
/// Bits past size() in the last word are always zero, so word-level
/// popcount, equality and hashing need no masking.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  /// Parses a string of '0'/'1' characters, position 0 first.
  static BitVec from_string(const std::string& bits);

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool v) {
    const Word mask = Word{1} << (i % kWordBits);
    if (v) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  Word word(std::size_t w) const { return words_[w]; }
  Word& word(std::size_t w) { return words_[w]; }
  const std::vector<Word>& words() const { return words_; }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or size() when none is set.
  std::size_t first_set() const;
  /// Index of the highest set bit, or size() when none is set.
  std::size_t last_set() const;

  void swap_bits(std::size_t i, std::size_t j) {
    const bool a = get(i);
    set(i, get(j));
    set(j, a);
  }

  /// Copies bits [begin, begin+len) into a new vector.
  BitVec slice(std::size_t begin, std::size_t len) const;

  std::string to_string() const;

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Parity of popcount(a & b).
inline bool dot_parity(const BitVec& a, const BitVec& b) {
  BitVec::Word acc = 0;
  for (std::size_t w = 0; w < a.num_words(); ++w) acc ^= a.word(w) & b.word(w);
  return (std::popcount(acc) & 1) != 0;
}

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const {
    std::size_t h = std::hash<std::size_t>{}(v.size());
    for (BitVec::Word w : v.words()) {
      h ^= std::hash<BitVec::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace minrep
