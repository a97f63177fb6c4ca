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

#include "minrep/bits.hpp"

#include <stdexcept>

namespace minrep {

BitVec BitVec::from_string(const std::string& bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1': " + bits);
    }
  }
  return v;
}

std::size_t BitVec::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

std::size_t BitVec::last_set() const {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) {
      return w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[w])));
    }
  }
  return size_;
}

BitVec BitVec::slice(std::size_t begin, std::size_t len) const {
  BitVec out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (get(begin + i)) out.set(i, true);
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

}  // namespace minrep
