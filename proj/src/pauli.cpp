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

#include "minrep/pauli.hpp"

#include <bit>

#include "minrep/error.hpp"

namespace minrep {

namespace {

void check_same_n(const PauliTerm& p, const PauliTerm& q) {
  if (p.num_qubits() != q.num_qubits()) {
    fail(ErrorKind::Input, "qubit count mismatch: " + std::to_string(p.num_qubits()) + " vs " +
                               std::to_string(q.num_qubits()));
  }
}

}  // namespace

PauliTerm::PauliTerm(BitVec x, BitVec z, int sign, double coeff)
    : x_(std::move(x)), z_(std::move(z)), coeff_(coeff) {
  if (x_.size() != z_.size()) fail(ErrorKind::Internal, "x and z parts differ in length");
  set_sign(sign);
}

PauliTerm PauliTerm::single(std::size_t n, std::size_t qubit, char letter) {
  PauliTerm p(n);
  p.set_letter(qubit, letter);
  return p;
}

void PauliTerm::set_sign(int s) {
  if (s != 1 && s != -1) fail(ErrorKind::Internal, "Pauli sign must be +1 or -1");
  sign_ = s;
}

char PauliTerm::letter(std::size_t q) const {
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[(x_.get(q) ? 1 : 0) | (z_.get(q) ? 2 : 0)];
}

void PauliTerm::set_letter(std::size_t q, char letter) {
  switch (letter) {
    case 'I': x_.set(q, false); z_.set(q, false); break;
    case 'X': x_.set(q, true);  z_.set(q, false); break;
    case 'Y': x_.set(q, true);  z_.set(q, true);  break;
    case 'Z': x_.set(q, false); z_.set(q, true);  break;
    default:
      fail(ErrorKind::Input, std::string("invalid Pauli letter '") + letter + "'");
  }
}

std::string PauliTerm::letters() const {
  std::string s(num_qubits(), 'I');
  for (std::size_t q = 0; q < num_qubits(); ++q) s[q] = letter(q);
  return s;
}

PauliTerm parse_pauli(std::string_view text, std::size_t n) {
  int sign = 1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  if (text.size() != n) {
    fail(ErrorKind::Input, "Pauli string '" + std::string(text) + "' has length " +
                               std::to_string(text.size()) + ", expected " + std::to_string(n));
  }
  PauliTerm p(n);
  for (std::size_t q = 0; q < n; ++q) {
    const char c = text[q];
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      fail(ErrorKind::Input, std::string("invalid character '") + c + "' in Pauli string");
    }
    p.set_letter(q, c);
  }
  p.set_sign(sign);
  return p;
}

PauliTerm parse_pauli(std::string_view text) {
  std::size_t n = text.size();
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) --n;
  return parse_pauli(text, n);
}

std::string format_pauli(const PauliTerm& p) {
  return (p.sign() < 0 ? "-" : "") + p.letters();
}

int symplectic_product(const PauliTerm& p, const PauliTerm& q) {
  check_same_n(p, q);
  BitVec::Word acc = 0;
  for (std::size_t w = 0; w < p.x().num_words(); ++w) {
    acc ^= (p.x().word(w) & q.z().word(w)) ^ (p.z().word(w) & q.x().word(w));
  }
  return std::popcount(acc) & 1;
}

PauliTerm multiply(const PauliTerm& p, const PauliTerm& q) {
  check_same_n(p, q);
  // Single-qubit products sigma_a sigma_b = i^g sigma_{a^b}; count g = +1
  // and g = -1 positions word by word.
  int exponent = 0;
  for (std::size_t w = 0; w < p.x().num_words(); ++w) {
    const auto x1 = p.x().word(w), z1 = p.z().word(w);
    const auto x2 = q.x().word(w), z2 = q.z().word(w);
    const auto plus = (x1 & z1 & ~x2 & z2) | (x1 & ~z1 & x2 & z2) | (~x1 & z1 & x2 & ~z2);
    const auto minus = (x1 & z1 & x2 & ~z2) | (x1 & ~z1 & ~x2 & z2) | (~x1 & z1 & x2 & z2);
    exponent += std::popcount(plus) - std::popcount(minus);
  }
  exponent = ((exponent % 4) + 4) % 4;
  if (exponent % 2 != 0) {
    fail(ErrorKind::Input, "product of anticommuting Pauli terms is not Hermitian");
  }
  int sign = p.sign() * q.sign() * (exponent == 2 ? -1 : 1);
  return PauliTerm(p.x() ^ q.x(), p.z() ^ q.z(), sign, p.coeff() * q.coeff());
}

Hamiltonian::Hamiltonian(std::size_t n, std::vector<PauliTerm> terms, double offset)
    : n_(n), offset_(offset) {
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (t.num_qubits() != n) {
      fail(ErrorKind::Input, "term on " + std::to_string(t.num_qubits()) +
                                 " qubits in a Hamiltonian on " + std::to_string(n));
    }
    if (t.is_identity()) {
      offset_ += t.weight();
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

}  // namespace minrep
