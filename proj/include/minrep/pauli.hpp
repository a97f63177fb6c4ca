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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "minrep/bits.hpp"

namespace minrep {

/// A Hermitian n-qubit Pauli string with a +/-1 sign and a real weight.
///
/// Symplectic encoding: the operator is sign * i^(x.z) * X^x Z^z, so the
/// letter Y is (x, z) = (1, 1) with no stored phase. Qubit 0 is the
/// leftmost character of the text form.
class PauliTerm {
 public:
  PauliTerm() = default;
  /// Identity on n qubits, sign +1, coefficient 1.
  explicit PauliTerm(std::size_t n) : x_(n), z_(n) {}
  PauliTerm(BitVec x, BitVec z, int sign = 1, double coeff = 1.0);

  static PauliTerm single(std::size_t n, std::size_t qubit, char letter);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  BitVec& x() { return x_; }
  BitVec& z() { return z_; }
  int sign() const { return sign_; }
  double coeff() const { return coeff_; }
  /// sign() * coeff(), the scalar actually multiplying the letter string.
  double weight() const { return sign_ * coeff_; }

  void set_sign(int s);
  void flip_sign() { sign_ = -sign_; }
  void set_coeff(double c) { coeff_ = c; }

  char letter(std::size_t q) const;
  void set_letter(std::size_t q, char letter);
  bool is_identity() const { return x_.none() && z_.none(); }
  /// Number of non-identity letters.
  std::size_t weight_count() const { return (x_ | z_).popcount(); }

  /// Letters only, no sign.
  std::string letters() const;

  /// Same letters and sign; coefficient ignored.
  bool same_operator(const PauliTerm& o) const { return sign_ == o.sign_ && x_ == o.x_ && z_ == o.z_; }

  friend bool operator==(const PauliTerm& a, const PauliTerm& b) {
    return a.same_operator(b) && a.coeff_ == b.coeff_;
  }

 private:
  BitVec x_;
  BitVec z_;
  int sign_ = 1;
  double coeff_ = 1.0;
};

/// Parses "XYZI" with an optional leading '+' or '-'. Coefficient is 1.
PauliTerm parse_pauli(std::string_view text, std::size_t n);
/// Parses and takes the qubit count from the string length.
PauliTerm parse_pauli(std::string_view text);
/// Letters with a leading '-' when the sign is negative.
std::string format_pauli(const PauliTerm& p);

/// 0 when p and q commute, 1 when they anticommute.
int symplectic_product(const PauliTerm& p, const PauliTerm& q);

/// Hermitian product of two commuting terms; coefficients multiply.
/// Throws for anticommuting inputs since their product is anti-Hermitian.
PauliTerm multiply(const PauliTerm& p, const PauliTerm& q);

/// Weighted sum of Pauli strings plus a scalar offset.
///
/// Identity strings handed to the constructor are folded into the offset,
/// so terms() never contains an all-identity string.
class Hamiltonian {
 public:
  Hamiltonian() = default;
  Hamiltonian(std::size_t n, std::vector<PauliTerm> terms, double offset = 0.0);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  double offset() const { return offset_; }
  bool empty() const { return terms_.empty(); }

 private:
  std::size_t n_ = 0;
  std::vector<PauliTerm> terms_;
  double offset_ = 0.0;
};

}  // namespace minrep
