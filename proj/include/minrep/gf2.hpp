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
#include <vector>

#include "minrep/bits.hpp"
#include "minrep/pauli.hpp"

namespace minrep {

/// Dense matrix over GF(2), one packed BitVec per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }

  BitMatrix transpose() const;
  bool is_symmetric() const;
  bool has_zero_diagonal() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// Row rank over GF(2). The input is not modified.
std::size_t rank_gf2(const BitMatrix& m);

/// Inverse over GF(2); throws when m is singular or not square.
BitMatrix inverse_gf2(const BitMatrix& m);

/// The 2n-bit vector (x | z) of a term, sign and coefficient dropped.
BitVec symplectic_vector(const PauliTerm& p);

struct GeneratingSubset {
  /// Independent generators, taken from the terms in input order.
  std::vector<PauliTerm> generators;
  /// Index of each generator in the term list.
  std::vector<std::size_t> term_indices;
  /// expansions[i] marks the generators whose symplectic vectors XOR to term i.
  std::vector<BitVec> expansions;
};

/// Greedy left-to-right independent subset of the terms' symplectic vectors.
GeneratingSubset generating_subset(const Hamiltonian& h);

/// Symmetric, zero-diagonal matrix of pairwise symplectic products.
BitMatrix commutation_matrix(const std::vector<PauliTerm>& gens);

struct CanonicalCommutation {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t isotropic_count = 0;
  /// Invertible change of generators with L * target * L^T equal to the input.
  BitMatrix L;
  /// isotropic_count zero rows/cols followed by rank/2 blocks [[0,1],[1,0]].
  BitMatrix target;
};

/// The direct-sum normal form with the given number of isotropic
/// generators and anticommuting pairs.
BitMatrix canonical_target(std::size_t isotropic, std::size_t pairs);

/// Symmetric Gaussian elimination of a symmetric zero-diagonal matrix.
CanonicalCommutation canonicalize(const BitMatrix& m);

/// Dimensions of the commutation structure and the qubit counts they imply.
struct TheoremBound {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;

  std::size_t max_charges() const { return dim - rank; }
  /// Qubits needed when c charges are measured out, 0 <= c <= max_charges().
  std::size_t qubits_at(std::size_t c) const;
  /// Qubits carrying only identity after an optimal reduction.
  std::size_t redundant() const { return n - dim + rank / 2; }
};

TheoremBound theorem_bound(const Hamiltonian& h);

}  // namespace minrep
