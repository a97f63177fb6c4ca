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

#include "minrep/gf2.hpp"

#include <utility>

#include "minrep/error.hpp"

namespace minrep {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[r].get(c)) t.set(c, r, true);
    }
  }
  return t;
}

bool BitMatrix::is_symmetric() const {
  if (rows() != cols_) return false;
  return *this == transpose();
}

bool BitMatrix::has_zero_diagonal() const {
  for (std::size_t i = 0; i < rows() && i < cols_; ++i) {
    if (get(i, i)) return false;
  }
  return true;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::Internal, "BitMatrix product shape mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(r, k)) out.row(r) ^= b.row(k);
    }
  }
  return out;
}

std::size_t rank_gf2(const BitMatrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r].get(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

BitMatrix inverse_gf2(const BitMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) fail(ErrorKind::Internal, "inverse of a non-square matrix");
  BitMatrix a = m;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a.get(pivot, col)) ++pivot;
    if (pivot == n) fail(ErrorKind::Internal, "matrix is singular over GF(2)");
    std::swap(a.row(col), a.row(pivot));
    std::swap(inv.row(col), inv.row(pivot));
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a.get(r, col)) {
        a.row(r) ^= a.row(col);
        inv.row(r) ^= inv.row(col);
      }
    }
  }
  return inv;
}

BitVec symplectic_vector(const PauliTerm& p) {
  const std::size_t n = p.num_qubits();
  BitVec v(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x().get(q)) v.set(q, true);
    if (p.z().get(q)) v.set(n + q, true);
  }
  return v;
}

GeneratingSubset generating_subset(const Hamiltonian& h) {
  const std::size_t n = h.num_qubits();
  const std::size_t terms = h.terms().size();
  GeneratingSubset out;

  // Echelon basis keyed by lowest set bit; combos are over generator indices.
  std::vector<BitVec> basis;
  std::vector<BitVec> basis_combo;
  std::vector<std::size_t> owner(2 * n, SIZE_MAX);

  std::vector<BitVec> raw_expansions;
  raw_expansions.reserve(terms);
  for (std::size_t t = 0; t < terms; ++t) {
    BitVec v = symplectic_vector(h.terms()[t]);
    BitVec combo(terms);
    while (v.any()) {
      const std::size_t p = v.first_set();
      if (owner[p] == SIZE_MAX) break;
      v ^= basis[owner[p]];
      combo ^= basis_combo[owner[p]];
    }
    if (v.none()) {
      raw_expansions.push_back(std::move(combo));
      continue;
    }
    const std::size_t g = out.generators.size();
    PauliTerm gen = h.terms()[t];
    gen.set_sign(1);
    gen.set_coeff(1.0);
    out.generators.push_back(std::move(gen));
    out.term_indices.push_back(t);
    combo.set(g, !combo.get(g));
    owner[v.first_set()] = basis.size();
    basis.push_back(std::move(v));
    basis_combo.push_back(combo);
    BitVec self(terms);
    self.set(g, true);
    raw_expansions.push_back(std::move(self));
  }

  const std::size_t d = out.generators.size();
  out.expansions.reserve(terms);
  for (const auto& e : raw_expansions) out.expansions.push_back(e.slice(0, d));
  return out;
}

BitMatrix commutation_matrix(const std::vector<PauliTerm>& gens) {
  const std::size_t d = gens.size();
  BitMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (symplectic_product(gens[i], gens[j]) != 0) {
        m.set(i, j, true);
        m.set(j, i, true);
      }
    }
  }
  return m;
}

BitMatrix canonical_target(std::size_t isotropic, std::size_t pairs) {
  const std::size_t d = isotropic + 2 * pairs;
  BitMatrix m(d, d);
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t a = isotropic + 2 * p;
    m.set(a, a + 1, true);
    m.set(a + 1, a, true);
  }
  return m;
}

namespace {

// Replaces generator k by g_k * g_i: row k += row i and column k += column i.
// The column of a symmetric matrix is its row, so only the support of row i
// needs the column update.
void combine(BitMatrix& w, BitMatrix& e, std::size_t k, std::size_t i) {
  const BitVec row_i = w.row(i);
  w.row(k) ^= row_i;
  for (std::size_t r = 0; r < row_i.size(); ++r) {
    if (row_i.get(r)) w.row(r).flip(k);
  }
  e.row(k) ^= e.row(i);
}

}  // namespace

CanonicalCommutation canonicalize(const BitMatrix& m) {
  if (!m.is_symmetric()) fail(ErrorKind::Input, "commutation matrix must be symmetric");
  if (!m.has_zero_diagonal()) fail(ErrorKind::Input, "commutation matrix must have zero diagonal");

  const std::size_t d = m.rows();
  BitMatrix w = m;
  BitMatrix e = BitMatrix::identity(d);
  BitVec remaining(d);
  for (std::size_t i = 0; i < d; ++i) remaining.set(i, true);

  std::vector<std::size_t> isotropic;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  for (std::size_t i = 0; i < d; ++i) {
    if (!remaining.get(i)) continue;
    const BitVec live = w.row(i) & remaining;
    remaining.set(i, false);
    if (live.none()) {
      isotropic.push_back(i);
      continue;
    }
    const std::size_t j = live.first_set();
    remaining.set(j, false);
    for (std::size_t k = 0; k < d; ++k) {
      if (!remaining.get(k)) continue;
      if (w.get(k, j)) combine(w, e, k, i);
      if (w.get(k, i)) combine(w, e, k, j);
    }
    pairs.emplace_back(i, j);
  }

  BitMatrix ordered(d, d);
  std::size_t next = 0;
  for (std::size_t i : isotropic) ordered.row(next++) = e.row(i);
  for (auto [a, b] : pairs) {
    ordered.row(next++) = e.row(a);
    ordered.row(next++) = e.row(b);
  }

  CanonicalCommutation out;
  out.dim = d;
  out.rank = 2 * pairs.size();
  out.isotropic_count = isotropic.size();
  out.L = inverse_gf2(ordered);
  out.target = canonical_target(isotropic.size(), pairs.size());
  return out;
}

std::size_t TheoremBound::qubits_at(std::size_t c) const {
  if (c > max_charges()) fail(ErrorKind::Input, "charge count exceeds dim(M) - rank(M)");
  return rank / 2 + (dim - rank - c);
}

TheoremBound theorem_bound(const Hamiltonian& h) {
  const GeneratingSubset g = generating_subset(h);
  const BitMatrix m = commutation_matrix(g.generators);
  TheoremBound b;
  b.n = h.num_qubits();
  b.dim = m.rows();
  b.rank = rank_gf2(m);
  return b;
}

}  // namespace minrep
