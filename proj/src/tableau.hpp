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
#include <utility>
#include <vector>

#include "minrep/bits.hpp"
#include "minrep/clifford.hpp"
#include "minrep/pauli.hpp"

namespace minrep::detail {

/// Column-major Pauli tableau: one bit column per qubit spanning all terms,
/// so a gate touches one or two columns with whole-word operations.
class Tableau {
 public:
  explicit Tableau(const Hamiltonian& h) : n_(h.num_qubits()), rows_(h.terms().size()) {
    x_.assign(n_, BitVec(rows_));
    z_.assign(n_, BitVec(rows_));
    sign_ = BitVec(rows_);
    for (std::size_t t = 0; t < rows_; ++t) {
      const PauliTerm& p = h.terms()[t];
      for (std::size_t q = 0; q < n_; ++q) {
        if (p.x().get(q)) x_[q].set(t, true);
        if (p.z().get(q)) z_[q].set(t, true);
      }
      if (p.sign() < 0) sign_.set(t, true);
    }
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t num_rows() const { return rows_; }
  const BitVec& x(std::size_t q) const { return x_[q]; }
  const BitVec& z(std::size_t q) const { return z_[q]; }
  int sign(std::size_t t) const { return sign_.get(t) ? -1 : 1; }

  /// Term t as a unit-coefficient Pauli string with its current sign.
  PauliTerm row(std::size_t t) const {
    PauliTerm p(n_);
    for (std::size_t q = 0; q < n_; ++q) {
      if (x_[q].get(t)) p.x().set(q, true);
      if (z_[q].get(t)) p.z().set(q, true);
    }
    p.set_sign(sign(t));
    return p;
  }

  void apply(const Gate& g) {
    const std::size_t words = sign_.num_words();
    switch (g.kind) {
      case GateKind::H: {
        BitVec& xa = x_[g.a];
        BitVec& za = z_[g.a];
        for (std::size_t w = 0; w < words; ++w) sign_.word(w) ^= xa.word(w) & za.word(w);
        std::swap(xa, za);
        break;
      }
      case GateKind::S: {
        BitVec& xa = x_[g.a];
        BitVec& za = z_[g.a];
        for (std::size_t w = 0; w < words; ++w) {
          sign_.word(w) ^= xa.word(w) & za.word(w);
          za.word(w) ^= xa.word(w);
        }
        break;
      }
      case GateKind::Sdg: {
        BitVec& xa = x_[g.a];
        BitVec& za = z_[g.a];
        for (std::size_t w = 0; w < words; ++w) {
          sign_.word(w) ^= xa.word(w) & ~za.word(w);
          za.word(w) ^= xa.word(w);
        }
        break;
      }
      case GateKind::CNOT: {
        BitVec& xc = x_[g.a];
        BitVec& zc = z_[g.a];
        BitVec& xt = x_[g.b];
        BitVec& zt = z_[g.b];
        for (std::size_t w = 0; w < words; ++w) {
          sign_.word(w) ^= xc.word(w) & zt.word(w) & ~(xt.word(w) ^ zc.word(w));
          xt.word(w) ^= xc.word(w);
          zc.word(w) ^= zt.word(w);
        }
        break;
      }
      case GateKind::SWAP:
        std::swap(x_[g.a], x_[g.b]);
        std::swap(z_[g.a], z_[g.b]);
        break;
    }
  }

  void apply(const CliffordCircuit& c) {
    for (const Gate& g : c.gates()) apply(g);
  }

 private:
  std::size_t n_;
  std::size_t rows_;
  std::vector<BitVec> x_;
  std::vector<BitVec> z_;
  BitVec sign_;
};

}  // namespace minrep::detail
