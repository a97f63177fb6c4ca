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
#include "minrep/clifford.hpp"
#include "minrep/gf2.hpp"
#include "minrep/pauli.hpp"

namespace minrep {

/// One input term after the basis change: coeff * Z^zeta (x) tail on the
/// conditional and active blocks, identity on the redundant block.
struct ReducedTerm {
  double coeff = 0.0;
  BitVec zeta;     ///< length c
  PauliTerm tail;  ///< on `active` qubits, sign +1
};

struct ReductionResult {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t c = 0;
  std::size_t active = 0;
  /// The full basis change, relabeling SWAPs included.
  CliffordCircuit circuit;
  /// permutation[p] is the sweep-time qubit that ends at position p.
  std::vector<std::size_t> permutation;
  /// One per input term, in input order.
  std::vector<ReducedTerm> reduced_terms;
  /// Z on position j of the n - r retained qubits.
  std::vector<PauliTerm> charges_reduced;
  /// U^dag Z_{r+j} U on n qubits; the sign records the conjugation phase.
  std::vector<PauliTerm> charges_original;
  double offset = 0.0;
};

/// Sweep from the last qubit to the first, classifying each as redundant,
/// conditional (charge) or active. Throws for a Hamiltonian with no
/// non-identity terms.
ReductionResult reduce(const Hamiltonian& h);

/// Circuit on qubits 0..k mapping p restricted to 0..k onto Z_k.
CliffordCircuit synthesize_to_z(const PauliTerm& p, std::size_t k);

/// Circuit on qubits 0..k mapping q restricted to 0..k onto X_k while
/// fixing Z_k. q must carry X or Y on qubit k.
CliffordCircuit synthesize_to_x(const PauliTerm& q, std::size_t k);

struct SectorSpec {
  BitVec z;  ///< bit j set means charge j has eigenvalue -1
};

/// The sector Hamiltonian on the active block: sum of (-1)^(z.zeta_i) w_i S_i
/// with equal tails merged in first-occurrence order, identity tails folded
/// into the offset and exact cancellations dropped.
Hamiltonian sector_hamiltonian(const ReductionResult& res, const SectorSpec& s);

/// U^dag Z_{r+j} U for every charge j.
std::vector<PauliTerm> charges_in_original_basis(const ReductionResult& res);

struct OptimalityReport {
  TheoremBound bound;
  std::size_t expected_r = 0;
  std::size_t expected_c = 0;
  std::size_t expected_active = 0;
  bool r_pass = false;
  bool c_pass = false;
  bool active_pass = false;

  bool pass() const { return r_pass && c_pass && active_pass; }
};

OptimalityReport optimality_check(const Hamiltonian& h, const ReductionResult& res);

}  // namespace minrep
