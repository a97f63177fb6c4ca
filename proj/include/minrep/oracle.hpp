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
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "minrep/clifford.hpp"
#include "minrep/pauli.hpp"
#include "minrep/reduction.hpp"

namespace minrep {

using DenseOperator = Eigen::MatrixXcd;

/// Qubit limits for the brute-force routines.
struct OracleCaps {
  std::size_t dense_max = 14;
  std::size_t exhaustive_max = 6;
  std::size_t verify_max = 10;
};

/// Kronecker product of the explicit 2x2 letter matrices; qubit 0 is the
/// leftmost factor, i.e. the most significant bit of the basis index.
DenseOperator pauli_to_dense(const PauliTerm& p, const OracleCaps& caps = {});

/// Sum of weighted dense terms plus offset * I.
DenseOperator to_dense(const Hamiltonian& h, const OracleCaps& caps = {});

/// G_k ... G_1 for the circuit's gate list G_1, ..., G_k.
DenseOperator circuit_to_dense(const CliffordCircuit& c, const OracleCaps& caps = {});

/// log2 of the number of elements of the group generated by the terms
/// (phases dropped) that commute with every term, by exhaustive search.
std::size_t brute_force_charges(const Hamiltonian& h, const OracleCaps& caps = {});

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> eigenvalues(const DenseOperator& m);

struct CheckResult {
  std::string name;
  bool pass = false;
  double deviation = 0.0;
  double tolerance = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }
};

/// Dense checks of a reduction:
///   1. U H U^dag equals the dense form of the reduced terms, U is unitary;
///   2. U H U^dag is block diagonal in the first r + c bits;
///   3. sector spectra (times 2^r) reproduce the spectrum of H;
///   4. every charge commutes with H;
///   5. evolution under the rotated H factorizes into |z> (x) sector evolution.
VerificationReport verify_reduction(const Hamiltonian& h, const ReductionResult& res,
                                    const OracleCaps& caps = {}, std::uint64_t seed = 1);

}  // namespace minrep
