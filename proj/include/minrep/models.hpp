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
#include <map>
#include <string>

#include "minrep/pauli.hpp"

namespace minrep {

enum class ModelKind { Z2Lgt, Hubbard, Kitaev, J1J2 };

/// Lattice description shared by the model generators.
///
/// Recognized parameters and defaults:
///   Z2Lgt:   xi = 1
///   Hubbard: U = 4, t = 1, periodic = 0 (nonzero adds wrap-around bonds)
///   Kitaev:  Jx = Jy = Jz = 1, hz = 1 (used when with_field)
///   J1J2:    J1 = J2 = 1; `rows` is the chain length
struct LatticeSpec {
  ModelKind kind = ModelKind::Z2Lgt;
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::map<std::string, double> params;
  bool with_field = false;
  bool periodic = true;
};

/// Z2 gauge theory on a rows x cols torus: -sum of XXXX plaquettes followed
/// by xi * Z on every edge. Site (r, c) owns horizontal edge 2(r*cols + c)
/// and vertical edge 2(r*cols + c) + 1. Both extents must be at least 2.
Hamiltonian z2_lgt(const LatticeSpec& spec);

/// Fermi-Hubbard model under Jordan-Wigner on a snake ordering (row-major,
/// direction alternating per row); spin-up modes 0..S-1, spin-down S..2S-1.
/// Hopping -t/2 (XZ..ZX + YZ..ZY) per bond and layer, then per site
/// -U/4 Z_up, -U/4 Z_down, +U/4 Z_up Z_down with U/4 per site in the offset.
/// Open boundaries unless the `periodic` parameter is nonzero.
Hamiltonian hubbard(const LatticeSpec& spec);

/// Kitaev honeycomb on a twisted torus of rows x (cols + 1) unit cells,
/// n = 2 rows (cols + 1). Cell (i, j) holds A = 2(i(cols+1) + j) and B = A + 1.
/// Bonds: A(i,j)-B(i-1,j) is XX (wrapping in i shifts j by one),
/// A(i,j)-B(i,j-1) is YY, A(i,j)-B(i,j) is ZZ. Emitted X bonds, Y bonds,
/// Z bonds, then hz * Z on every site when with_field.
Hamiltonian kitaev(const LatticeSpec& spec);

/// Open chain: J1 X_i X_{i+1} for every neighbor pair, then J2 Z_i Z_{i+2}.
Hamiltonian j1j2_chain(std::size_t n, double j1 = 1.0, double j2 = 1.0);

Hamiltonian generate(const LatticeSpec& spec);

/// "z2", "hubbard", "kitaev", "j1j2".
ModelKind parse_model_kind(const std::string& name);
std::string model_kind_name(ModelKind kind);

}  // namespace minrep
