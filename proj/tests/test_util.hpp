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

#include <random>
#include <vector>

#include "minrep/clifford.hpp"
#include "minrep/pauli.hpp"

namespace minrep::testutil {

inline PauliTerm random_pauli(std::size_t n, std::mt19937_64& rng, bool allow_identity = true) {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::uniform_int_distribution<int> letter(0, 3);
  while (true) {
    PauliTerm p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, kLetters[letter(rng)]);
    if (rng() & 1U) p.flip_sign();
    if (allow_identity || !p.is_identity()) return p;
  }
}

/// N random non-identity terms with coefficients uniform in [-2, 2].
inline Hamiltonian random_hamiltonian(std::size_t n, std::size_t terms, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<PauliTerm> out;
  for (std::size_t i = 0; i < terms; ++i) {
    PauliTerm p = random_pauli(n, rng, false);
    p.set_coeff(coeff(rng));
    out.push_back(std::move(p));
  }
  return Hamiltonian(n, std::move(out));
}

inline CliffordCircuit random_circuit(std::size_t n, std::size_t gates, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, n > 1 ? 4 : 2);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  CliffordCircuit c(n);
  for (std::size_t i = 0; i < gates; ++i) {
    const std::size_t a = qubit(rng);
    std::size_t b = qubit(rng);
    while (n > 1 && b == a) b = qubit(rng);
    switch (kind(rng)) {
      case 0: c.append(Gate::h(a)); break;
      case 1: c.append(Gate::s(a)); break;
      case 2: c.append(Gate::sdg(a)); break;
      case 3: c.append(Gate::cnot(a, b)); break;
      default: c.append(Gate::swap(a, b)); break;
    }
  }
  return c;
}

}  // namespace minrep::testutil
