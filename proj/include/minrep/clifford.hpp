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

#include "minrep/pauli.hpp"

namespace minrep {

enum class GateKind { H, S, Sdg, CNOT, SWAP };

/// One gate; `b` is the target of CNOT and the second qubit of SWAP.
struct Gate {
  GateKind kind = GateKind::H;
  std::size_t a = 0;
  std::size_t b = 0;

  static Gate h(std::size_t q) { return {GateKind::H, q, 0}; }
  static Gate s(std::size_t q) { return {GateKind::S, q, 0}; }
  static Gate sdg(std::size_t q) { return {GateKind::Sdg, q, 0}; }
  static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, c, t}; }
  static Gate swap(std::size_t p, std::size_t q) { return {GateKind::SWAP, p, q}; }

  bool two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::SWAP; }
  Gate inverse() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// "H 3", "SDG 2", "CNOT 0 1", ...
std::string format_gate(const Gate& g);
Gate parse_gate(std::string_view line);

/// Ordered gate list. Gates listed first act first on states, so the
/// circuit is U = G_k ... G_1 and conjugation computes U P U^dag by
/// folding the gates left to right.
class CliffordCircuit {
 public:
  CliffordCircuit() = default;
  explicit CliffordCircuit(std::size_t n) : n_(n) {}
  CliffordCircuit(std::size_t n, std::vector<Gate> gates);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void append(const Gate& g);
  void append(const CliffordCircuit& other);

  friend bool operator==(const CliffordCircuit&, const CliffordCircuit&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Gate> gates_;
};

/// g p g^dag with the exact sign; the coefficient is left untouched.
PauliTerm conjugate_gate(const Gate& g, const PauliTerm& p);
void conjugate_gate_inplace(const Gate& g, PauliTerm& p);

/// U p U^dag for the circuit U.
PauliTerm conjugate_circuit(const CliffordCircuit& c, const PauliTerm& p);

CliffordCircuit invert(const CliffordCircuit& c);

/// One gate per line with a leading "# qubits <n>" comment.
std::string format_circuit(const CliffordCircuit& c);
/// Parses the text format; '#' starts a comment. The qubit count comes from
/// the "# qubits <n>" line when present, otherwise from `n`.
CliffordCircuit parse_circuit(std::string_view text, std::size_t n = 0);

}  // namespace minrep
