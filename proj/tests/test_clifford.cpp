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

#include "minrep/clifford.hpp"

#include <random>

#include <gtest/gtest.h>

#include "minrep/error.hpp"
#include "minrep/oracle.hpp"
#include "test_util.hpp"

using namespace minrep;

namespace {

double dense_conjugation_error(const CliffordCircuit& c, const PauliTerm& p) {
  const DenseOperator u = circuit_to_dense(c);
  const DenseOperator expect = u * pauli_to_dense(p) * u.adjoint();
  return (pauli_to_dense(conjugate_circuit(c, p)) - expect).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(clifford, gate_examples) {
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::h(0), parse_pauli("X"))), "Z");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::h(0), parse_pauli("Y"))), "-Y");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::s(0), parse_pauli("Y"))), "-X");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::s(0), parse_pauli("X"))), "Y");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::s(0), parse_pauli("Z"))), "Z");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::sdg(0), parse_pauli("Y"))), "X");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::cnot(0, 1), parse_pauli("XI"))), "XX");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::cnot(0, 1), parse_pauli("IZ"))), "ZZ");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::cnot(0, 1), parse_pauli("IX"))), "IX");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::cnot(0, 1), parse_pauli("ZI"))), "ZI");
  EXPECT_EQ(format_pauli(conjugate_gate(Gate::swap(0, 2), parse_pauli("XYZ"))), "ZYX");
}

TEST(clifford, coefficient_untouched) {
  auto p = parse_pauli("Y");
  p.set_coeff(0.25);
  EXPECT_EQ(conjugate_gate(Gate::h(0), p).coeff(), 0.25);
}

TEST(clifford, gate_tables_match_dense_exhaustively) {
  const std::vector<Gate> gates = {Gate::h(0),    Gate::h(1),    Gate::s(0),
                                   Gate::s(1),    Gate::sdg(0),  Gate::sdg(1),
                                   Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::swap(0, 1)};
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (const Gate& g : gates) {
    for (char a : letters) {
      for (char b : letters) {
        const auto p = parse_pauli(std::string{a, b});
        CliffordCircuit c(2, {g});
        EXPECT_LT(dense_conjugation_error(c, p), 1e-12) << format_gate(g) << " on " << a << b;
      }
    }
  }
}

TEST(clifford, out_of_range_gate_rejected) {
  EXPECT_THROW(conjugate_gate(Gate::h(3), parse_pauli("XX")), Error);
  EXPECT_THROW(conjugate_gate(Gate::cnot(1, 1), parse_pauli("XX")), Error);
  CliffordCircuit c(2);
  EXPECT_THROW(c.append(Gate::swap(0, 2)), Error);
  EXPECT_THROW(conjugate_circuit(c, parse_pauli("XXX")), Error);
}

TEST(clifford, empty_circuit_is_identity) {
  const auto p = parse_pauli("-XYZ");
  EXPECT_EQ(conjugate_circuit(CliffordCircuit(3), p), p);
}

TEST(clifford, three_qubit_circuit_maps_terms) {
  CliffordCircuit sweep = parse_circuit(
      "H 0\nH 2\nCNOT 2 0\nH 2\nH 0\nCNOT 2 0\nCNOT 2 1\nH 0\nSWAP 0 1\n", 3);
  std::vector<std::string> out;
  for (const char* s : {"XXI", "IXX", "ZIZ"}) out.push_back(conjugate_circuit(sweep, parse_pauli(s)).letters());
  EXPECT_EQ(out, (std::vector<std::string>{"IIX", "IZX", "IIZ"}));
}

TEST(clifford, invert_examples) {
  EXPECT_EQ(invert(CliffordCircuit(1, {Gate::h(0)})).gates(), std::vector<Gate>{Gate::h(0)});
  const auto inv = invert(CliffordCircuit(2, {Gate::s(0), Gate::cnot(0, 1)}));
  EXPECT_EQ(inv.gates(), (std::vector<Gate>{Gate::cnot(0, 1), Gate::sdg(0)}));
}

TEST(clifford, random_round_trip_and_commutation) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto c = testutil::random_circuit(n, 30, rng);
    const auto p = testutil::random_pauli(n, rng);
    const auto q = testutil::random_pauli(n, rng);
    const auto cp = conjugate_circuit(c, p);
    EXPECT_EQ(conjugate_circuit(invert(c), cp), p);
    EXPECT_EQ(symplectic_product(cp, conjugate_circuit(c, q)), symplectic_product(p, q));
    EXPECT_TRUE(cp.sign() == 1 || cp.sign() == -1);
  }
}

TEST(clifford, random_circuits_match_dense) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto c = testutil::random_circuit(n, 20, rng);
    EXPECT_LT(dense_conjugation_error(c, testutil::random_pauli(n, rng)), 1e-12);
  }
}

TEST(clifford, text_round_trip) {
  std::mt19937_64 rng(47);
  const auto c = testutil::random_circuit(5, 40, rng);
  const std::string text = format_circuit(c);
  EXPECT_EQ(text.rfind("# qubits 5\n", 0), 0u);
  EXPECT_EQ(parse_circuit(text), c);
  EXPECT_EQ(format_gate(parse_gate("SDG 2")), "SDG 2");
  EXPECT_EQ(parse_circuit("# comment\nH 1 # trailing\n\nCNOT 0 1\n", 2).size(), 2u);
  EXPECT_THROW(parse_gate("T 0"), Error);
  EXPECT_THROW(parse_gate("CNOT 0"), Error);
  EXPECT_THROW(parse_gate("H x"), Error);
  EXPECT_THROW(parse_circuit("H 4\n", 2), Error);
}
