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

#include "minrep/reduction.hpp"

#include <random>

#include <gtest/gtest.h>

#include "minrep/error.hpp"
#include "minrep/gf2.hpp"
#include "minrep/models.hpp"
#include "test_util.hpp"

using namespace minrep;

namespace {

Hamiltonian from_strings(const std::vector<std::string>& strings) {
  std::vector<PauliTerm> terms;
  for (const auto& s : strings) terms.push_back(parse_pauli(s));
  return Hamiltonian(terms.front().num_qubits(), terms);
}

std::vector<std::string> term_lines(const Hamiltonian& h) {
  std::vector<std::string> out;
  for (const auto& t : h.terms()) out.push_back(std::to_string(t.weight()) + " " + t.letters());
  return out;
}

void expect_tableau_shape(const Hamiltonian& h, const ReductionResult& res) {
  for (const PauliTerm& t : h.terms()) {
    const PauliTerm u = conjugate_circuit(res.circuit, t);
    for (std::size_t q = 0; q < res.r; ++q) EXPECT_EQ(u.letter(q), 'I');
    for (std::size_t q = res.r; q < res.r + res.c; ++q) EXPECT_FALSE(u.x().get(q));
  }
}

void expect_charges_valid(const Hamiltonian& h, const ReductionResult& res) {
  ASSERT_EQ(res.charges_original.size(), res.c);
  BitMatrix m(res.c, 2 * res.n);
  for (std::size_t j = 0; j < res.c; ++j) {
    for (const PauliTerm& t : h.terms()) EXPECT_EQ(symplectic_product(res.charges_original[j], t), 0);
    m.row(j) = symplectic_vector(res.charges_original[j]);
    const std::string expect = std::string(j, 'I') + "Z" + std::string(res.n - res.r - j - 1, 'I');
    EXPECT_EQ(format_pauli(res.charges_reduced[j]), expect);
  }
  EXPECT_EQ(rank_gf2(m), res.c);
}

}  // namespace

TEST(reduction, three_qubit_partition_and_terms) {
  const auto h = from_strings({"XXI", "IXX", "ZIZ"});
  const auto res = reduce(h);
  EXPECT_EQ(res.r, 1u);
  EXPECT_EQ(res.c, 1u);
  EXPECT_EQ(res.active, 1u);
  std::vector<std::string> images;
  for (const auto& t : h.terms()) images.push_back(conjugate_circuit(res.circuit, t).letters());
  EXPECT_EQ(images, (std::vector<std::string>{"IIX", "IZX", "IIZ"}));
  expect_tableau_shape(h, res);
  expect_charges_valid(h, res);
}

TEST(reduction, three_qubit_sectors) {
  const auto res = reduce(from_strings({"XXI", "IXX", "ZIZ"}));
  const auto s0 = sector_hamiltonian(res, {BitVec::from_string("0")});
  EXPECT_EQ(term_lines(s0), (std::vector<std::string>{"2.000000 X", "1.000000 Z"}));
  EXPECT_EQ(s0.offset(), 0.0);
  const auto s1 = sector_hamiltonian(res, {BitVec::from_string("1")});
  EXPECT_EQ(term_lines(s1), (std::vector<std::string>{"1.000000 Z"}));
  EXPECT_THROW(sector_hamiltonian(res, {BitVec::from_string("00")}), Error);
}

TEST(reduction, trivial_inputs) {
  const auto z = reduce(from_strings({"Z"}));
  EXPECT_EQ(z.r, 0u);
  EXPECT_EQ(z.c, 1u);
  EXPECT_EQ(z.active, 0u);
  EXPECT_TRUE(z.reduced_terms[0].tail.is_identity());

  const auto xz = reduce(from_strings({"X", "Z"}));
  EXPECT_EQ(xz.r, 0u);
  EXPECT_EQ(xz.c, 0u);
  EXPECT_EQ(xz.active, 1u);
  EXPECT_TRUE(charges_in_original_basis(xz).empty());

  EXPECT_THROW(reduce(Hamiltonian(2, {}, 1.0)), Error);
}

TEST(reduction, commuting_hamiltonian_is_classical) {
  const auto h = from_strings({"ZI", "IZ"});
  const auto res = reduce(h);
  EXPECT_EQ(res.r, 0u);
  EXPECT_EQ(res.c, 2u);
  EXPECT_EQ(res.active, 0u);
  EXPECT_TRUE(optimality_check(h, res).pass());
  const auto s = sector_hamiltonian(res, {BitVec::from_string("00")});
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.num_qubits(), 0u);
}

TEST(reduction, synthesize_to_z_examples) {
  EXPECT_TRUE(synthesize_to_z(parse_pauli("IZ"), 1).empty());
  const auto h = synthesize_to_z(parse_pauli("IX"), 1);
  EXPECT_EQ(h.gates(), std::vector<Gate>{Gate::h(1)});
  const auto xx = synthesize_to_z(parse_pauli("XXI"), 1);
  const auto image = conjugate_circuit(xx, parse_pauli("XXI"));
  EXPECT_EQ(image.letter(0), 'I');
  EXPECT_EQ(image.letter(1), 'Z');
  EXPECT_EQ(image.letter(2), 'I');
  EXPECT_THROW(synthesize_to_z(parse_pauli("IIX"), 1), Error);
}

TEST(reduction, synthesize_to_x_examples) {
  EXPECT_TRUE(synthesize_to_x(parse_pauli("IX"), 1).empty());
  const auto s = synthesize_to_x(parse_pauli("IY"), 1);
  EXPECT_EQ(s.gates(), std::vector<Gate>{Gate::s(1)});
  EXPECT_EQ(format_pauli(conjugate_circuit(s, parse_pauli("IY"))), "-IX");
  EXPECT_THROW(synthesize_to_x(parse_pauli("XZ"), 1), Error);
}

TEST(reduction, synthesize_random_anticommuting_pairs) {
  std::mt19937_64 rng(53);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 4;
    const std::size_t k = rng() % n;
    auto p = testutil::random_pauli(n, rng);
    auto q = testutil::random_pauli(n, rng);
    bool p_active = false;
    for (std::size_t j = 0; j <= k; ++j) p_active = p_active || p.letter(j) != 'I';
    if (!p_active) continue;
    const auto cz = synthesize_to_z(p, k);
    p = conjugate_circuit(cz, p);
    q = conjugate_circuit(cz, q);
    if (!q.x().get(k)) continue;
    const auto cx = synthesize_to_x(q, k);
    p = conjugate_circuit(cx, p);
    q = conjugate_circuit(cx, q);
    for (std::size_t j = 0; j < k; ++j) {
      EXPECT_EQ(p.letter(j), 'I');
      EXPECT_EQ(q.letter(j), 'I');
    }
    EXPECT_EQ(p.letter(k), 'Z');
    EXPECT_EQ(q.letter(k), 'X');
    for (const Gate& g : cz.gates()) {
      EXPECT_LE(g.a, k);
      if (g.two_qubit()) EXPECT_LE(g.b, k);
    }
    ++checked;
  }
}

TEST(reduction, theorem_conformance_on_random_inputs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto h = testutil::random_hamiltonian(n, 1 + rng() % 12, rng);
    const auto res = reduce(h);
    EXPECT_EQ(res.r + res.c + res.active, n);
    const auto opt = optimality_check(h, res);
    EXPECT_TRUE(opt.pass()) << "n=" << n << " r=" << res.r << " c=" << res.c;
    expect_tableau_shape(h, res);
    expect_charges_valid(h, res);
  }
}

TEST(reduction, three_qubit_optimality_report) {
  const auto h = from_strings({"XXI", "IXX", "ZIZ"});
  const auto opt = optimality_check(h, reduce(h));
  EXPECT_EQ(opt.bound.dim, 3u);
  EXPECT_EQ(opt.bound.rank, 2u);
  EXPECT_EQ(opt.expected_c, 1u);
  EXPECT_EQ(opt.expected_active, 1u);
  EXPECT_EQ(opt.expected_r, 1u);
  EXPECT_TRUE(opt.pass());
}

TEST(reduction, z2_charges) {
  LatticeSpec spec;
  spec.kind = ModelKind::Z2Lgt;
  spec.rows = spec.cols = 2;
  const auto h = z2_lgt(spec);
  const auto res = reduce(h);
  EXPECT_EQ(res.c, 5u);
  expect_charges_valid(h, res);
  for (const auto& a : res.charges_original) {
    for (const auto& b : res.charges_original) EXPECT_EQ(symplectic_product(a, b), 0);
  }
}

TEST(reduction, kitaev_field_2x2) {
  LatticeSpec spec;
  spec.kind = ModelKind::Kitaev;
  spec.rows = spec.cols = 2;
  spec.with_field = true;
  const auto h = kitaev(spec);
  const auto res = reduce(h);
  EXPECT_EQ(res.c, 3u);
  EXPECT_TRUE(optimality_check(h, res).pass());
}

TEST(reduction, deterministic) {
  std::mt19937_64 rng(67);
  const auto h = testutil::random_hamiltonian(7, 10, rng);
  const auto a = reduce(h);
  const auto b = reduce(h);
  EXPECT_EQ(a.circuit, b.circuit);
  EXPECT_EQ(a.permutation, b.permutation);
  for (std::size_t i = 0; i < a.reduced_terms.size(); ++i) {
    EXPECT_EQ(a.reduced_terms[i].coeff, b.reduced_terms[i].coeff);
    EXPECT_EQ(a.reduced_terms[i].zeta, b.reduced_terms[i].zeta);
    EXPECT_EQ(a.reduced_terms[i].tail, b.reduced_terms[i].tail);
  }
}

TEST(reduction, wide_models_stay_optimal) {
  LatticeSpec spec;
  spec.kind = ModelKind::Z2Lgt;
  spec.rows = 3;
  spec.cols = 40;
  const auto h = z2_lgt(spec);
  const auto res = reduce(h);
  EXPECT_EQ(res.c, h.num_qubits() / 2 + 1);
  EXPECT_TRUE(optimality_check(h, res).pass());
  expect_tableau_shape(h, res);
}
