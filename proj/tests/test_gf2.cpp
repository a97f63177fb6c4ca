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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "minrep/error.hpp"
#include "minrep/models.hpp"
#include "test_util.hpp"

using namespace minrep;

namespace {

BitMatrix from_rows(const std::vector<std::string>& rows) {
  BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(r) = BitVec::from_string(rows[r]);
  return m;
}

Hamiltonian from_strings(const std::vector<std::string>& strings) {
  std::vector<PauliTerm> terms;
  for (const auto& s : strings) terms.push_back(parse_pauli(s));
  return Hamiltonian(terms.front().num_qubits(), terms);
}

BitMatrix random_symmetric(std::size_t d, std::mt19937_64& rng) {
  BitMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (rng() & 1U) {
        m.set(i, j, true);
        m.set(j, i, true);
      }
    }
  }
  return m;
}

}  // namespace

TEST(gf2, rank_examples) {
  EXPECT_EQ(rank_gf2(BitMatrix(3, 3)), 0u);
  EXPECT_EQ(rank_gf2(BitMatrix::identity(4)), 4u);
  EXPECT_EQ(rank_gf2(from_rows({"110", "011", "101"})), 2u);
}

TEST(gf2, rank_leaves_input_untouched) {
  auto m = from_rows({"110", "011", "101"});
  auto copy = m;
  rank_gf2(m);
  EXPECT_EQ(m, copy);
}

TEST(gf2, inverse_round_trip) {
  std::mt19937_64 rng(2);
  int done = 0;
  while (done < 30) {
    BitMatrix m(20, 20);
    for (std::size_t r = 0; r < 20; ++r) {
      for (std::size_t c = 0; c < 20; ++c) m.set(r, c, rng() & 1U);
    }
    if (rank_gf2(m) != 20) {
      EXPECT_THROW(inverse_gf2(m), Error);
      continue;
    }
    EXPECT_EQ(inverse_gf2(m) * m, BitMatrix::identity(20));
    ++done;
  }
}

TEST(gf2, generating_subset_examples) {
  auto g = generating_subset(from_strings({"XX", "ZZ", "YY"}));
  ASSERT_EQ(g.generators.size(), 2u);
  EXPECT_EQ(g.generators[0].letters(), "XX");
  EXPECT_EQ(g.generators[1].letters(), "ZZ");
  EXPECT_EQ(g.expansions[2].to_string(), "11");

  auto three_qubit = generating_subset(from_strings({"XXI", "IXX", "ZIZ"}));
  EXPECT_EQ(three_qubit.generators.size(), 3u);

  auto single = generating_subset(from_strings({"Z"}));
  ASSERT_EQ(single.generators.size(), 1u);
  EXPECT_EQ(single.generators[0].letters(), "Z");
}

TEST(gf2, generating_subset_expansions_reconstruct_terms) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto h = testutil::random_hamiltonian(n, 1 + rng() % 16, rng);
    const auto g = generating_subset(h);
    BitMatrix sym(h.terms().size(), 2 * n);
    for (std::size_t t = 0; t < h.terms().size(); ++t) {
      BitVec acc(2 * n);
      for (std::size_t k = 0; k < g.generators.size(); ++k) {
        if (g.expansions[t].get(k)) acc ^= symplectic_vector(g.generators[k]);
      }
      EXPECT_EQ(acc, symplectic_vector(h.terms()[t]));
      sym.row(t) = symplectic_vector(h.terms()[t]);
    }
    EXPECT_EQ(g.generators.size(), rank_gf2(sym));
  }
}

TEST(gf2, commutation_matrix_examples) {
  EXPECT_EQ(commutation_matrix({parse_pauli("XX"), parse_pauli("ZZ")}), BitMatrix(2, 2));
  EXPECT_EQ(commutation_matrix({parse_pauli("X"), parse_pauli("Z")}), from_rows({"01", "10"}));
  auto m = commutation_matrix({parse_pauli("XXI"), parse_pauli("IXX"), parse_pauli("ZIZ")});
  EXPECT_EQ(m, from_rows({"001", "001", "110"}));
}

TEST(gf2, canonicalize_examples) {
  auto zero = canonicalize(BitMatrix(5, 5));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.isotropic_count, 5u);
  EXPECT_EQ(zero.L, BitMatrix::identity(5));

  auto pair = canonicalize(from_rows({"01", "10"}));
  EXPECT_EQ(pair.rank, 2u);
  EXPECT_EQ(pair.isotropic_count, 0u);

  auto three_qubit = canonicalize(from_rows({"001", "001", "110"}));
  EXPECT_EQ(three_qubit.rank, 2u);
  EXPECT_EQ(three_qubit.isotropic_count, 1u);
  EXPECT_EQ(three_qubit.L * three_qubit.target * three_qubit.L.transpose(), from_rows({"001", "001", "110"}));
}

TEST(gf2, canonicalize_rejects_non_symmetric) {
  EXPECT_THROW(canonicalize(from_rows({"01", "00"})), Error);
  EXPECT_THROW(canonicalize(from_rows({"10", "00"})), Error);
}

TEST(gf2, canonicalize_reproduces_random_matrices) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = rng() % 65;
    const BitMatrix m = random_symmetric(d, rng);
    const auto cc = canonicalize(m);
    EXPECT_EQ(cc.rank % 2, 0u);
    EXPECT_EQ(cc.rank + cc.isotropic_count, d);
    EXPECT_EQ(cc.rank, rank_gf2(m));
    EXPECT_EQ(rank_gf2(cc.L), d);
    EXPECT_EQ(cc.L * cc.target * cc.L.transpose(), m);
  }
}

TEST(gf2, commutation_rank_is_even) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = testutil::random_hamiltonian(1 + rng() % 8, 1 + rng() % 12, rng);
    EXPECT_EQ(rank_gf2(commutation_matrix(generating_subset(h).generators)) % 2, 0u);
  }
}

TEST(gf2, rank_invariant_under_term_order) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto h = testutil::random_hamiltonian(n, 1 + rng() % 12, rng);
    auto terms = h.terms();
    std::shuffle(terms.begin(), terms.end(), rng);
    const Hamiltonian shuffled(n, terms);
    const auto a = canonicalize(commutation_matrix(generating_subset(h).generators));
    const auto b = canonicalize(commutation_matrix(generating_subset(shuffled).generators));
    EXPECT_EQ(a.rank, b.rank);
    EXPECT_EQ(a.isotropic_count, b.isotropic_count);
  }
}

TEST(gf2, theorem_bound_examples) {
  const auto three_qubit = theorem_bound(from_strings({"XXI", "IXX", "ZIZ"}));
  EXPECT_EQ(three_qubit.dim, 3u);
  EXPECT_EQ(three_qubit.rank, 2u);
  EXPECT_EQ(three_qubit.qubits_at(1), 1u);

  const auto classical = theorem_bound(from_strings({"ZZI", "IZZ", "ZIZ", "ZII"}));
  EXPECT_EQ(classical.rank, 0u);
  EXPECT_EQ(classical.qubits_at(classical.dim), 0u);
  EXPECT_THROW(classical.qubits_at(classical.dim + 1), Error);

  LatticeSpec spec;
  spec.kind = ModelKind::Z2Lgt;
  spec.rows = spec.cols = 2;
  const auto z2 = theorem_bound(z2_lgt(spec));
  EXPECT_EQ(z2.max_charges(), 5u);
  EXPECT_EQ(z2.qubits_at(5), 3u);
}
