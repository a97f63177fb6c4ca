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

#include "minrep/pauli.hpp"

#include <random>

#include <gtest/gtest.h>

#include "minrep/error.hpp"
#include "minrep/oracle.hpp"
#include "test_util.hpp"

using namespace minrep;

TEST(pauli, parse_encodes_bits) {
  auto p = parse_pauli("XXI", 3);
  EXPECT_EQ(p.x().to_string(), "110");
  EXPECT_EQ(p.z().to_string(), "000");
  EXPECT_EQ(p.sign(), 1);
  EXPECT_EQ(p.coeff(), 1.0);

  auto q = parse_pauli("ZIZ", 3);
  EXPECT_EQ(q.x().to_string(), "000");
  EXPECT_EQ(q.z().to_string(), "101");

  auto y = parse_pauli("-Y", 1);
  EXPECT_EQ(y.x().to_string(), "1");
  EXPECT_EQ(y.z().to_string(), "1");
  EXPECT_EQ(y.sign(), -1);
  EXPECT_EQ(parse_pauli("+Z").sign(), 1);
}

TEST(pauli, parse_rejects_bad_input) {
  EXPECT_THROW(parse_pauli("W", 1), Error);
  EXPECT_THROW(parse_pauli("XX", 3), Error);
  EXPECT_THROW(parse_pauli("xI", 2), Error);
  try {
    parse_pauli("W", 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Input);
  }
}

TEST(pauli, format_round_trip_exhaustive) {
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int code = 0; code < 256; ++code) {
    std::string s;
    for (int q = 0, c = code; q < 4; ++q, c /= 4) s += letters[c % 4];
    for (const std::string& text : {s, "-" + s}) {
      EXPECT_EQ(format_pauli(parse_pauli(text, 4)), text);
    }
  }
}

TEST(pauli, symplectic_product_examples) {
  EXPECT_EQ(symplectic_product(parse_pauli("X"), parse_pauli("Z")), 1);
  EXPECT_EQ(symplectic_product(parse_pauli("XX"), parse_pauli("ZZ")), 0);
  EXPECT_EQ(symplectic_product(parse_pauli("XXI"), parse_pauli("ZIZ")), 1);
  EXPECT_THROW(symplectic_product(parse_pauli("X"), parse_pauli("XX")), Error);
}

TEST(pauli, symplectic_product_matches_dense_commutator) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      auto p = testutil::random_pauli(n, rng);
      auto q = testutil::random_pauli(n, rng);
      const DenseOperator a = pauli_to_dense(p), b = pauli_to_dense(q);
      const bool commute = (a * b - b * a).cwiseAbs().maxCoeff() < 1e-12;
      EXPECT_EQ(symplectic_product(p, q) == 0, commute) << format_pauli(p) << " " << format_pauli(q);
    }
  }
}

TEST(pauli, multiply_examples) {
  auto xx = multiply(parse_pauli("X"), parse_pauli("X"));
  EXPECT_TRUE(xx.is_identity());
  EXPECT_EQ(xx.sign(), 1);
  auto zz = multiply(parse_pauli("Z"), parse_pauli("Z"));
  EXPECT_TRUE(zz.is_identity());
  EXPECT_EQ(zz.sign(), 1);
  EXPECT_EQ(format_pauli(multiply(parse_pauli("XX"), parse_pauli("ZZ"))), "-YY");
  EXPECT_THROW(multiply(parse_pauli("X"), parse_pauli("Z")), Error);
  EXPECT_THROW(multiply(parse_pauli("X"), parse_pauli("XZ")), Error);
}

TEST(pauli, multiply_matches_dense_product) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      auto p = testutil::random_pauli(n, rng);
      auto q = testutil::random_pauli(n, rng);
      if (symplectic_product(p, q) != 0) continue;
      const auto pq = multiply(p, q);
      const DenseOperator expect = pauli_to_dense(p) * pauli_to_dense(q);
      EXPECT_LT((pauli_to_dense(pq) - expect).cwiseAbs().maxCoeff(), 1e-12);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(pauli, multiply_self_and_associativity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = testutil::random_pauli(5, rng);
    auto pp = multiply(p, p);
    EXPECT_TRUE(pp.is_identity());
    EXPECT_EQ(pp.sign(), 1);

    auto q = testutil::random_pauli(5, rng);
    auto r = testutil::random_pauli(5, rng);
    if (symplectic_product(p, q) || symplectic_product(q, r) || symplectic_product(p, r)) continue;
    EXPECT_TRUE(multiply(multiply(p, q), r).same_operator(multiply(p, multiply(q, r))));
  }
}

TEST(pauli, hamiltonian_folds_identity) {
  auto id = parse_pauli("II");
  id.set_coeff(0.5);
  auto z = parse_pauli("-ZI");
  z.set_coeff(2.0);
  Hamiltonian h(2, {id, z}, 1.0);
  EXPECT_EQ(h.terms().size(), 1u);
  EXPECT_DOUBLE_EQ(h.offset(), 1.5);
  EXPECT_DOUBLE_EQ(h.terms()[0].weight(), -2.0);
  EXPECT_THROW(Hamiltonian(3, {z}), Error);
}

TEST(pauli, wide_strings_cross_word_boundaries) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = testutil::random_pauli(150, rng);
    auto q = testutil::random_pauli(150, rng);
    int expect = 0;
    for (std::size_t k = 0; k < 150; ++k) {
      const char a = p.letter(k), b = q.letter(k);
      if (a != 'I' && b != 'I' && a != b) expect ^= 1;
    }
    EXPECT_EQ(symplectic_product(p, q), expect);
    EXPECT_EQ(format_pauli(parse_pauli(format_pauli(p))), format_pauli(p));
  }
}
