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

#include "minrep/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <deque>
#include <random>

#include <Eigen/Eigenvalues>

#include "minrep/error.hpp"

namespace minrep {

namespace {

using cd = std::complex<double>;
using Mat2 = std::array<std::array<cd, 2>, 2>;

const Mat2& letter_matrix(char l) {
  static const Mat2 kI = {{{1.0, 0.0}, {0.0, 1.0}}};
  static const Mat2 kX = {{{0.0, 1.0}, {1.0, 0.0}}};
  static const Mat2 kY = {{{0.0, cd(0, -1)}, {cd(0, 1), 0.0}}};
  static const Mat2 kZ = {{{1.0, 0.0}, {0.0, -1.0}}};
  switch (l) {
    case 'X': return kX;
    case 'Y': return kY;
    case 'Z': return kZ;
    default: return kI;
  }
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    fail(ErrorKind::Capability, std::string(what) + " limited to " + std::to_string(cap) +
                                    " qubits, got " + std::to_string(n));
  }
}

std::size_t bit_of(std::size_t n, std::size_t q) { return std::size_t{1} << (n - 1 - q); }

// Left-multiplies m by the gate's matrix, or by its adjoint.
void apply_gate_rows(DenseOperator& m, std::size_t n, const Gate& g, bool adjoint) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t ba = bit_of(n, g.a);
  switch (g.kind) {
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & ba) continue;
        Eigen::RowVectorXcd top = m.row(i);
        Eigen::RowVectorXcd bottom = m.row(i | ba);
        m.row(i) = s * (top + bottom);
        m.row(i | ba) = s * (top - bottom);
      }
      break;
    }
    case GateKind::S:
    case GateKind::Sdg: {
      const bool dagger = (g.kind == GateKind::Sdg) != adjoint;
      const cd phase = dagger ? cd(0, -1) : cd(0, 1);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & ba) m.row(i) *= phase;
      }
      break;
    }
    case GateKind::CNOT: {
      const std::size_t bt = bit_of(n, g.b);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & ba) && !(i & bt)) m.row(i).swap(m.row(i | bt));
      }
      break;
    }
    case GateKind::SWAP: {
      const std::size_t bb = bit_of(n, g.b);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & ba) && !(i & bb)) m.row(i).swap(m.row((i ^ ba) | bb));
      }
      break;
    }
  }
}

void apply_circuit_rows(DenseOperator& m, const CliffordCircuit& c) {
  for (const Gate& g : c.gates()) apply_gate_rows(m, c.num_qubits(), g, false);
}

/// U H U^dag for Hermitian H by two passes of row operations.
DenseOperator rotate(const DenseOperator& h, const CliffordCircuit& c) {
  DenseOperator a = h;
  apply_circuit_rows(a, c);
  DenseOperator b = a.adjoint();
  apply_circuit_rows(b, c);
  return b;
}

double max_abs(const DenseOperator& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::string reduced_letters(const ReductionResult& res, const ReducedTerm& rt) {
  std::string s(res.r, 'I');
  for (std::size_t j = 0; j < res.c; ++j) s += rt.zeta.get(j) ? 'Z' : 'I';
  s += rt.tail.letters();
  return s;
}

CheckResult make_check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation <= tolerance, deviation, tolerance};
}

}  // namespace

DenseOperator pauli_to_dense(const PauliTerm& p, const OracleCaps& caps) {
  const std::size_t n = p.num_qubits();
  check_cap(n, caps.dense_max, "dense matrices");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<const Mat2*> factors(n);
  for (std::size_t q = 0; q < n; ++q) factors[q] = &letter_matrix(p.letter(q));

  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    cd value = static_cast<double>(p.sign());
    std::size_t row = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t b = bit_of(n, q);
      const std::size_t cb = (col & b) ? 1 : 0;
      const Mat2& f = *factors[q];
      const std::size_t rb = f[0][cb] != 0.0 ? 0 : 1;
      value *= f[rb][cb];
      if (rb) row |= b;
    }
    out(row, col) = value;
  }
  return out;
}

DenseOperator to_dense(const Hamiltonian& h, const OracleCaps& caps) {
  const std::size_t n = h.num_qubits();
  check_cap(n, caps.dense_max, "dense matrices");
  const std::size_t dim = std::size_t{1} << n;
  DenseOperator out = DenseOperator::Identity(dim, dim) * h.offset();
  for (const PauliTerm& t : h.terms()) out += t.coeff() * pauli_to_dense(t, caps);
  return out;
}

DenseOperator circuit_to_dense(const CliffordCircuit& c, const OracleCaps& caps) {
  const std::size_t n = c.num_qubits();
  check_cap(n, caps.dense_max, "dense matrices");
  const std::size_t dim = std::size_t{1} << n;
  DenseOperator u = DenseOperator::Identity(dim, dim);
  apply_circuit_rows(u, c);
  return u;
}

std::size_t brute_force_charges(const Hamiltonian& h, const OracleCaps& caps) {
  const std::size_t n = h.num_qubits();
  check_cap(n, caps.exhaustive_max, "exhaustive search");
  // Letters as base-4 digits: 0 = I, 1 = X, 2 = Y, 3 = Z.
  static constexpr int kProduct[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto digit = [](char l) { return l == 'X' ? 1 : l == 'Y' ? 2 : l == 'Z' ? 3 : 0; };
  using Word = std::vector<int>;
  auto encode = [&](const Word& w) {
    std::size_t code = 0;
    for (std::size_t q = n; q-- > 0;) code = code * 4 + static_cast<std::size_t>(w[q]);
    return code;
  };
  auto decode = [&](std::size_t code) {
    Word w(n);
    for (std::size_t q = 0; q < n; ++q) {
      w[q] = static_cast<int>(code % 4);
      code /= 4;
    }
    return w;
  };
  auto commutes = [&](const Word& a, const Word& b) {
    std::size_t clashes = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (a[q] != 0 && b[q] != 0 && a[q] != b[q]) ++clashes;
    }
    return clashes % 2 == 0;
  };

  std::vector<Word> terms;
  for (const PauliTerm& t : h.terms()) {
    Word w(n);
    for (std::size_t q = 0; q < n; ++q) w[q] = digit(t.letter(q));
    terms.push_back(std::move(w));
  }

  std::vector<char> seen(std::size_t{1} << (2 * n), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t central = 0;
  while (!queue.empty()) {
    const Word cur = decode(queue.front());
    queue.pop_front();
    if (std::all_of(terms.begin(), terms.end(), [&](const Word& t) { return commutes(cur, t); })) {
      ++central;
    }
    for (const Word& t : terms) {
      Word next(n);
      for (std::size_t q = 0; q < n; ++q) next[q] = kProduct[cur[q]][t[q]];
      const std::size_t code = encode(next);
      if (!seen[code]) {
        seen[code] = 1;
        queue.push_back(code);
      }
    }
  }
  if (!std::has_single_bit(central)) fail(ErrorKind::Internal, "commutant size is not a power of 2");
  return static_cast<std::size_t>(std::countr_zero(central));
}

std::vector<double> eigenvalues(const DenseOperator& m) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) fail(ErrorKind::Internal, "eigensolver did not converge");
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_reduction(const Hamiltonian& h, const ReductionResult& res,
                                    const OracleCaps& caps, std::uint64_t seed) {
  const std::size_t n = h.num_qubits();
  check_cap(n, caps.verify_max, "verification");
  if (res.n != n || res.circuit.num_qubits() != n || res.r + res.c + res.active != n ||
      res.reduced_terms.size() != h.terms().size()) {
    fail(ErrorKind::Input, "reduction result does not match the Hamiltonian");
  }
  const std::size_t dim = std::size_t{1} << n;
  VerificationReport rep;

  const DenseOperator hd = to_dense(h, caps);
  const DenseOperator rotated = rotate(hd, res.circuit);

  // 1. term-wise reconstruction and unitarity
  {
    DenseOperator expect = DenseOperator::Identity(dim, dim) * res.offset;
    for (const ReducedTerm& rt : res.reduced_terms) {
      expect += rt.coeff * pauli_to_dense(parse_pauli(reduced_letters(res, rt), n), caps);
    }
    DenseOperator u = circuit_to_dense(res.circuit, caps);
    for (auto it = res.circuit.gates().rbegin(); it != res.circuit.gates().rend(); ++it) {
      apply_gate_rows(u, n, *it, true);
    }
    const double unitarity = max_abs(u - DenseOperator::Identity(dim, dim));
    const double match = max_abs(rotated - expect);
    CheckResult c = make_check("conjugation", match, 1e-10);
    c.pass = c.pass && unitarity <= 1e-12;
    c.deviation = std::max(match, unitarity);
    rep.checks.push_back(c);
  }

  // 2. block structure over the first r + c bits
  {
    const std::size_t shift = res.active;
    double off = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i >> shift) != (j >> shift)) off = std::max(off, std::abs(rotated(i, j)));
      }
    }
    rep.checks.push_back(make_check("block_diagonal", off, 1e-12));
  }

  // 3. spectra
  {
    const std::vector<double> full = eigenvalues(hd);
    std::vector<double> sectors;
    sectors.reserve(dim);
    const std::size_t copies = std::size_t{1} << res.r;
    for (std::size_t zi = 0; zi < (std::size_t{1} << res.c); ++zi) {
      SectorSpec s{BitVec(res.c)};
      for (std::size_t j = 0; j < res.c; ++j) s.z.set(j, (zi >> (res.c - 1 - j)) & 1U);
      for (double e : eigenvalues(to_dense(sector_hamiltonian(res, s), caps))) {
        sectors.insert(sectors.end(), copies, e);
      }
    }
    std::sort(sectors.begin(), sectors.end());
    double dev = sectors.size() == full.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(full.size(), sectors.size()); ++i) {
      dev = std::max(dev, std::abs(full[i] - sectors[i]));
    }
    rep.checks.push_back(make_check("spectrum", dev, 1e-9));
  }

  // 4. charges commute with H
  {
    double dev = res.charges_original.size() == res.c ? 0.0 : INFINITY;
    for (const PauliTerm& q : res.charges_original) {
      if (q.num_qubits() != n) {
        dev = INFINITY;
        break;
      }
      const DenseOperator cm = pauli_to_dense(q, caps);
      dev = std::max(dev, max_abs(cm * hd - hd * cm));
    }
    rep.checks.push_back(make_check("charges_commute", dev, 1e-12));
  }

  // 5. time evolution factorizes over sectors
  {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::normal_distribution<double> gauss;
    const double t = uni(rng);
    SectorSpec s{BitVec(res.c)};
    std::size_t zi = 0;
    for (std::size_t j = 0; j < res.c; ++j) {
      const bool bit = (rng() & 1U) != 0;
      s.z.set(j, bit);
      zi = zi * 2 + (bit ? 1 : 0);
    }
    const std::size_t adim = std::size_t{1} << res.active;
    Eigen::VectorXcd psi(adim);
    for (std::size_t k = 0; k < adim; ++k) psi(k) = cd(gauss(rng), gauss(rng));
    psi.normalize();

    auto evolve = [t](const DenseOperator& m, const Eigen::VectorXcd& v) {
      Eigen::SelfAdjointEigenSolver<DenseOperator> es(m);
      if (es.info() != Eigen::Success) fail(ErrorKind::Internal, "eigensolver did not converge");
      Eigen::VectorXcd phases(es.eigenvalues().size());
      for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::exp(cd(0, -t * es.eigenvalues()(k)));
      }
      return Eigen::VectorXcd(es.eigenvectors() * phases.asDiagonal() *
                              (es.eigenvectors().adjoint() * v));
    };

    const std::size_t rdim = std::size_t{1} << (n - res.r);
    const DenseOperator hr = rotated.topLeftCorner(rdim, rdim);
    Eigen::VectorXcd in = Eigen::VectorXcd::Zero(rdim);
    in.segment(zi * adim, adim) = psi;
    const Eigen::VectorXcd actual = evolve(hr, in);

    Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(rdim);
    expect.segment(zi * adim, adim) = evolve(to_dense(sector_hamiltonian(res, s), caps), psi);

    const cd overlap = expect.dot(actual);
    const cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cd(1.0);
    const double dev = (actual - phase * expect).cwiseAbs().maxCoeff();
    rep.checks.push_back(make_check("evolution", dev, 1e-8));
  }
  return rep;
}

}  // namespace minrep
