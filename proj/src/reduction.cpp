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

#include <cmath>
#include <string>
#include <unordered_map>

#include "minrep/error.hpp"
#include "tableau.hpp"

namespace minrep {

namespace {

enum class QubitClass { Redundant, Conditional, Active };

bool identity_below(const PauliTerm& p, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) {
    if (p.letter(j) != 'I') return false;
  }
  return true;
}

void check_restricted(const PauliTerm& p, std::size_t k, char want, const char* what) {
  if (!identity_below(p, k) || p.letter(k) != want) {
    fail(ErrorKind::Internal, std::string(what) + " postcondition failed at qubit " +
                                  std::to_string(k) + ": " + format_pauli(p));
  }
}

void check_qubit(const PauliTerm& p, std::size_t k) {
  if (k >= p.num_qubits()) {
    fail(ErrorKind::Input, "qubit " + std::to_string(k) + " out of range for " +
                               std::to_string(p.num_qubits()) + " qubits");
  }
}

}  // namespace

CliffordCircuit synthesize_to_z(const PauliTerm& p, std::size_t k) {
  check_qubit(p, k);
  const std::size_t n = p.num_qubits();
  CliffordCircuit c(n);
  if (identity_below(p, k) && p.letter(k) == 'Z') return c;

  PauliTerm work = p;
  auto emit = [&](const Gate& g) {
    c.append(g);
    conjugate_gate_inplace(g, work);
  };

  bool any = false;
  for (std::size_t j = 0; j <= k; ++j) {
    const char l = work.letter(j);
    if (l == 'Z') emit(Gate::h(j));
    if (l == 'Y') emit(Gate::sdg(j));
    any = any || l != 'I';
  }
  if (!any) fail(ErrorKind::Input, "term is identity on qubits 0.." + std::to_string(k));

  std::size_t t = k;
  if (!work.x().get(k)) {
    t = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (work.x().get(j)) t = j;
    }
  }
  for (std::size_t j = 0; j <= k; ++j) {
    if (j != t && work.x().get(j)) emit(Gate::cnot(t, j));
  }
  if (t != k) emit(Gate::swap(t, k));
  emit(Gate::h(k));

  check_restricted(work, k, 'Z', "synthesize_to_z");
  return c;
}

CliffordCircuit synthesize_to_x(const PauliTerm& q, std::size_t k) {
  check_qubit(q, k);
  if (!q.x().get(k)) {
    fail(ErrorKind::Input, "term has no X or Y on qubit " + std::to_string(k));
  }
  const std::size_t n = q.num_qubits();
  CliffordCircuit c(n);
  PauliTerm work = q;
  auto emit = [&](const Gate& g) {
    c.append(g);
    conjugate_gate_inplace(g, work);
  };

  if (work.letter(k) == 'Y') emit(Gate::s(k));
  for (std::size_t j = 0; j < k; ++j) {
    const char l = work.letter(j);
    if (l == 'I') continue;
    if (l == 'Z') emit(Gate::h(j));
    if (l == 'Y') emit(Gate::sdg(j));
    emit(Gate::cnot(k, j));
  }

  check_restricted(work, k, 'X', "synthesize_to_x");
  PauliTerm zk = PauliTerm::single(n, k, 'Z');
  if (!(conjugate_circuit(c, zk).same_operator(zk))) {
    fail(ErrorKind::Internal, "synthesize_to_x moved Z on qubit " + std::to_string(k));
  }
  return c;
}

ReductionResult reduce(const Hamiltonian& h) {
  if (h.empty()) fail(ErrorKind::Input, "Hamiltonian has no non-identity terms");
  const std::size_t n = h.num_qubits();
  detail::Tableau tab(h);
  CliffordCircuit circuit(n);
  std::vector<QubitClass> cls(n, QubitClass::Active);

  auto run = [&](const CliffordCircuit& part) {
    tab.apply(part);
    circuit.append(part);
  };

  for (std::size_t k = n; k-- > 0;) {
    const BitVec support = tab.x(k) | tab.z(k);
    if (support.none()) {
      cls[k] = QubitClass::Redundant;
      continue;
    }
    const std::size_t p_row = support.last_set();
    run(synthesize_to_z(tab.row(p_row), k));
    check_restricted(tab.row(p_row), k, 'Z', "sweep Z phase");

    if (tab.x(k).none()) {
      cls[k] = QubitClass::Conditional;
      continue;
    }
    const std::size_t q_row = tab.x(k).first_set();
    run(synthesize_to_x(tab.row(q_row), k));
    check_restricted(tab.row(q_row), k, 'X', "sweep X phase");
    check_restricted(tab.row(p_row), k, 'Z', "sweep X phase");
    cls[k] = QubitClass::Active;
  }

  ReductionResult res;
  res.n = n;
  for (QubitClass qc : {QubitClass::Redundant, QubitClass::Conditional, QubitClass::Active}) {
    for (std::size_t q = 0; q < n; ++q) {
      if (cls[q] == qc) res.permutation.push_back(q);
    }
  }
  for (QubitClass q : cls) {
    if (q == QubitClass::Redundant) ++res.r;
    if (q == QubitClass::Conditional) ++res.c;
  }
  res.active = n - res.r - res.c;

  std::vector<std::size_t> label_at(n), pos_of(n);
  for (std::size_t q = 0; q < n; ++q) label_at[q] = pos_of[q] = q;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t want = res.permutation[i];
    if (label_at[i] == want) continue;
    const std::size_t j = pos_of[want];
    const Gate g = Gate::swap(i, j);
    circuit.append(g);
    tab.apply(g);
    std::swap(label_at[i], label_at[j]);
    pos_of[label_at[i]] = i;
    pos_of[label_at[j]] = j;
  }
  res.circuit = std::move(circuit);

  const std::size_t r = res.r, c = res.c;
  res.reduced_terms.reserve(tab.num_rows());
  for (std::size_t t = 0; t < tab.num_rows(); ++t) {
    ReducedTerm rt;
    rt.coeff = tab.sign(t) * h.terms()[t].coeff();
    rt.zeta = BitVec(c);
    rt.tail = PauliTerm(res.active);
    for (std::size_t q = 0; q < n; ++q) {
      const bool xq = tab.x(q).get(t), zq = tab.z(q).get(t);
      if (q < r) {
        if (xq || zq) fail(ErrorKind::Internal, "redundant qubit carries a non-identity letter");
      } else if (q < r + c) {
        if (xq) fail(ErrorKind::Internal, "conditional qubit carries X or Y");
        if (zq) rt.zeta.set(q - r, true);
      } else {
        if (xq) rt.tail.x().set(q - r - c, true);
        if (zq) rt.tail.z().set(q - r - c, true);
      }
    }
    res.reduced_terms.push_back(std::move(rt));
  }

  for (std::size_t j = 0; j < c; ++j) {
    res.charges_reduced.push_back(PauliTerm::single(n - r, j, 'Z'));
  }
  res.offset = h.offset();
  res.charges_original = charges_in_original_basis(res);
  return res;
}

Hamiltonian sector_hamiltonian(const ReductionResult& res, const SectorSpec& s) {
  if (s.z.size() != res.c) {
    fail(ErrorKind::Input, "sector label has " + std::to_string(s.z.size()) + " bits, expected " +
                               std::to_string(res.c));
  }
  struct Acc {
    PauliTerm tail;
    double sum = 0.0;
    double scale = 0.0;
  };
  std::vector<Acc> merged;
  std::unordered_map<std::string, std::size_t> index;
  double offset = res.offset;

  for (const ReducedTerm& rt : res.reduced_terms) {
    const double w = dot_parity(s.z, rt.zeta) ? -rt.coeff : rt.coeff;
    if (rt.tail.is_identity()) {
      offset += w;
      continue;
    }
    const std::string key = rt.tail.letters();
    auto [it, fresh] = index.try_emplace(key, merged.size());
    if (fresh) merged.push_back({rt.tail, 0.0, 0.0});
    merged[it->second].sum += w;
    merged[it->second].scale += std::abs(w);
  }

  std::vector<PauliTerm> terms;
  for (Acc& a : merged) {
    if (std::abs(a.sum) <= 1e-12 * a.scale) continue;
    a.tail.set_coeff(a.sum);
    terms.push_back(std::move(a.tail));
  }
  return Hamiltonian(res.active, std::move(terms), offset);
}

std::vector<PauliTerm> charges_in_original_basis(const ReductionResult& res) {
  const CliffordCircuit inv = invert(res.circuit);
  std::vector<PauliTerm> out;
  out.reserve(res.c);
  for (std::size_t j = 0; j < res.c; ++j) {
    out.push_back(conjugate_circuit(inv, PauliTerm::single(res.n, res.r + j, 'Z')));
  }
  return out;
}

OptimalityReport optimality_check(const Hamiltonian& h, const ReductionResult& res) {
  OptimalityReport rep;
  rep.bound = theorem_bound(h);
  rep.expected_c = rep.bound.max_charges();
  rep.expected_active = rep.bound.rank / 2;
  rep.expected_r = rep.bound.redundant();
  rep.c_pass = res.c == rep.expected_c;
  rep.active_pass = res.active == rep.expected_active;
  rep.r_pass = res.r == rep.expected_r;
  return rep;
}

}  // namespace minrep
