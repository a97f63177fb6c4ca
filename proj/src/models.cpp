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

#include "minrep/models.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "minrep/error.hpp"

namespace minrep {

namespace {

double param(const LatticeSpec& spec, const std::string& name, double fallback) {
  auto it = spec.params.find(name);
  return it == spec.params.end() ? fallback : it->second;
}

void check_params(const LatticeSpec& spec, std::initializer_list<const char*> allowed) {
  for (const auto& [name, value] : spec.params) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* a) { return name == a; });
    if (!known) {
      fail(ErrorKind::Input, "parameter '" + name + "' is not used by model " +
                                 model_kind_name(spec.kind));
    }
    if (!std::isfinite(value)) fail(ErrorKind::Input, "parameter '" + name + "' is not finite");
  }
}

PauliTerm term(std::size_t n, std::initializer_list<std::pair<std::size_t, char>> letters,
               double coeff) {
  PauliTerm p(n);
  for (auto [q, l] : letters) p.set_letter(q, l);
  p.set_coeff(coeff);
  return p;
}

}  // namespace

Hamiltonian z2_lgt(const LatticeSpec& spec) {
  if (spec.rows < 2 || spec.cols < 2) fail(ErrorKind::Input, "z2 lattice needs rows, cols >= 2");
  if (!spec.periodic) fail(ErrorKind::Input, "z2 lattice is defined on a torus only");
  check_params(spec, {"xi"});
  const double xi = param(spec, "xi", 1.0);
  const std::size_t rows = spec.rows, cols = spec.cols;
  const std::size_t n = 2 * rows * cols;
  auto horizontal = [&](std::size_t r, std::size_t c) { return 2 * (r * cols + c); };
  auto vertical = [&](std::size_t r, std::size_t c) { return 2 * (r * cols + c) + 1; };

  std::vector<PauliTerm> terms;
  terms.reserve(rows * cols + n);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      terms.push_back(term(n,
                           {{horizontal(r, c), 'X'},
                            {horizontal((r + 1) % rows, c), 'X'},
                            {vertical(r, c), 'X'},
                            {vertical(r, (c + 1) % cols), 'X'}},
                           -1.0));
    }
  }
  for (std::size_t q = 0; q < n; ++q) terms.push_back(term(n, {{q, 'Z'}}, xi));
  return Hamiltonian(n, std::move(terms));
}

Hamiltonian hubbard(const LatticeSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1 || spec.rows * spec.cols < 2) {
    fail(ErrorKind::Input, "hubbard lattice needs at least two sites");
  }
  check_params(spec, {"U", "t", "periodic"});
  const bool periodic = param(spec, "periodic", 0.0) != 0.0;
  const double u = param(spec, "U", 4.0);
  const double t = param(spec, "t", 1.0);
  const std::size_t rows = spec.rows, cols = spec.cols;
  const std::size_t sites = rows * cols;
  const std::size_t n = 2 * sites;
  auto snake = [&](std::size_t r, std::size_t c) {
    return r * cols + (r % 2 == 0 ? c : cols - 1 - c);
  };

  std::set<std::pair<std::size_t, std::size_t>> bonds;
  auto bond = [&](std::size_t a, std::size_t b) {
    if (a != b) bonds.emplace(std::min(a, b), std::max(a, b));
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) bond(snake(r, c), snake(r, c + 1));
      if (r + 1 < rows) bond(snake(r, c), snake(r + 1, c));
      if (periodic) {
        if (c + 1 == cols && cols > 2) bond(snake(r, c), snake(r, 0));
        if (r + 1 == rows && rows > 2) bond(snake(r, c), snake(0, c));
      }
    }
  }

  std::vector<PauliTerm> terms;
  double offset = 0.0;
  for (std::size_t layer : {std::size_t{0}, sites}) {
    for (auto [i, j] : bonds) {
      for (char l : {'X', 'Y'}) {
        PauliTerm p(n);
        p.set_letter(layer + i, l);
        p.set_letter(layer + j, l);
        for (std::size_t k = i + 1; k < j; ++k) p.set_letter(layer + k, 'Z');
        p.set_coeff(-t / 2.0);
        terms.push_back(std::move(p));
      }
    }
  }
  for (std::size_t i = 0; i < sites; ++i) {
    terms.push_back(term(n, {{i, 'Z'}}, -u / 4.0));
    terms.push_back(term(n, {{sites + i, 'Z'}}, -u / 4.0));
    terms.push_back(term(n, {{i, 'Z'}, {sites + i, 'Z'}}, u / 4.0));
    offset += u / 4.0;
  }
  return Hamiltonian(n, std::move(terms), offset);
}

Hamiltonian kitaev(const LatticeSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) fail(ErrorKind::Input, "kitaev lattice needs rows, cols >= 1");
  if (!spec.periodic) fail(ErrorKind::Input, "kitaev lattice is defined on a torus only");
  check_params(spec, {"Jx", "Jy", "Jz", "hz"});
  const double jx = param(spec, "Jx", 1.0);
  const double jy = param(spec, "Jy", 1.0);
  const double jz = param(spec, "Jz", 1.0);
  const double hz = param(spec, "hz", 1.0);
  const std::size_t l1 = spec.rows, l2 = spec.cols + 1;
  const std::size_t n = 2 * l1 * l2;
  auto a_site = [&](std::size_t i, std::size_t j) { return 2 * (i * l2 + j); };
  auto b_site = [&](std::size_t i, std::size_t j) { return 2 * (i * l2 + j) + 1; };

  std::vector<PauliTerm> terms;
  for (std::size_t i = 0; i < l1; ++i) {
    for (std::size_t j = 0; j < l2; ++j) {
      const std::size_t bi = (i + l1 - 1) % l1;
      const std::size_t bj = i == 0 ? (j + 1) % l2 : j;
      terms.push_back(term(n, {{a_site(i, j), 'X'}, {b_site(bi, bj), 'X'}}, jx));
    }
  }
  for (std::size_t i = 0; i < l1; ++i) {
    for (std::size_t j = 0; j < l2; ++j) {
      terms.push_back(term(n, {{a_site(i, j), 'Y'}, {b_site(i, (j + l2 - 1) % l2), 'Y'}}, jy));
    }
  }
  for (std::size_t i = 0; i < l1; ++i) {
    for (std::size_t j = 0; j < l2; ++j) {
      terms.push_back(term(n, {{a_site(i, j), 'Z'}, {b_site(i, j), 'Z'}}, jz));
    }
  }
  if (spec.with_field) {
    for (std::size_t q = 0; q < n; ++q) terms.push_back(term(n, {{q, 'Z'}}, hz));
  }
  return Hamiltonian(n, std::move(terms));
}

Hamiltonian j1j2_chain(std::size_t n, double j1, double j2) {
  if (n < 3) fail(ErrorKind::Input, "j1j2 chain needs at least 3 sites");
  std::vector<PauliTerm> terms;
  for (std::size_t i = 0; i + 1 < n; ++i) terms.push_back(term(n, {{i, 'X'}, {i + 1, 'X'}}, j1));
  for (std::size_t i = 0; i + 2 < n; ++i) terms.push_back(term(n, {{i, 'Z'}, {i + 2, 'Z'}}, j2));
  return Hamiltonian(n, std::move(terms));
}

Hamiltonian generate(const LatticeSpec& spec) {
  switch (spec.kind) {
    case ModelKind::Z2Lgt: return z2_lgt(spec);
    case ModelKind::Hubbard: return hubbard(spec);
    case ModelKind::Kitaev: return kitaev(spec);
    case ModelKind::J1J2:
      check_params(spec, {"J1", "J2"});
      return j1j2_chain(spec.rows, param(spec, "J1", 1.0), param(spec, "J2", 1.0));
  }
  fail(ErrorKind::Internal, "unknown model kind");
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "z2") return ModelKind::Z2Lgt;
  if (name == "hubbard") return ModelKind::Hubbard;
  if (name == "kitaev") return ModelKind::Kitaev;
  if (name == "j1j2") return ModelKind::J1J2;
  fail(ErrorKind::Input, "unknown model '" + name + "' (expected z2, hubbard, kitaev or j1j2)");
}

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Z2Lgt: return "z2";
    case ModelKind::Hubbard: return "hubbard";
    case ModelKind::Kitaev: return "kitaev";
    case ModelKind::J1J2: return "j1j2";
  }
  return "unknown";
}

}  // namespace minrep
