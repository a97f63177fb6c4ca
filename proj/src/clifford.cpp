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

#include <algorithm>
#include <charconv>
#include <sstream>

#include "minrep/error.hpp"

namespace minrep {

namespace {

void check_gate(const Gate& g, std::size_t n) {
  if (g.a >= n || (g.two_qubit() && g.b >= n)) {
    fail(ErrorKind::Input, "gate '" + format_gate(g) + "' out of range for " + std::to_string(n) +
                               " qubits");
  }
  if (g.two_qubit() && g.a == g.b) {
    fail(ErrorKind::Input, "gate '" + format_gate(g) + "' repeats a qubit");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(ErrorKind::Input, "invalid qubit index '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Gate Gate::inverse() const {
  Gate g = *this;
  if (kind == GateKind::S) g.kind = GateKind::Sdg;
  if (kind == GateKind::Sdg) g.kind = GateKind::S;
  return g;
}

std::string format_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: return "H " + std::to_string(g.a);
    case GateKind::S: return "S " + std::to_string(g.a);
    case GateKind::Sdg: return "SDG " + std::to_string(g.a);
    case GateKind::CNOT: return "CNOT " + std::to_string(g.a) + " " + std::to_string(g.b);
    case GateKind::SWAP: return "SWAP " + std::to_string(g.a) + " " + std::to_string(g.b);
  }
  return {};
}

Gate parse_gate(std::string_view line) {
  const auto tok = split_ws(trim(line));
  if (tok.empty()) fail(ErrorKind::Input, "empty gate line");
  const std::string_view name = tok[0];
  auto want = [&](std::size_t args) {
    if (tok.size() != args + 1) {
      fail(ErrorKind::Input, "gate '" + std::string(name) + "' takes " + std::to_string(args) +
                                 " qubit index(es)");
    }
  };
  Gate g;
  if (name == "H" || name == "S" || name == "SDG") {
    want(1);
    g.kind = name == "H" ? GateKind::H : name == "S" ? GateKind::S : GateKind::Sdg;
    g.a = parse_index(tok[1]);
  } else if (name == "CNOT" || name == "SWAP") {
    want(2);
    g.kind = name == "CNOT" ? GateKind::CNOT : GateKind::SWAP;
    g.a = parse_index(tok[1]);
    g.b = parse_index(tok[2]);
    if (g.a == g.b) fail(ErrorKind::Input, "gate '" + std::string(line) + "' repeats a qubit");
  } else {
    fail(ErrorKind::Input, "unknown gate '" + std::string(name) + "'");
  }
  return g;
}

CliffordCircuit::CliffordCircuit(std::size_t n, std::vector<Gate> gates) : n_(n) {
  gates_.reserve(gates.size());
  for (const Gate& g : gates) append(g);
}

void CliffordCircuit::append(const Gate& g) {
  check_gate(g, n_);
  gates_.push_back(g);
}

void CliffordCircuit::append(const CliffordCircuit& other) {
  if (other.n_ != n_) fail(ErrorKind::Input, "cannot append circuits on different qubit counts");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void conjugate_gate_inplace(const Gate& g, PauliTerm& p) {
  check_gate(g, p.num_qubits());
  BitVec& x = p.x();
  BitVec& z = p.z();
  const std::size_t a = g.a;
  switch (g.kind) {
    case GateKind::H: {
      const bool xa = x.get(a), za = z.get(a);
      if (xa && za) p.flip_sign();
      x.set(a, za);
      z.set(a, xa);
      break;
    }
    case GateKind::S: {
      const bool xa = x.get(a), za = z.get(a);
      if (xa && za) p.flip_sign();
      z.set(a, za != xa);
      break;
    }
    case GateKind::Sdg: {
      const bool xa = x.get(a), za = z.get(a);
      if (xa && !za) p.flip_sign();
      z.set(a, za != xa);
      break;
    }
    case GateKind::CNOT: {
      const std::size_t t = g.b;
      const bool xc = x.get(a), zc = z.get(a), xt = x.get(t), zt = z.get(t);
      if (xc && zt && xt == zc) p.flip_sign();
      x.set(t, xt != xc);
      z.set(a, zc != zt);
      break;
    }
    case GateKind::SWAP:
      x.swap_bits(a, g.b);
      z.swap_bits(a, g.b);
      break;
  }
}

PauliTerm conjugate_gate(const Gate& g, const PauliTerm& p) {
  PauliTerm out = p;
  conjugate_gate_inplace(g, out);
  return out;
}

PauliTerm conjugate_circuit(const CliffordCircuit& c, const PauliTerm& p) {
  if (c.num_qubits() != p.num_qubits()) {
    fail(ErrorKind::Input, "circuit on " + std::to_string(c.num_qubits()) + " qubits applied to a " +
                               std::to_string(p.num_qubits()) + "-qubit term");
  }
  PauliTerm out = p;
  for (const Gate& g : c.gates()) conjugate_gate_inplace(g, out);
  return out;
}

CliffordCircuit invert(const CliffordCircuit& c) {
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) gates.push_back(it->inverse());
  return CliffordCircuit(c.num_qubits(), std::move(gates));
}

std::string format_circuit(const CliffordCircuit& c) {
  std::string out = "# qubits " + std::to_string(c.num_qubits()) + "\n";
  for (const Gate& g : c.gates()) {
    out += format_gate(g);
    out += '\n';
  }
  return out;
}

CliffordCircuit parse_circuit(std::string_view text, std::size_t n) {
  std::vector<Gate> gates;
  std::size_t declared = 0;
  bool have_declared = false;
  std::size_t line_no = 0;
  std::size_t max_index = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto tok = split_ws(trim(line.substr(1)));
      if (tok.size() == 2 && tok[0] == "qubits") {
        declared = parse_index(tok[1]);
        have_declared = true;
      }
      continue;
    }
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = trim(line.substr(0, hash));
    try {
      const Gate g = parse_gate(line);
      max_index = std::max({max_index, g.a + 1, g.two_qubit() ? g.b + 1 : 0});
      gates.push_back(g);
    } catch (const Error& e) {
      fail(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  std::size_t qubits = have_declared ? declared : (n != 0 ? n : max_index);
  return CliffordCircuit(qubits, std::move(gates));
}

}  // namespace minrep
