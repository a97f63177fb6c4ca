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

#include "minrep/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "minrep/error.hpp"

namespace minrep {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_real(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    fail(ErrorKind::Input, "invalid coefficient '" + std::string(tok) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(ErrorKind::Input, "invalid count '" + std::string(tok) + "'");
  }
  return v;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::Input, std::string("report is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Input, std::string("report field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) fail(ErrorKind::Internal, "cannot format number");
  return std::string(buf, ptr);
}

Hamiltonian parse_hamiltonian(std::string_view text) {
  std::size_t n = 0;
  bool have_n = false;
  double offset = 0.0;
  std::vector<PauliTerm> terms;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      const auto tok = split_ws(line);
      if (tok.size() != 2) fail(ErrorKind::Input, "expected two fields, got " + std::to_string(tok.size()));
      if (tok[0] == "qubits") {
        if (have_n) fail(ErrorKind::Input, "duplicate 'qubits' header");
        if (!terms.empty()) fail(ErrorKind::Input, "'qubits' header must precede the terms");
        n = parse_count(tok[1]);
        have_n = true;
      } else if (tok[0] == "offset") {
        offset += parse_real(tok[1]);
      } else {
        if (!have_n) fail(ErrorKind::Input, "missing 'qubits <n>' header");
        const double w = parse_real(tok[0]);
        PauliTerm p = parse_pauli(tok[1], n);
        p.set_coeff(w);
        terms.push_back(std::move(p));
      }
    } catch (const Error& e) {
      fail(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_n) fail(ErrorKind::Input, "missing 'qubits <n>' header");
  return Hamiltonian(n, std::move(terms), offset);
}

std::string format_hamiltonian(const Hamiltonian& h) {
  std::string out = "qubits " + std::to_string(h.num_qubits()) + "\n";
  for (const PauliTerm& t : h.terms()) {
    out += format_double(t.weight());
    out += ' ';
    out += t.letters();
    out += '\n';
  }
  out += "offset " + format_double(h.offset()) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorKind::Io, "error reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) fail(ErrorKind::Io, "error writing '" + path + "'");
}

Hamiltonian load_hamiltonian(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_hamiltonian(text);
  } catch (const Error& e) {
    fail(e.kind(), path + ": " + e.what());
  }
}

std::string report_to_json(const ReductionResult& res, const OptimalityReport& opt) {
  json j;
  j["n"] = res.n;
  j["r"] = res.r;
  j["c"] = res.c;
  j["active"] = res.active;
  j["offset"] = res.offset;
  json gates = json::array();
  for (const Gate& g : res.circuit.gates()) gates.push_back(format_gate(g));
  j["circuit"] = gates;
  json reduced = json::array();
  for (const PauliTerm& q : res.charges_reduced) reduced.push_back(q.letters());
  j["charges_reduced"] = reduced;
  json original = json::array();
  json signs = json::array();
  for (const PauliTerm& q : res.charges_original) {
    original.push_back(q.letters());
    signs.push_back(q.sign());
  }
  j["charges_original"] = original;
  j["charge_signs"] = signs;
  json terms = json::array();
  for (const ReducedTerm& rt : res.reduced_terms) {
    terms.push_back({{"coeff", rt.coeff}, {"zeta", rt.zeta.to_string()}, {"tail", rt.tail.letters()}});
  }
  j["reduced_terms"] = terms;
  j["optimality"] = {{"dimM", opt.bound.dim}, {"rankM", opt.bound.rank}, {"pass", opt.pass()}};
  j["permutation"] = res.permutation;
  return j.dump(2) + "\n";
}

ReportDocument report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Input, std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::Input, "report must be a JSON object");

  ReportDocument doc;
  ReductionResult& res = doc.result;
  res.n = field<std::size_t>(j, "n");
  res.r = field<std::size_t>(j, "r");
  res.c = field<std::size_t>(j, "c");
  res.active = field<std::size_t>(j, "active");
  res.offset = field<double>(j, "offset");
  if (res.r + res.c + res.active != res.n) fail(ErrorKind::Input, "report has r + c + active != n");

  std::vector<Gate> gates;
  for (const auto& line : field<std::vector<std::string>>(j, "circuit")) gates.push_back(parse_gate(line));
  res.circuit = CliffordCircuit(res.n, std::move(gates));

  for (const auto& s : field<std::vector<std::string>>(j, "charges_reduced")) {
    res.charges_reduced.push_back(parse_pauli(s, res.n - res.r));
  }
  const auto original = field<std::vector<std::string>>(j, "charges_original");
  const auto signs = field<std::vector<int>>(j, "charge_signs");
  if (original.size() != signs.size()) fail(ErrorKind::Input, "charge_signs length mismatch");
  for (std::size_t k = 0; k < original.size(); ++k) {
    PauliTerm q = parse_pauli(original[k], res.n);
    if (signs[k] != 1 && signs[k] != -1) fail(ErrorKind::Input, "charge sign must be +1 or -1");
    q.set_sign(signs[k]);
    res.charges_original.push_back(std::move(q));
  }
  if (res.charges_reduced.size() != res.c || res.charges_original.size() != res.c) {
    fail(ErrorKind::Input, "report charge lists must have c entries");
  }

  const json& terms = j.contains("reduced_terms") ? j.at("reduced_terms") : json();
  if (!terms.is_array()) fail(ErrorKind::Input, "report is missing 'reduced_terms'");
  for (const json& t : terms) {
    ReducedTerm rt;
    rt.coeff = field<double>(t, "coeff");
    const auto zeta = field<std::string>(t, "zeta");
    if (zeta.size() != res.c) fail(ErrorKind::Input, "zeta '" + zeta + "' must have length c");
    try {
      rt.zeta = BitVec::from_string(zeta);
    } catch (const std::exception&) {
      fail(ErrorKind::Input, "zeta '" + zeta + "' is not a bit string");
    }
    rt.tail = parse_pauli(field<std::string>(t, "tail"), res.active);
    res.reduced_terms.push_back(std::move(rt));
  }

  const json opt = field<json>(j, "optimality");
  doc.dim_m = field<std::size_t>(opt, "dimM");
  doc.rank_m = field<std::size_t>(opt, "rankM");
  doc.optimal = field<bool>(opt, "pass");
  res.permutation = field<std::vector<std::size_t>>(j, "permutation");
  if (res.permutation.size() != res.n) fail(ErrorKind::Input, "permutation must have n entries");
  return doc;
}

std::string verification_to_json(const ReductionResult& res, const OptimalityReport& opt,
                                 const VerificationReport& ver) {
  json j;
  j["n"] = res.n;
  j["r"] = res.r;
  j["c"] = res.c;
  j["active"] = res.active;
  json checks = json::array();
  for (const CheckResult& c : ver.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"deviation", c.deviation},
                      {"tolerance", c.tolerance}});
  }
  j["checks"] = checks;
  j["optimality"] = {{"dimM", opt.bound.dim},
                     {"rankM", opt.bound.rank},
                     {"expected_r", opt.expected_r},
                     {"expected_c", opt.expected_c},
                     {"expected_active", opt.expected_active},
                     {"pass", opt.pass()}};
  j["all_pass"] = ver.all_pass() && opt.pass();
  return j.dump(2) + "\n";
}

}  // namespace minrep
