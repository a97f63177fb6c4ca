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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minrep/minrep.h"

namespace {

constexpr int kExitArgument = 2;
constexpr int kExitIo = 3;

struct Failure {
  int code;
};

using HamPtr = std::unique_ptr<minrep_hamiltonian, decltype(&minrep_hamiltonian_free)>;
using ResPtr = std::unique_ptr<minrep_result, decltype(&minrep_result_free)>;

void check(minrep_status s) {
  if (s != MINREP_OK) {
    std::cerr << "minrep: " << minrep_last_error() << "\n";
    throw Failure{static_cast<int>(s)};
  }
}

std::string take(char* s) {
  std::string out(s == nullptr ? "" : s);
  minrep_string_free(s);
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "minrep: cannot open '" << path << "' for reading\n";
    throw Failure{kExitIo};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "minrep: cannot write '" << path << "'\n";
    throw Failure{kExitIo};
  }
}

HamPtr load(const std::string& path) {
  minrep_hamiltonian* h = nullptr;
  check(minrep_hamiltonian_load(path.c_str(), &h));
  return HamPtr(h, minrep_hamiltonian_free);
}

void parse_size(const std::string& text, std::size_t& rows, std::size_t& cols) {
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(part, &used);
    if (used != part.size()) throw std::invalid_argument(part);
    return static_cast<std::size_t>(v);
  };
  const std::size_t x = text.find_first_of("xX");
  try {
    rows = number(text.substr(0, x));
    cols = x == std::string::npos ? rows : number(text.substr(x + 1));
  } catch (const std::exception&) {
    std::cerr << "minrep: --size expects R or RxC, got '" << text << "'\n";
    throw Failure{kExitArgument};
  }
}

std::string default_circuit_path(const std::string& report) {
  const std::string suffix = ".json";
  std::string base = report;
  if (base.size() > suffix.size() && base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
    base.resize(base.size() - suffix.size());
  }
  return base + ".circuit";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford reduction of Pauli Hamiltonians to their minimal qubit count"};
  app.require_subcommand(1);

  std::string gen_kind, gen_size, gen_out;
  std::vector<std::string> gen_params;
  bool gen_field = false;
  std::size_t gen_n = 0;
  auto* gen = app.add_subcommand("generate", "Write a model Hamiltonian file");
  gen->add_option("kind", gen_kind, "z2, hubbard, kitaev or j1j2")->required();
  gen->add_option("--size", gen_size, "Lattice extent R or RxC");
  gen->add_flag("--field", gen_field, "Add the Z field (kitaev)");
  gen->add_option("--params", gen_params, "Model parameters name=value");
  gen->add_option("--n", gen_n, "Chain length (j1j2)");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  std::string red_in, red_out, red_circuit;
  auto* red = app.add_subcommand("reduce", "Reduce a Hamiltonian file");
  red->add_option("input", red_in, "Hamiltonian file")->required();
  red->add_option("--out", red_out, "Report JSON path (default <input>.report.json)");
  red->add_option("--circuit", red_circuit, "Circuit text path (default next to the report)");

  std::string sec_report, sec_z, sec_out;
  auto* sec = app.add_subcommand("sector", "Write the Hamiltonian of one charge sector");
  sec->add_option("report", sec_report, "Report JSON from reduce")->required();
  sec->add_option("--z", sec_z, "Charge bits, one per charge")->required();
  sec->add_option("--out", sec_out, "Output file (default stdout)");

  std::string ver_in, ver_report, ver_out;
  std::size_t ver_cap = 0;
  auto* ver = app.add_subcommand("verify", "Check a reduction against dense linear algebra");
  ver->add_option("input", ver_in, "Hamiltonian file")->required();
  ver->add_option("--report", ver_report, "Check this report instead of reducing afresh");
  ver->add_option("--cap-n", ver_cap, "Largest qubit count to verify (default 10)");
  ver->add_option("--out", ver_out, "Verification JSON path (default stdout)");

  std::string tab_chem;
  auto* tab = app.add_subcommand("table", "Regenerate the benchmark table");
  tab->add_option("--chem", tab_chem, "H2 Hamiltonian file for the chemistry row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitArgument;
  }

  try {
    if (*gen) {
      std::size_t rows = 0, cols = 0;
      if (gen_kind == "j1j2") {
        rows = gen_n;
        if (rows == 0 && !gen_size.empty()) parse_size(gen_size, rows, cols);
        cols = 1;
      } else {
        if (gen_size.empty()) {
          std::cerr << "minrep: generate " << gen_kind << " needs --size\n";
          return kExitArgument;
        }
        parse_size(gen_size, rows, cols);
      }
      std::string params;
      for (const auto& p : gen_params) params += (params.empty() ? "" : ",") + p;
      minrep_hamiltonian* h = nullptr;
      check(minrep_hamiltonian_generate(gen_kind.c_str(), rows, cols, gen_field ? 1 : 0,
                                        params.c_str(), &h));
      HamPtr owned(h, minrep_hamiltonian_free);
      char* text = nullptr;
      check(minrep_hamiltonian_to_string(h, &text));
      write_text(gen_out, take(text));
      return 0;
    }

    if (*red) {
      HamPtr h = load(red_in);
      minrep_result* r = nullptr;
      check(minrep_reduce(h.get(), &r));
      ResPtr res(r, minrep_result_free);
      const std::string report_path = red_out.empty() ? red_in + ".report.json" : red_out;
      const std::string circuit_path = red_circuit.empty() ? default_circuit_path(report_path) : red_circuit;
      char* json = nullptr;
      check(minrep_result_report_json(r, &json));
      write_text(report_path, take(json));
      char* circ = nullptr;
      check(minrep_result_circuit_text(r, &circ));
      write_text(circuit_path, take(circ));
      std::size_t n = 0, rr = 0, c = 0, active = 0;
      check(minrep_result_counts(r, &n, &rr, &c, &active));
      std::cout << "n=" << n << " r=" << rr << " c=" << c << " active=" << active << "\n";
      return 0;
    }

    if (*sec) {
      const std::string text = read_text(sec_report);
      minrep_result* r = nullptr;
      check(minrep_result_from_json(text.c_str(), &r));
      ResPtr res(r, minrep_result_free);
      minrep_hamiltonian* h = nullptr;
      check(minrep_sector(r, sec_z.c_str(), &h));
      HamPtr owned(h, minrep_hamiltonian_free);
      char* out = nullptr;
      check(minrep_hamiltonian_to_string(h, &out));
      write_text(sec_out, take(out));
      return 0;
    }

    if (*ver) {
      HamPtr h = load(ver_in);
      ResPtr res(nullptr, minrep_result_free);
      if (!ver_report.empty()) {
        const std::string text = read_text(ver_report);
        minrep_result* r = nullptr;
        check(minrep_result_from_json(text.c_str(), &r));
        res.reset(r);
      }
      char* json = nullptr;
      int pass = 0;
      check(minrep_verify(h.get(), res.get(), ver_cap, &json, &pass));
      write_text(ver_out, take(json));
      std::cerr << (pass ? "verify: all checks pass\n" : "verify: FAILED\n");
      return pass ? 0 : 1;
    }

    if (*tab) {
      char* text = nullptr;
      std::size_t mismatches = 0;
      check(minrep_table(tab_chem.empty() ? nullptr : tab_chem.c_str(), &text, &mismatches));
      std::cout << take(text);
      return mismatches == 0 ? 0 : 1;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
