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

#include "minrep/minrep.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <string>

#include "minrep/error.hpp"
#include "minrep/io.hpp"
#include "minrep/models.hpp"
#include "minrep/oracle.hpp"
#include "minrep/reduction.hpp"
#include "minrep/table.hpp"

struct minrep_hamiltonian {
  minrep::Hamiltonian value;
};

struct minrep_result {
  minrep::ReductionResult value;
  minrep::OptimalityReport optimality;
};

namespace {

thread_local std::string g_last_error;

minrep_status set_error(minrep_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
minrep_status guarded(F&& body) {
  try {
    body();
    return MINREP_OK;
  } catch (const minrep::Error& e) {
    return set_error(static_cast<minrep_status>(static_cast<int>(e.kind())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MINREP_ERR_CAPABILITY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MINREP_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::map<std::string, double> parse_params(const char* text) {
  std::map<std::string, double> out;
  if (text == nullptr) return out;
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) {
      const std::string item = s.substr(i, j - i);
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        minrep::fail(minrep::ErrorKind::Input, "parameter '" + item + "' is not name=value");
      }
      const std::string value = item.substr(eq + 1);
      char* end = nullptr;
      const double v = std::strtod(value.c_str(), &end);
      if (value.empty() || end != value.c_str() + value.size()) {
        minrep::fail(minrep::ErrorKind::Input, "parameter '" + item + "' has a non-numeric value");
      }
      out[item.substr(0, eq)] = v;
    }
    i = j;
  }
  return out;
}

#define MINREP_REQUIRE(cond, what) \
  if (!(cond)) return set_error(MINREP_ERR_ARGUMENT, what)

}  // namespace

extern "C" {

const char* minrep_last_error(void) { return g_last_error.c_str(); }

void minrep_string_free(char* s) { std::free(s); }

minrep_status minrep_hamiltonian_parse(const char* text, minrep_hamiltonian** out) {
  MINREP_REQUIRE(text != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = new minrep_hamiltonian{minrep::parse_hamiltonian(text)}; });
}

minrep_status minrep_hamiltonian_load(const char* path, minrep_hamiltonian** out) {
  MINREP_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = new minrep_hamiltonian{minrep::load_hamiltonian(path)}; });
}

minrep_status minrep_hamiltonian_generate(const char* kind, size_t rows, size_t cols,
                                          int with_field, const char* params,
                                          minrep_hamiltonian** out) {
  MINREP_REQUIRE(kind != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    minrep::LatticeSpec spec;
    spec.kind = minrep::parse_model_kind(kind);
    spec.rows = rows;
    spec.cols = cols;
    spec.with_field = with_field != 0;
    spec.params = parse_params(params);
    if (spec.with_field && spec.kind != minrep::ModelKind::Kitaev) {
      minrep::fail(minrep::ErrorKind::Input, "--field applies to the kitaev model only");
    }
    *out = new minrep_hamiltonian{minrep::generate(spec)};
  });
}

minrep_status minrep_hamiltonian_to_string(const minrep_hamiltonian* h, char** out) {
  MINREP_REQUIRE(h != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = copy_string(minrep::format_hamiltonian(h->value)); });
}

size_t minrep_hamiltonian_qubits(const minrep_hamiltonian* h) {
  return h == nullptr ? 0 : h->value.num_qubits();
}

size_t minrep_hamiltonian_num_terms(const minrep_hamiltonian* h) {
  return h == nullptr ? 0 : h->value.terms().size();
}

void minrep_hamiltonian_free(minrep_hamiltonian* h) { delete h; }

minrep_status minrep_reduce(const minrep_hamiltonian* h, minrep_result** out) {
  MINREP_REQUIRE(h != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    auto res = minrep::reduce(h->value);
    auto opt = minrep::optimality_check(h->value, res);
    *out = new minrep_result{std::move(res), opt};
  });
}

minrep_status minrep_result_from_json(const char* json, minrep_result** out) {
  MINREP_REQUIRE(json != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    minrep::ReportDocument doc = minrep::report_from_json(json);
    minrep::OptimalityReport opt;
    opt.bound.n = doc.result.n;
    opt.bound.dim = doc.dim_m;
    opt.bound.rank = doc.rank_m;
    opt.r_pass = opt.c_pass = opt.active_pass = doc.optimal;
    *out = new minrep_result{std::move(doc.result), opt};
  });
}

minrep_status minrep_result_counts(const minrep_result* res, size_t* n, size_t* r, size_t* c,
                                   size_t* active) {
  MINREP_REQUIRE(res != nullptr, "null argument");
  if (n) *n = res->value.n;
  if (r) *r = res->value.r;
  if (c) *c = res->value.c;
  if (active) *active = res->value.active;
  return MINREP_OK;
}

minrep_status minrep_result_report_json(const minrep_result* res, char** out) {
  MINREP_REQUIRE(res != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = copy_string(minrep::report_to_json(res->value, res->optimality)); });
}

minrep_status minrep_result_circuit_text(const minrep_result* res, char** out) {
  MINREP_REQUIRE(res != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = copy_string(minrep::format_circuit(res->value.circuit)); });
}

void minrep_result_free(minrep_result* res) { delete res; }

minrep_status minrep_sector(const minrep_result* res, const char* z_bits, minrep_hamiltonian** out) {
  MINREP_REQUIRE(res != nullptr && z_bits != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    minrep::SectorSpec s;
    try {
      s.z = minrep::BitVec::from_string(z_bits);
    } catch (const std::invalid_argument& e) {
      minrep::fail(minrep::ErrorKind::Input, e.what());
    }
    *out = new minrep_hamiltonian{minrep::sector_hamiltonian(res->value, s)};
  });
}

minrep_status minrep_verify(const minrep_hamiltonian* h, const minrep_result* res, size_t cap_n,
                            char** json_out, int* all_pass) {
  MINREP_REQUIRE(h != nullptr && json_out != nullptr && all_pass != nullptr, "null argument");
  return guarded([&] {
    minrep::OracleCaps caps;
    if (cap_n != 0) {
      caps.verify_max = cap_n;
      caps.dense_max = std::max(caps.dense_max, cap_n);
    }
    if (h->value.num_qubits() > caps.verify_max) {
      minrep::fail(minrep::ErrorKind::Capability,
                   "verification limited to " + std::to_string(caps.verify_max) + " qubits, got " +
                       std::to_string(h->value.num_qubits()) + " (raise with --cap-n)");
    }
    const minrep::ReductionResult reduced =
        res == nullptr ? minrep::reduce(h->value) : minrep::ReductionResult{};
    const minrep::ReductionResult& r = res == nullptr ? reduced : res->value;
    const minrep::OptimalityReport opt = minrep::optimality_check(h->value, r);
    const minrep::VerificationReport ver = minrep::verify_reduction(h->value, r, caps);
    *json_out = copy_string(minrep::verification_to_json(r, opt, ver));
    *all_pass = ver.all_pass() && opt.pass() ? 1 : 0;
  });
}

minrep_status minrep_table(const char* chem_path, char** text_out, size_t* mismatches) {
  MINREP_REQUIRE(text_out != nullptr, "null argument");
  return guarded([&] {
    const auto rows = minrep::reproduce_table(chem_path == nullptr ? "" : chem_path);
    if (mismatches) {
      *mismatches = static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& row) {
        return row.status == minrep::RowStatus::Mismatch;
      }));
    }
    *text_out = copy_string(minrep::format_table(rows));
  });
}

}  // extern "C"
