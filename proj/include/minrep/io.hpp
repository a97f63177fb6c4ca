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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "minrep/oracle.hpp"
#include "minrep/pauli.hpp"
#include "minrep/reduction.hpp"

namespace minrep {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

/// Line-oriented Hamiltonian text:
///
///   # comment
///   qubits 3
///   1 XXI
///   -0.5 ZIZ
///   offset 0.25
///
/// The coefficient is the full weight of the string; identity strings are
/// folded into the offset. Errors carry the 1-based line number.
Hamiltonian parse_hamiltonian(std::string_view text);
std::string format_hamiltonian(const Hamiltonian& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
Hamiltonian load_hamiltonian(const std::string& path);

/// A reduction report as written by report_to_json.
struct ReportDocument {
  ReductionResult result;
  std::size_t dim_m = 0;
  std::size_t rank_m = 0;
  bool optimal = false;
};

std::string report_to_json(const ReductionResult& res, const OptimalityReport& opt);
ReportDocument report_from_json(std::string_view text);

std::string verification_to_json(const ReductionResult& res, const OptimalityReport& opt,
                                 const VerificationReport& ver);

}  // namespace minrep
