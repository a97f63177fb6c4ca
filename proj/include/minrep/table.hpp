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
#include <vector>

namespace minrep {

enum class RowStatus { Match, Mismatch, Skipped };

/// One benchmark row: the reference (n, c, qubits required) next to the
/// values measured by generate + reduce.
struct TableRow {
  std::string model;
  std::string size;
  std::size_t expected_n = 0;
  std::size_t expected_c = 0;
  std::size_t expected_active = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t c = 0;
  std::size_t active = 0;
  RowStatus status = RowStatus::Skipped;
  double seconds = 0.0;
  std::string note;
};

/// Runs every lattice row. Chemistry rows are skipped, except H2 when
/// `chem_path` names a 4-qubit Hamiltonian file.
std::vector<TableRow> reproduce_table(const std::string& chem_path = "");

std::string format_table(const std::vector<TableRow>& rows);

const char* row_status_name(RowStatus s);

}  // namespace minrep
