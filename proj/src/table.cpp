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

#include "minrep/table.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "minrep/error.hpp"
#include "minrep/io.hpp"
#include "minrep/models.hpp"
#include "minrep/reduction.hpp"

namespace minrep {

namespace {

struct Expected {
  std::size_t size;
  std::size_t n, c, active;
};

TableRow run_row(const std::string& model, const std::string& size, const Expected& e,
                 const std::function<Hamiltonian()>& make) {
  TableRow row;
  row.model = model;
  row.size = size;
  row.expected_n = e.n;
  row.expected_c = e.c;
  row.expected_active = e.active;
  const auto start = std::chrono::steady_clock::now();
  const Hamiltonian h = make();
  const ReductionResult res = reduce(h);
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  row.n = res.n;
  row.r = res.r;
  row.c = res.c;
  row.active = res.active;
  const bool ok = row.n == e.n && row.c == e.c && row.active == e.active;
  row.status = ok ? RowStatus::Match : RowStatus::Mismatch;
  return row;
}

TableRow skipped(const std::string& model, const Expected& e, const std::string& note) {
  TableRow row;
  row.model = model;
  row.size = "-";
  row.expected_n = e.n;
  row.expected_c = e.c;
  row.expected_active = e.active;
  row.note = note;
  return row;
}

std::string square(std::size_t l) { return std::to_string(l) + "x" + std::to_string(l); }

}  // namespace

const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "MATCH";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

std::vector<TableRow> reproduce_table(const std::string& chem_path) {
  std::vector<TableRow> rows;

  const Expected h2{0, 4, 3, 1};
  if (chem_path.empty()) {
    rows.push_back(skipped("H2", h2, "no input (--chem)"));
  } else {
    rows.push_back(run_row("H2", "file", h2, [&] { return load_hamiltonian(chem_path); }));
  }
  rows.push_back(skipped("LiH", {0, 12, 4, 8}, "no input"));
  rows.push_back(skipped("BeH2", {0, 14, 5, 9}, "no input"));

  const Expected z2[] = {{2, 8, 5, 3},      {5, 50, 26, 24},   {6, 72, 37, 35},
                         {7, 98, 50, 48},   {10, 200, 101, 99}, {15, 450, 226, 224}};
  for (const Expected& e : z2) {
    rows.push_back(run_row("Z2 LGT", square(e.size), e, [&] {
      LatticeSpec s;
      s.kind = ModelKind::Z2Lgt;
      s.rows = s.cols = e.size;
      return z2_lgt(s);
    }));
  }

  const std::size_t hubbard_sizes[][2] = {{1, 2}, {2, 2}, {2, 3}, {3, 3}};
  for (const auto& hs : hubbard_sizes) {
    const std::size_t sites = hs[0] * hs[1];
    const Expected e{0, 2 * sites, 2, 2 * (sites - 1)};
    rows.push_back(run_row("Hubbard", std::to_string(hs[0]) + "x" + std::to_string(hs[1]), e, [&] {
      LatticeSpec s;
      s.kind = ModelKind::Hubbard;
      s.rows = hs[0];
      s.cols = hs[1];
      return hubbard(s);
    }));
  }

  const Expected kitaev_plain[] = {{1, 4, 3, 1},      {2, 12, 6, 6},      {5, 60, 25, 35},
                                   {10, 220, 98, 122}, {15, 480, 220, 260}};
  for (const Expected& e : kitaev_plain) {
    rows.push_back(run_row("Kitaev", square(e.size), e, [&] {
      LatticeSpec s;
      s.kind = ModelKind::Kitaev;
      s.rows = s.cols = e.size;
      return kitaev(s);
    }));
  }

  const Expected kitaev_field[] = {{1, 4, 2, 2},      {2, 12, 3, 9},      {5, 60, 6, 54},
                                   {10, 220, 11, 209}, {15, 480, 16, 464}};
  for (const Expected& e : kitaev_field) {
    rows.push_back(run_row("Kitaev+field", square(e.size), e, [&] {
      LatticeSpec s;
      s.kind = ModelKind::Kitaev;
      s.rows = s.cols = e.size;
      s.with_field = true;
      return kitaev(s);
    }));
  }
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-13s %-7s %15s %15s %9s  %s\n", "model", "size",
                "expected n/c/q", "measured n/c/q", "seconds", "status");
  out += buf;
  for (const TableRow& row : rows) {
    const std::string expected = std::to_string(row.expected_n) + "/" +
                                 std::to_string(row.expected_c) + "/" +
                                 std::to_string(row.expected_active);
    std::string measured = "-";
    std::string seconds = "-";
    if (row.status != RowStatus::Skipped) {
      measured = std::to_string(row.n) + "/" + std::to_string(row.c) + "/" + std::to_string(row.active);
      std::snprintf(buf, sizeof buf, "%.3f", row.seconds);
      seconds = buf;
    }
    std::string status = row_status_name(row.status);
    if (!row.note.empty()) status += "(" + row.note + ")";
    std::snprintf(buf, sizeof buf, "%-13s %-7s %15s %15s %9s  %s\n", row.model.c_str(),
                  row.size.c_str(), expected.c_str(), measured.c_str(), seconds.c_str(),
                  status.c_str());
    out += buf;
  }
  return out;
}

}  // namespace minrep
