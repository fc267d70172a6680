// Copyright 2026 The eigencont Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eigencont/models.hpp"

#include <string>
#include <utility>
#include <vector>

#include "eigencont/error.hpp"

namespace eigencont {

namespace {

std::vector<std::pair<int, int>> bonds(int n, Boundary bc) {
  if (n < 2) throw InvalidArgument("spin chain needs at least 2 sites");
  if (bc == Boundary::periodic && n < 3) {
    throw InvalidArgument("periodic chain needs at least 3 sites");
  }
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
  if (bc == Boundary::periodic) out.emplace_back(n - 1, 0);
  return out;
}

}  // namespace

Boundary parse_boundary(std::string_view name) {
  if (name == "open") return Boundary::open;
  if (name == "periodic") return Boundary::periodic;
  throw InvalidArgument("unknown boundary condition '" + std::string(name) +
                        "' (expected open or periodic)");
}

std::string_view to_string(Boundary bc) {
  return bc == Boundary::open ? "open" : "periodic";
}

ParamHamiltonian build_xy(int n, double j, double bx, Boundary bc) {
  const auto bs = bonds(n, bc);
  std::vector<HamiltonianTerm> terms;
  for (auto [a, b] : bs) {
    terms.push_back({PauliString::pair(n, a, b, Pauli::X), ConstantRule{j}});
  }
  for (auto [a, b] : bs) {
    terms.push_back({PauliString::pair(n, a, b, Pauli::Y), ConstantRule{j}});
  }
  for (int i = 0; i < n; ++i) {
    terms.push_back({PauliString::single(n, i, Pauli::Z), LinearRule{0.0, 1.0}});
  }
  for (int i = 0; i < n; ++i) {
    terms.push_back({PauliString::single(n, i, Pauli::X), ConstantRule{bx}});
  }
  return ParamHamiltonian(n, std::move(terms));
}

ParamHamiltonian build_xxz(int n, double j, Boundary bc) {
  const auto bs = bonds(n, bc);
  std::vector<HamiltonianTerm> terms;
  for (auto [a, b] : bs) {
    terms.push_back({PauliString::pair(n, a, b, Pauli::X), ConstantRule{j}});
  }
  for (auto [a, b] : bs) {
    terms.push_back({PauliString::pair(n, a, b, Pauli::Y), ConstantRule{j}});
  }
  for (auto [a, b] : bs) {
    terms.push_back({PauliString::pair(n, a, b, Pauli::Z), LinearRule{0.0, -1.0}});
  }
  return ParamHamiltonian(n, std::move(terms));
}

ParamHamiltonian build_h2(std::shared_ptr<const CoefficientTable> table) {
  if (!table) throw InvalidArgument("build_h2: no coefficient table");
  for (const char* col : {"c_II", "c_ZI", "c_IZ", "c_ZZ", "c_XX", "E_nuc"}) {
    if (!table->column_index(col)) {
      throw DataError(std::string("H2 coefficient table is missing column ") +
                      col);
    }
  }
  std::vector<HamiltonianTerm> terms{
      {PauliString::parse("ZI"), TableColumnRule{"c_ZI"}},
      {PauliString::parse("IZ"), TableColumnRule{"c_IZ"}},
      {PauliString::parse("ZZ"), TableColumnRule{"c_ZZ"}},
      {PauliString::parse("XX"), TableColumnRule{"c_XX"}},
  };
  std::vector<CoefficientRule> offset{TableColumnRule{"c_II"},
                                      TableColumnRule{"E_nuc"}};
  return ParamHamiltonian(2, std::move(terms), std::move(offset),
                          std::move(table));
}

}  // namespace eigencont
