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

#pragma once

#include <memory>
#include <string_view>

#include "eigencont/pauli.hpp"

namespace eigencont {

enum class Boundary { open, periodic };

// Parses "open" / "periodic".
Boundary parse_boundary(std::string_view name);
std::string_view to_string(Boundary bc);

/// Transverse-field XY chain, continuation parameter g = B_z:
///   H = sum_bonds J (X_i X_j + Y_i Y_j) + g sum_i Z_i + Bx sum_i X_i
/// Terms are ordered: all XX bonds, all YY bonds, all Z, all X. Periodic
/// chains need n >= 3 (for n = 2 the wrap bond repeats the only bond).
ParamHamiltonian build_xy(int n, double j, double bx,
                          Boundary bc = Boundary::open);

/// XXZ chain, continuation parameter g = J_z:
///   H = sum_bonds J (X_i X_j + Y_i Y_j) - g Z_i Z_j
ParamHamiltonian build_xxz(int n, double j, Boundary bc = Boundary::open);

/// Two-qubit H2 Hamiltonian keyed by bond length R.
///
/// The table must provide columns c_II, c_ZI, c_IZ, c_ZZ, c_XX and E_nuc.
/// ZI, IZ, ZZ and XX become Pauli terms; c_II and E_nuc go into the scalar
/// offset, so energies include nuclear repulsion.
ParamHamiltonian build_h2(std::shared_ptr<const CoefficientTable> table);

}  // namespace eigencont
