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

#include <vector>

#include "eigencont/pauli.hpp"
#include "eigencont/statevector.hpp"

namespace eigencont {

struct EigenPair {
  double energy = 0.0;
  StateVector vector;  // phase-fixed, normalized
};

// Dense 2^n x 2^n matrix of H(g). Throws DimensionError above max_qubits().
CMatrix dense_matrix(const ParamHamiltonian& h, double g);

/// The k lowest eigenpairs of H(g), ascending in energy.
///
/// Levels closer than 1e-9 form a degenerate block whose basis is made
/// canonical: vectors are built by projecting e_0, e_1, ... onto the block in
/// index order (Gram-Schmidt, dropping residuals below 1e-6), so the result
/// does not depend on the eigensolver's arbitrary rotation within the block.
/// Within a block, vectors are ordered by their first significant amplitude.
std::vector<EigenPair> lowest_eigenstates(const ParamHamiltonian& h, double g,
                                          int k);

// All eigenvalues of H(g), ascending.
std::vector<double> spectrum(const ParamHamiltonian& h, double g);

}  // namespace eigencont
