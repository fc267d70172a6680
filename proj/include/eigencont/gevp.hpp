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

#include "eigencont/statevector.hpp"

namespace eigencont {

struct GevpSolution {
  std::vector<double> energies;         // ascending, one per retained direction
  std::vector<CVector> coeff_vectors;   // c with c^dag S c = 1, phase-fixed
  int retained_rank = 0;
  double threshold_used = 0.0;          // relative eps
  std::vector<double> kept_overlap_eigenvalues;  // descending
};

inline constexpr double kDefaultExactEps = 1e-12;
inline constexpr double kDefaultShotsEps = 1e-2;

/// Solves H c = E S c by canonical orthogonalization.
///
/// S = V D V^dag; directions with d_i >= eps * d_max and d_i > 0 are kept,
/// W = V_kept D_kept^{-1/2}, and the r x r Hermitian problem W^dag H W is
/// diagonalized. Inputs within 1e-8 of Hermitian are symmetrized; anything
/// worse throws NumericsError, as does a retained rank of 0.
GevpSolution solve_gevp(const CMatrix& h, const CMatrix& s, double eps);

}  // namespace eigencont
