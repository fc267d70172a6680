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

#include <span>
#include <vector>

#include "eigencont/pauli.hpp"
#include "eigencont/statevector.hpp"
#include "eigencont/subspace.hpp"

namespace eigencont {

struct LcuPlan {
  std::vector<DenseUnitary> unitaries;  // e^{i theta_m} U_m
  std::vector<double> weights;          // r_m = |c_m|
  int n_ancilla = 0;                    // ceil(log2 M)
  CVector prepare_amplitudes;           // sqrt(w_m / lambda), zero-padded
  double lambda = 0.0;                  // sum of weights
};

struct LcuResult {
  StateVector state;         // normalized post-selected system state
  StateVector postselected;  // ancilla-|0...0> branch before renormalization
  double success_probability = 0.0;
};

// 2x2 ancilla rotation V_k whose first column is (sqrt(k/(k+1)), 1/sqrt(k+1)).
DenseUnitary two_term_rotation(double k);

/// Prepares sum_m c_m |phi_m> by linear combination of the training unitaries
/// U_m |0...0> = |phi_m>.
///
/// Coefficient phases are absorbed into the unitaries. The circuit is
/// prepare / select / unprepare on ceil(log2 M) ancillas placed above the
/// system register, followed by projection onto ancilla |0...0>. With two
/// terms the prepare step is V_k with k = r_0 / r_1; a zero r_1 short-cuts
/// to U_a |0...0>.
class LcuPreparer {
 public:
  explicit LcuPreparer(const TrainingSet& ts);

  LcuPlan plan(std::span<const Complex> coeffs) const;
  LcuResult combine(std::span<const Complex> coeffs) const;

  std::size_t size() const noexcept { return unitaries_.size(); }

 private:
  int n_system_;
  std::vector<DenseUnitary> unitaries_;
};

LcuResult lcu_combine(const TrainingSet& ts, std::span<const Complex> coeffs);

// Re <v|H(g)|v>; throws NumericsError if the imaginary part exceeds 1e-10
// relative to the coefficient scale.
double energy_expectation(const StateVector& v, const ParamHamiltonian& h,
                          double g);

}  // namespace eigencont
