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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigencont/pauli.hpp"
#include "eigencont/statevector.hpp"

namespace eigencont {

// Eigenstate `index` (0 = ground) of H(g).
struct TrainingPoint {
  double g = 0.0;
  int index = 0;
};
using TrainingSpec = std::vector<TrainingPoint>;

struct TrainingSet {
  std::vector<StateVector> states;  // normalized, phase-fixed
  TrainingSpec spec;

  std::size_t size() const noexcept { return states.size(); }
};

TrainingSet build_training_set(const ParamHamiltonian& h,
                               const TrainingSpec& spec);

// Bit-flip probabilities on the measured ancilla.
struct ReadoutNoise {
  double eps01 = 0.0;  // read 1 when the true outcome is 0
  double eps10 = 0.0;  // read 0 when the true outcome is 1
};

enum class MeasurementMode { exact, shots };

struct MeasurementConfig {
  MeasurementMode mode = MeasurementMode::exact;
  std::int64_t shots = 20000;
  std::uint64_t seed = 0;
  std::optional<ReadoutNoise> noise;
  bool mitigate = false;

  // Throws InvalidArgument on shots < 1 (shots mode) or eps outside [0, 0.5).
  void validate() const;
};

enum class Part { real, imag };

// Identifies one Hadamard-test estimator. `term` is -1 for the overlap and
// the Hamiltonian term index otherwise.
struct EstimatorKey {
  int i = 0;
  int j = 0;
  int term = -1;
  Part part = Part::real;
};

// Seed of the independent random stream used by one estimator. Depends only
// on the master seed and the key, never on evaluation order.
std::uint64_t substream_seed(std::uint64_t master_seed, const EstimatorKey& key);

/// Simulated Hadamard test for Re or Im of <u|P|v> (P = identity when
/// `pauli` is null).
///
/// Exact mode returns the value itself. Shots mode draws `cfg.shots` ancilla
/// outcomes with P(0) = (1 + a)/2, flips each through the readout noise if
/// configured, optionally inverts the confusion matrix, and returns
/// 2 p0_hat - 1.
double hadamard_estimate(const StateVector& u, const StateVector& v,
                         const PauliString* pauli, Part part,
                         const MeasurementConfig& cfg, std::uint64_t stream);

// Inverts the 2x2 confusion map for the probability of outcome 0, clamped to
// [0, 1]. Throws NumericsError when eps01 + eps10 >= 1.
double mitigate_readout(double p0_observed, const ReadoutNoise& noise);

struct SubspaceMatrices {
  CMatrix overlap;             // S
  std::vector<CMatrix> terms;  // T^k, aligned with ParamHamiltonian::terms()
  MeasurementMode mode = MeasurementMode::exact;
  std::size_t estimator_calls = 0;

  int dim() const noexcept { return static_cast<int>(overlap.rows()); }
};

/// Measures S_ij = <phi_i|phi_j> and T^k_ij = <phi_i|P^k|phi_j> once for the
/// training set. Only i <= j is measured; the lower triangle is the conjugate.
/// In shots mode S_ii is fixed to 1 and Im T^k_ii to 0 without measurement.
SubspaceMatrices measure_subspace(const TrainingSet& ts,
                                  const ParamHamiltonian& h,
                                  const MeasurementConfig& cfg);

struct ProjectedProblem {
  CMatrix hamiltonian;  // sum_k c_k(g) T^k + offset(g) S
  CMatrix overlap;
};

ProjectedProblem assemble(const SubspaceMatrices& sm, const ParamHamiltonian& h,
                          double g);

// JSON document with S, every T^k as [re, im] pairs, and term metadata.
std::string matrices_to_json(const SubspaceMatrices& sm,
                             const ParamHamiltonian& h, const TrainingSet& ts);

}  // namespace eigencont
