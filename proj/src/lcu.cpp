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

#include "eigencont/lcu.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "eigencont/error.hpp"

namespace eigencont {

namespace {

int ceil_log2(std::size_t m) {
  int n = 0;
  while ((std::size_t{1} << n) < m) ++n;
  return n;
}

// Applies U to the system register on the branch where the ancilla register
// (the leading n_anc qubits) holds `branch`.
CVector apply_on_branch(const DenseUnitary& u, const CVector& amps, int n_anc,
                        std::size_t branch) {
  const auto block = amps.size() >> n_anc;
  CVector out = amps;
  out.segment(static_cast<Eigen::Index>(branch) * block, block) =
      u.matrix() * amps.segment(static_cast<Eigen::Index>(branch) * block, block);
  return out;
}

}  // namespace

DenseUnitary two_term_rotation(double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw InvalidArgument("V_k requires a finite k >= 0");
  }
  const double a = std::sqrt(k / (k + 1.0));
  const double b = 1.0 / std::sqrt(k + 1.0);
  CMatrix v(2, 2);
  v << a, -b, b, a;
  return DenseUnitary(std::move(v));
}

LcuPreparer::LcuPreparer(const TrainingSet& ts) {
  if (ts.size() == 0) throw InvalidArgument("LCU needs at least one state");
  n_system_ = ts.states.front().n_qubits();
  unitaries_.reserve(ts.size());
  for (const auto& s : ts.states) unitaries_.push_back(state_to_unitary(s));
}

LcuPlan LcuPreparer::plan(std::span<const Complex> coeffs) const {
  if (coeffs.size() != unitaries_.size()) {
    throw InvalidArgument("expected " + std::to_string(unitaries_.size()) +
                          " LCU coefficients, got " +
                          std::to_string(coeffs.size()));
  }
  LcuPlan p;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const double r = std::abs(coeffs[m]);
    const Complex phase = r > 0.0 ? coeffs[m] / r : Complex{1.0, 0.0};
    p.weights.push_back(r);
    p.unitaries.push_back(unitaries_[m].with_phase(phase / std::abs(phase)));
  }
  p.lambda = std::accumulate(p.weights.begin(), p.weights.end(), 0.0);
  if (!(p.lambda > 0.0)) throw InvalidArgument("LCU coefficients are all zero");
  p.n_ancilla = ceil_log2(coeffs.size());
  p.prepare_amplitudes = CVector::Zero(Eigen::Index{1} << p.n_ancilla);
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    p.prepare_amplitudes[static_cast<Eigen::Index>(m)] =
        std::sqrt(p.weights[m] / p.lambda);
  }
  p.prepare_amplitudes /= p.prepare_amplitudes.norm();
  return p;
}

LcuResult LcuPreparer::combine(std::span<const Complex> coeffs) const {
  const LcuPlan p = plan(coeffs);
  const StateVector zero = StateVector::zero(n_system_);

  if (p.n_ancilla == 0 || (coeffs.size() == 2 && p.weights[1] == 0.0)) {
    // single unitary, or k = r0/r1 undefined: the combination is U_a|0>
    StateVector s = apply_dense(p.unitaries.front(), zero);
    return {s, s, 1.0};
  }

  // |0>_anc |0>_sys
  StateVector state = StateVector::zero(p.n_ancilla + n_system_);
  std::vector<int> anc(static_cast<std::size_t>(p.n_ancilla));
  std::iota(anc.begin(), anc.end(), 0);

  const DenseUnitary prepare =
      coeffs.size() == 2
          ? two_term_rotation(p.weights[0] / p.weights[1])
          : state_to_unitary(StateVector(p.prepare_amplitudes));
  state = apply_dense_on(prepare, state, anc);

  if (p.n_ancilla == 1) {
    // U_a on ancilla |0>, U_b on ancilla |1>
    const DenseUnitary x(CMatrix{{0.0, 1.0}, {1.0, 0.0}});
    const std::vector<int> a0{0};
    state = apply_dense_on(x, state, a0);
    state = controlled_apply(p.unitaries[0], state, 0);
    state = apply_dense_on(x, state, a0);
    if (p.unitaries.size() > 1) state = controlled_apply(p.unitaries[1], state, 0);
  } else {
    CVector amps = state.amplitudes();
    for (std::size_t m = 0; m < p.unitaries.size(); ++m) {
      amps = apply_on_branch(p.unitaries[m], amps, p.n_ancilla, m);
    }
    state = StateVector(std::move(amps));
  }
  state = apply_dense_on(prepare.adjoint(), state, anc);

  const auto block = static_cast<Eigen::Index>(zero.dim());
  StateVector kept(CVector(state.amplitudes().head(block)));
  const double prob = kept.norm() * kept.norm();
  // below this the branch is rounding noise from an exact cancellation
  if (!(prob > 1e-24)) {
    throw NumericsError("LCU post-selection has zero success probability");
  }
  return {kept.normalized(), kept, prob};
}

LcuResult lcu_combine(const TrainingSet& ts, std::span<const Complex> coeffs) {
  return LcuPreparer(ts).combine(coeffs);
}

double energy_expectation(const StateVector& v, const ParamHamiltonian& h,
                          double g) {
  const Complex e = inner_product(v, apply_hamiltonian(h, g, v));
  double scale = 1.0;
  const auto coeffs = coefficients_at(h, g);
  for (const auto& t : coeffs.terms) scale += std::abs(t.coefficient);
  scale += std::abs(coeffs.offset);
  if (std::abs(e.imag()) > 1e-10 * scale) {
    throw NumericsError("energy expectation has an imaginary part of " +
                        std::to_string(e.imag()));
  }
  return e.real();
}

}  // namespace eigencont
