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

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace eigencont {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Qubit cap for dense objects. Defaults to 12; the EIGENCONT_MAX_QUBITS
// environment variable overrides it.
int max_qubits();

/// Dense statevector over `n_qubits` qubits.
///
/// Qubit 0 is the most significant bit of the basis index, so the basis state
/// |q0 q1 ... q_{n-1}> has index sum_q q_k 2^(n-1-k). Normalization is not
/// enforced here; callers that require it check `is_normalized()`.
class StateVector {
 public:
  StateVector() = default;
  // Takes ownership of amplitudes; size must be a power of two.
  explicit StateVector(CVector amplitudes);

  // |0...0> on n qubits.
  static StateVector zero(int n_qubits);
  static StateVector basis(int n_qubits, std::size_t index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(amps_.size());
  }
  const CVector& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amps_.norm(); }
  bool is_normalized(double tol = 1e-10) const;
  StateVector normalized() const;

 private:
  int n_qubits_ = 0;
  CVector amps_;
};

/// Unitary on `n_qubits` qubits. Construction verifies U^dagger U = I to
/// 1e-10 in max-norm and throws InvalidArgument otherwise.
class DenseUnitary {
 public:
  explicit DenseUnitary(CMatrix entries);

  static DenseUnitary identity(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  const CMatrix& matrix() const noexcept { return entries_; }
  DenseUnitary adjoint() const;
  // Multiplies by a unit-modulus scalar; the result is still unitary.
  DenseUnitary with_phase(Complex phase) const;

 private:
  DenseUnitary(CMatrix entries, int n_qubits)
      : n_qubits_(n_qubits), entries_(std::move(entries)) {}
  int n_qubits_ = 0;
  CMatrix entries_;
};

// <u|v>, conjugating u.
Complex inner_product(const StateVector& u, const StateVector& v);

StateVector apply_dense(const DenseUnitary& u, const StateVector& v);

// Applies `u` to the listed qubits of `v`; targets[0] is the most
// significant qubit of u's local index.
StateVector apply_dense_on(const DenseUnitary& u, const StateVector& v,
                           std::span<const int> targets);

// Completes a normalized state to a unitary with first column `phi`. Remaining
// columns come from Gram-Schmidt over e_0, e_1, ... in index order; candidates
// whose residual norm is below 1e-8 are skipped.
DenseUnitary state_to_unitary(const StateVector& phi);

// Applies `u` to `targets` on the branch where `control` is |1>.
StateVector controlled_apply(const DenseUnitary& u, const StateVector& v,
                             int control, std::span<const int> targets);
// Same, with targets = every qubit except `control`, in ascending order.
StateVector controlled_apply(const DenseUnitary& u, const StateVector& v,
                             int control);

// Rotates the global phase so the first amplitude with modulus > 1e-9 is real
// and positive.
StateVector phase_fix(const StateVector& v);
// Same convention on a raw coefficient vector.
CVector phase_fix(const CVector& v);

}  // namespace eigencont
