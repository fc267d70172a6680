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

#include "eigencont/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "eigencont/error.hpp"

namespace eigencont {

namespace {

int log2_exact(Eigen::Index size) {
  if (size <= 0 || (size & (size - 1)) != 0) {
    throw InvalidArgument("dimension " + std::to_string(size) +
                          " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < size) ++n;
  return n;
}

// Shared kernel for local and controlled application. `control` < 0 means
// unconditional.
StateVector apply_local(const CMatrix& u, const StateVector& v,
                        std::span<const int> targets, int control) {
  const int n = v.n_qubits();
  const auto k = static_cast<int>(targets.size());
  if (u.rows() != (Eigen::Index{1} << k)) {
    throw InvalidArgument("unitary acts on " +
                          std::to_string(log2_exact(u.rows())) +
                          " qubits but " + std::to_string(k) +
                          " targets were given");
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int t : targets) {
    if (t < 0 || t >= n) {
      throw InvalidArgument("target qubit " + std::to_string(t) +
                            " out of range");
    }
    if (used[static_cast<std::size_t>(t)]) {
      throw InvalidArgument("duplicate target qubit " + std::to_string(t));
    }
    used[static_cast<std::size_t>(t)] = true;
  }
  if (control >= 0) {
    if (control >= n) {
      throw InvalidArgument("control qubit " + std::to_string(control) +
                            " out of range");
    }
    if (used[static_cast<std::size_t>(control)]) {
      throw InvalidArgument("control qubit overlaps the target register");
    }
  }

  // Bit position of each target inside the global index.
  std::vector<std::size_t> target_bits(static_cast<std::size_t>(k));
  std::size_t target_mask = 0;
  for (int i = 0; i < k; ++i) {
    target_bits[static_cast<std::size_t>(i)] =
        static_cast<std::size_t>(n - 1 - targets[static_cast<std::size_t>(i)]);
    target_mask |= std::size_t{1} << target_bits[static_cast<std::size_t>(i)];
  }
  const std::size_t control_mask =
      control >= 0 ? std::size_t{1} << (n - 1 - control) : 0;

  const std::size_t local_dim = std::size_t{1} << k;
  std::vector<std::size_t> offsets(local_dim);
  for (std::size_t local = 0; local < local_dim; ++local) {
    std::size_t off = 0;
    for (int i = 0; i < k; ++i) {
      // targets[0] is the most significant local bit
      if ((local >> (k - 1 - i)) & 1U) {
        off |= std::size_t{1} << target_bits[static_cast<std::size_t>(i)];
      }
    }
    offsets[local] = off;
  }

  const CVector& in = v.amplitudes();
  CVector out = in;
  CVector gathered(static_cast<Eigen::Index>(local_dim));
  for (std::size_t base = 0; base < v.dim(); ++base) {
    if ((base & target_mask) != 0) continue;
    if (control_mask != 0 && (base & control_mask) == 0) continue;
    for (std::size_t l = 0; l < local_dim; ++l) {
      gathered[static_cast<Eigen::Index>(l)] =
          in[static_cast<Eigen::Index>(base | offsets[l])];
    }
    const CVector mixed = u * gathered;
    for (std::size_t l = 0; l < local_dim; ++l) {
      out[static_cast<Eigen::Index>(base | offsets[l])] =
          mixed[static_cast<Eigen::Index>(l)];
    }
  }
  return StateVector(std::move(out));
}

}  // namespace

int max_qubits() {
  if (const char* env = std::getenv("EIGENCONT_MAX_QUBITS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value < 31) {
      return static_cast<int>(value);
    }
  }
  return 12;
}

StateVector::StateVector(CVector amplitudes)
    : n_qubits_(log2_exact(amplitudes.size())), amps_(std::move(amplitudes)) {}

StateVector StateVector::zero(int n_qubits) { return basis(n_qubits, 0); }

StateVector StateVector::basis(int n_qubits, std::size_t index) {
  if (n_qubits < 0 || n_qubits > 30) {
    throw InvalidArgument("invalid qubit count " + std::to_string(n_qubits));
  }
  const auto dim = Eigen::Index{1} << n_qubits;
  if (static_cast<Eigen::Index>(index) >= dim) {
    throw InvalidArgument("basis index out of range");
  }
  CVector amps = CVector::Zero(dim);
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(std::move(amps));
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  return StateVector(amps_ / nrm);
}

DenseUnitary::DenseUnitary(CMatrix entries) {
  if (entries.rows() != entries.cols()) {
    throw InvalidArgument("unitary must be square");
  }
  n_qubits_ = log2_exact(entries.rows());
  const CMatrix gram = entries.adjoint() * entries;
  const double defect =
      (gram - CMatrix::Identity(entries.rows(), entries.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (defect > 1e-10) {
    throw InvalidArgument("matrix is not unitary (max |U^dag U - I| = " +
                          std::to_string(defect) + ")");
  }
  entries_ = std::move(entries);
}

DenseUnitary DenseUnitary::identity(int n_qubits) {
  const auto dim = Eigen::Index{1} << n_qubits;
  return DenseUnitary(CMatrix::Identity(dim, dim), n_qubits);
}

DenseUnitary DenseUnitary::adjoint() const {
  return DenseUnitary(entries_.adjoint(), n_qubits_);
}

DenseUnitary DenseUnitary::with_phase(Complex phase) const {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
    throw InvalidArgument("phase factor must have unit modulus");
  }
  return DenseUnitary(entries_ * phase, n_qubits_);
}

Complex inner_product(const StateVector& u, const StateVector& v) {
  if (u.n_qubits() != v.n_qubits()) {
    throw InvalidArgument("inner_product: qubit counts differ (" +
                          std::to_string(u.n_qubits()) + " vs " +
                          std::to_string(v.n_qubits()) + ")");
  }
  return u.amplitudes().dot(v.amplitudes());
}

StateVector apply_dense(const DenseUnitary& u, const StateVector& v) {
  if (u.n_qubits() != v.n_qubits()) {
    throw InvalidArgument("apply_dense: qubit counts differ");
  }
  return StateVector(CVector(u.matrix() * v.amplitudes()));
}

StateVector apply_dense_on(const DenseUnitary& u, const StateVector& v,
                           std::span<const int> targets) {
  return apply_local(u.matrix(), v, targets, -1);
}

DenseUnitary state_to_unitary(const StateVector& phi) {
  if (!phi.is_normalized()) {
    throw InvalidArgument("state_to_unitary: input state is not normalized");
  }
  const auto dim = static_cast<Eigen::Index>(phi.dim());
  CMatrix cols(dim, dim);
  cols.col(0) = phi.amplitudes();
  Eigen::Index filled = 1;
  for (Eigen::Index e = 0; e < dim && filled < dim; ++e) {
    CVector cand = CVector::Zero(dim);
    cand[e] = 1.0;
    // two passes of modified Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < filled; ++c) {
        cand -= cols.col(c) * cols.col(c).dot(cand);
      }
    }
    const double nrm = cand.norm();
    if (nrm < 1e-8) continue;
    cols.col(filled++) = cand / nrm;
  }
  if (filled != dim) {
    throw NumericsError("state_to_unitary: basis completion failed");
  }
  return DenseUnitary(std::move(cols));
}

StateVector controlled_apply(const DenseUnitary& u, const StateVector& v,
                             int control, std::span<const int> targets) {
  if (control < 0) throw InvalidArgument("control qubit out of range");
  return apply_local(u.matrix(), v, targets, control);
}

StateVector controlled_apply(const DenseUnitary& u, const StateVector& v,
                             int control) {
  if (control < 0 || control >= v.n_qubits()) {
    throw InvalidArgument("control qubit out of range");
  }
  std::vector<int> targets;
  for (int q = 0; q < v.n_qubits(); ++q) {
    if (q != control) targets.push_back(q);
  }
  return controlled_apply(u, v, control, targets);
}

CVector phase_fix(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > 1e-9) {
      if (v[i].imag() == 0.0 && v[i].real() > 0.0) return v;
      CVector out = v * (std::conj(v[i]) / mag);
      out[i] = mag;
      return out;
    }
  }
  throw InvalidArgument("phase_fix: vector has no amplitude above 1e-9");
}

StateVector phase_fix(const StateVector& v) {
  return StateVector(phase_fix(v.amplitudes()));
}

}  // namespace eigencont
