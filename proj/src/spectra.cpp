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

#include "eigencont/spectra.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "eigencont/error.hpp"

namespace eigencont {

namespace {

constexpr double kDegeneracyTol = 1e-9;
constexpr double kSignificance = 1e-6;

Eigen::SelfAdjointEigenSolver<CMatrix> diagonalize(const ParamHamiltonian& h,
                                                   double g, bool vectors) {
  const CMatrix m = dense_matrix(h, g);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(
      m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericsError("Hermitian eigensolver did not converge");
  }
  return solver;
}

// Canonical orthonormal basis of span(block columns).
CMatrix canonical_block(const CMatrix& block) {
  const Eigen::Index dim = block.rows();
  const Eigen::Index d = block.cols();
  if (d == 1) return block;
  CMatrix out(dim, d);
  Eigen::Index filled = 0;
  for (Eigen::Index i = 0; i < dim && filled < d; ++i) {
    // P e_i = B (B^dag e_i) = B conj(B.row(i))^T
    CVector w = block * block.row(i).adjoint();
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < filled; ++c) {
        w -= out.col(c) * out.col(c).dot(w);
      }
    }
    const double nrm = w.norm();
    if (nrm < kSignificance) continue;
    out.col(filled++) = w / nrm;
  }
  if (filled != d) {
    throw NumericsError("failed to build a canonical degenerate basis");
  }
  return out;
}

}  // namespace

CMatrix dense_matrix(const ParamHamiltonian& h, double g) {
  const int n = h.n_qubits();
  if (n > max_qubits()) {
    throw DimensionError("Hamiltonian on " + std::to_string(n) +
                         " qubits exceeds the dense cap of " +
                         std::to_string(max_qubits()) +
                         " (set EIGENCONT_MAX_QUBITS to raise it)");
  }
  const auto dim = Eigen::Index{1} << n;
  const auto coeffs = coefficients_at(h, g);
  CMatrix m = CMatrix::Identity(dim, dim) * coeffs.offset;
  for (const auto& t : coeffs.terms) {
    // column b of P is P e_b = phase(b) e_{b ^ flip}
    const auto flip = static_cast<Eigen::Index>(t.pauli.flip_mask());
    const auto sign = t.pauli.sign_mask();
    Complex base = t.coefficient;
    for (int y = 0; y < t.pauli.y_count(); ++y) base *= Complex{0.0, 1.0};
    for (Eigen::Index b = 0; b < dim; ++b) {
      const bool negative =
          (std::popcount(static_cast<std::uint64_t>(b) & sign) & 1) != 0;
      m(b ^ flip, b) += negative ? -base : base;
    }
  }
  return m;
}

std::vector<double> spectrum(const ParamHamiltonian& h, double g) {
  const auto solver = diagonalize(h, g, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<EigenPair> lowest_eigenstates(const ParamHamiltonian& h, double g,
                                          int k) {
  const auto dim = Eigen::Index{1} << h.n_qubits();
  if (k < 1 || k > dim) {
    throw InvalidArgument("lowest_eigenstates: k=" + std::to_string(k) +
                          " outside [1, " + std::to_string(dim) + "]");
  }
  const auto solver = diagonalize(h, g, true);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  std::vector<EigenPair> out;
  out.reserve(static_cast<std::size_t>(k));
  Eigen::Index start = 0;
  while (start < dim && static_cast<int>(out.size()) < k) {
    Eigen::Index stop = start + 1;
    while (stop < dim && values[stop] - values[stop - 1] <= kDegeneracyTol) {
      ++stop;
    }
    const CMatrix basis = canonical_block(vectors.middleCols(start, stop - start));
    for (Eigen::Index c = 0; c < basis.cols() && static_cast<int>(out.size()) < k;
         ++c) {
      out.push_back({values[start + c], phase_fix(StateVector(CVector(basis.col(c))))});
    }
    start = stop;
  }
  return out;
}

}  // namespace eigencont
