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

#include "eigencont/gevp.hpp"

#include <cmath>
#include <string>

#include "eigencont/error.hpp"

namespace eigencont {

namespace {

CMatrix hermitian_part(const CMatrix& m, const char* name) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument(std::string(name) + " matrix must be square");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-8 * scale) {
    throw NumericsError(std::string(name) + " matrix is not Hermitian (defect " +
                        std::to_string(defect) + ")");
  }
  return (m + m.adjoint()) / 2.0;
}

}  // namespace

GevpSolution solve_gevp(const CMatrix& h, const CMatrix& s, double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw InvalidArgument("threshold eps must lie in [0, 1)");
  }
  if (h.rows() != s.rows() || h.cols() != s.cols()) {
    throw InvalidArgument("H and S must have the same shape");
  }
  if (h.rows() == 0) throw InvalidArgument("empty subspace");
  const CMatrix hh = hermitian_part(h, "Hamiltonian");
  const CMatrix ss = hermitian_part(s, "overlap");

  Eigen::SelfAdjointEigenSolver<CMatrix> s_eig(ss);
  if (s_eig.info() != Eigen::Success) {
    throw NumericsError("overlap eigensolver did not converge");
  }
  const auto& d = s_eig.eigenvalues();  // ascending
  const double d_max = d.maxCoeff();
  const double cut = eps * d_max;

  GevpSolution sol;
  sol.threshold_used = eps;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = d.size() - 1; i >= 0; --i) {
    if (d[i] > 0.0 && d[i] >= cut) {
      kept.push_back(i);
      sol.kept_overlap_eigenvalues.push_back(d[i]);
    }
  }
  if (kept.empty()) {
    throw NumericsError("no overlap eigenvalue survives the threshold "
                        "(retained rank 0)");
  }
  const auto r = static_cast<Eigen::Index>(kept.size());
  CMatrix w(ss.rows(), r);
  for (Eigen::Index c = 0; c < r; ++c) {
    w.col(c) = s_eig.eigenvectors().col(kept[static_cast<std::size_t>(c)]) /
               std::sqrt(d[kept[static_cast<std::size_t>(c)]]);
  }
  CMatrix reduced = w.adjoint() * hh * w;
  reduced = (reduced + reduced.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> h_eig(reduced);
  if (h_eig.info() != Eigen::Success) {
    throw NumericsError("reduced eigensolver did not converge");
  }
  sol.retained_rank = static_cast<int>(r);
  for (Eigen::Index c = 0; c < r; ++c) {
    sol.energies.push_back(h_eig.eigenvalues()[c]);
    sol.coeff_vectors.push_back(phase_fix(CVector(w * h_eig.eigenvectors().col(c))));
  }
  return sol;
}

}  // namespace eigencont
