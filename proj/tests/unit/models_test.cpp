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

#include "eigencont/models.hpp"

#include <cmath>
#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "eigencont/error.hpp"
#include "eigencont/spectra.hpp"
#include "support/oracles.hpp"

using namespace eigencont;

namespace {

CMatrix total_z(int n) {
  const auto dim = Eigen::Index{1} << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) m += oracle::pauli_matrix(oracle::word_on(n, {{i, 'Z'}}));
  return m;
}

double commutator_norm(const CMatrix& a, const CMatrix& b) {
  return (a * b - b * a).norm();
}

std::shared_ptr<const CoefficientTable> load_fixture() {
  return std::make_shared<const CoefficientTable>(
      CoefficientTable::load_csv(EIGENCONT_DATA_DIR "/h2_sto3g_fixture.csv"));
}

}  // namespace

TEST(BuildXY, TermCountsAndOrder) {
  const auto h2 = build_xy(2, -1.0, 0.1);
  ASSERT_EQ(h2.terms().size(), 6u);
  const char* expect[] = {"XX", "YY", "ZI", "IZ", "XI", "IX"};
  for (int k = 0; k < 6; ++k) EXPECT_EQ(h2.terms()[k].pauli.str(), expect[k]);
  EXPECT_EQ(build_xy(8, -1.0, 0.1).terms().size(), 30u);
  EXPECT_EQ(build_xy(8, -1.0, 0.1, Boundary::periodic).terms().size(), 32u);
  EXPECT_THROW(build_xy(1, -1.0, 0.0), InvalidArgument);
}

TEST(BuildXY, PeriodicAddsOneWrapBondPerType) {
  const auto h = build_xy(4, -1.0, 0.0, Boundary::periodic);
  int wrap = 0;
  for (const auto& t : h.terms()) {
    const auto w = t.pauli.str();
    if (w == "XIIX" || w == "YIIY") ++wrap;
  }
  EXPECT_EQ(wrap, 2);
}

TEST(BuildXY, MatchesDenseOracle) {
  for (int n = 2; n <= 4; ++n) {
    for (double bz : {0.0, 0.7, 1.9}) {
      const CMatrix ours = dense_matrix(build_xy(n, -1.0, 0.1), bz);
      EXPECT_LT((ours - oracle::xy_matrix(n, -1.0, 0.1, bz)).norm(), 1e-12);
    }
  }
}

TEST(BuildXY, TwoSiteCrossingAtUnitField) {
  const auto h = build_xy(2, -1.0, 0.0);
  const auto below = spectrum(h, 0.9);
  const auto at = spectrum(h, 1.0);
  const auto above = spectrum(h, 1.1);
  EXPECT_NEAR(at[0], at[1], 1e-10);
  // the ground level changes slope across the crossing
  EXPECT_NEAR(below[0], -2.0, 1e-10);
  EXPECT_NEAR(above[0], -2.2, 1e-10);
}

TEST(BuildXXZ, TermCountAndReduction) {
  const auto h = build_xxz(4, 1.0);
  EXPECT_EQ(h.terms().size(), 9u);
  const CMatrix at_zero = dense_matrix(h, 0.0);
  EXPECT_LT((at_zero - oracle::xxz_matrix(4, 1.0, 0.0)).norm(), 1e-12);
  EXPECT_LT((dense_matrix(h, 1.3) - oracle::xxz_matrix(4, 1.0, 1.3)).norm(), 1e-12);
}

TEST(BuildXXZ, ZeroAnisotropyIsFieldFreeXY) {
  // with B_z = B_x = 0 the XY Hamiltonian has only the hopping terms
  const CMatrix xy = oracle::xy_matrix(4, 1.0, 0.0, 0.0);
  EXPECT_LT((dense_matrix(build_xxz(4, 1.0), 0.0) - xy).norm(), 1e-12);
}

TEST(BuildXXZ, GroundCrossoverNearIsotropicPoint) {
  const auto h = build_xxz(4, 1.0);
  // the ground level changes character near J_z = 1: the fully polarized
  // states become degenerate ground states above it
  const auto above = spectrum(h, 1.2);
  EXPECT_NEAR(above[0], -3.6, 1e-10);
  EXPECT_NEAR(above[1], -3.6, 1e-10);
  const auto below = spectrum(h, 0.8);
  EXPECT_LT(below[0], -2.4 - 0.1);
}

TEST(ModelProperties, MagnetizationSymmetry) {
  for (int n = 2; n <= 4; ++n) {
    const CMatrix mz = total_z(n);
    for (double g : {0.0, 0.5, 1.0, 1.7}) {
      EXPECT_LE(commutator_norm(mz, dense_matrix(build_xy(n, -1.0, 0.0), g)), 1e-10);
      EXPECT_GT(commutator_norm(mz, dense_matrix(build_xy(n, -1.0, 0.1), g)), 0.1);
      EXPECT_LE(commutator_norm(mz, dense_matrix(build_xxz(n, 1.0), g)), 1e-10);
    }
  }
}

TEST(BuildH2, Structure) {
  const auto h = build_h2(load_fixture());
  EXPECT_EQ(h.n_qubits(), 2);
  ASSERT_EQ(h.terms().size(), 4u);
  const char* words[] = {"ZI", "IZ", "ZZ", "XX"};
  for (int k = 0; k < 4; ++k) EXPECT_EQ(h.terms()[k].pauli.str(), words[k]);
  EXPECT_NEAR(h.offset_at(0.735), -1.052373245772859 + 0.7199689944489797, 1e-15);
}

TEST(BuildH2, ZeroRowHasZeroSpectrum) {
  auto table = std::make_shared<const CoefficientTable>(
      CoefficientTable::parse_csv("R,c_II,c_ZI,c_IZ,c_ZZ,c_XX,E_nuc\n1.0,0,0,0,0,0,0\n"));
  const auto ev = spectrum(build_h2(table), 1.0);
  for (double e : ev) EXPECT_EQ(e, 0.0);
}

TEST(BuildH2, TwoDecoupledBlocks) {
  const auto h = build_h2(load_fixture());
  for (double r : h.table()->keys()) {
    const CMatrix m = dense_matrix(h, r);
    // {|00>,|11>} and {|01>,|10>} never mix
    for (int a : {0, 3})
      for (int b : {1, 2}) {
        EXPECT_EQ(m(a, b), Complex(0.0));
        EXPECT_EQ(m(b, a), Complex(0.0));
      }
  }
}

TEST(BuildH2, GroundEnergyMatchesExplicitMatrix) {
  const auto table = load_fixture();
  const auto h = build_h2(table);
  const auto ci = [&](const char* c) { return *table->column_index(c); };
  for (std::size_t row = 0; row < table->size(); ++row) {
    const double r = table->keys()[row];
    const auto& v = table->row(row);
    const CMatrix m = oracle::dense({{"ZI", v[ci("c_ZI")]},
                                     {"IZ", v[ci("c_IZ")]},
                                     {"ZZ", v[ci("c_ZZ")]},
                                     {"XX", v[ci("c_XX")]}},
                                    2, v[ci("c_II")] + v[ci("E_nuc")]);
    EXPECT_NEAR(lowest_eigenstates(h, r, 1)[0].energy,
                oracle::jacobi_eigenvalues(m)[0], 1e-10);
  }
}

TEST(BuildH2, Errors) {
  auto missing = std::make_shared<const CoefficientTable>(
      CoefficientTable::parse_csv("R,c_II,c_ZI,c_IZ,c_ZZ,E_nuc\n1.0,0,0,0,0,0\n"));
  EXPECT_THROW(build_h2(missing), DataError);
  EXPECT_THROW(build_h2(nullptr), InvalidArgument);
  EXPECT_THROW(CoefficientTable::parse_csv("R,c_II,c_ZI,c_IZ,c_ZZ,c_XX,E_nuc\n"), DataError);
  EXPECT_THROW(
      CoefficientTable::parse_csv("R,c_II,c_ZI,c_IZ,c_ZZ,c_XX,E_nuc\n1.0,0,0,nan,0,0,0\n"),
      DataError);
}

TEST(Boundary, ParseAndPrint) {
  EXPECT_EQ(parse_boundary("open"), Boundary::open);
  EXPECT_EQ(parse_boundary("periodic"), Boundary::periodic);
  EXPECT_EQ(to_string(Boundary::periodic), "periodic");
  EXPECT_THROW(parse_boundary("twisted"), InvalidArgument);
  EXPECT_THROW(build_xy(2, -1.0, 0.0, Boundary::periodic), InvalidArgument);
}
