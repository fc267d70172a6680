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

#include "eigencont/pauli.hpp"

#include <cmath>
#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "eigencont/error.hpp"
#include "eigencont/models.hpp"
#include "support/oracles.hpp"

using namespace eigencont;

namespace {

StateVector basis(int n, const char* bits) {
  return StateVector::basis(n, std::stoul(bits, nullptr, 2));
}

double dist(const StateVector& a, const CVector& b) {
  return (a.amplitudes() - b).norm();
}

}  // namespace

TEST(PauliString, ParseAndPrint) {
  const auto p = PauliString::parse("IXYZ");
  EXPECT_EQ(p.n_qubits(), 4);
  EXPECT_EQ(p.str(), "IXYZ");
  EXPECT_THROW(PauliString::parse("IXA"), InvalidArgument);
  EXPECT_THROW(PauliString::parse(""), InvalidArgument);
}

TEST(ApplyPauli, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(1);
  const StateVector v(oracle::random_state(2, rng));
  const auto out = apply_pauli(PauliString::parse("II"), v);
  EXPECT_EQ(out.amplitudes(), v.amplitudes());
}

TEST(ApplyPauli, XFlipsZeroToOne) {
  const auto out = apply_pauli(PauliString::parse("X"), StateVector::zero(1));
  EXPECT_LT(dist(out, StateVector::basis(1, 1).amplitudes()), 1e-15);
}

TEST(ApplyPauli, ZZOnZeroOneIsMinus) {
  const auto v = basis(2, "01");
  const auto out = apply_pauli(PauliString::parse("ZZ"), v);
  EXPECT_LT(dist(out, -v.amplitudes()), 1e-15);
}

TEST(ApplyPauli, YPhases) {
  // Y|0> = i|1>, Y|1> = -i|0>
  const auto a = apply_pauli(PauliString::parse("Y"), StateVector::basis(1, 0));
  EXPECT_EQ(a[1], Complex(0, 1));
  const auto b = apply_pauli(PauliString::parse("Y"), StateVector::basis(1, 1));
  EXPECT_EQ(b[0], Complex(0, -1));
}

TEST(ApplyPauli, QubitCountMismatchThrows) {
  EXPECT_THROW(apply_pauli(PauliString::parse("XX"), StateVector::zero(3)),
               InvalidArgument);
}

TEST(ApplyPauli, MatchesKroneckerMatrixOnRandomWords) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      std::string w;
      for (int q = 0; q < n; ++q) w.push_back("IXYZ"[letter(rng)]);
      const CVector v = oracle::random_state(n, rng);
      const auto out = apply_pauli(PauliString::parse(w), StateVector(v));
      EXPECT_LT(dist(out, oracle::pauli_matrix(w) * v), 1e-12) << w;
    }
  }
}

// Unitarity and involution over random words and states.
TEST(ApplyPauli, NormPreservedAndInvolution) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    std::string w;
    for (int q = 0; q < n; ++q) w.push_back("IXYZ"[letter(rng)]);
    const auto p = PauliString::parse(w);
    const StateVector v(oracle::random_state(n, rng) * 1.7);
    const auto once = apply_pauli(p, v);
    EXPECT_NEAR(once.norm(), v.norm(), 1e-12);
    EXPECT_LT(dist(apply_pauli(p, once), v.amplitudes()), 1e-12);
  }
}

TEST(CoefficientsAt, XYModelValues) {
  const auto h = build_xy(2, -1.0, 0.1);
  const auto c = coefficients_at(h, 0.5);
  ASSERT_EQ(c.terms.size(), 6u);
  const std::vector<std::pair<std::string, double>> expected{
      {"XX", -1.0}, {"YY", -1.0}, {"ZI", 0.5}, {"IZ", 0.5}, {"XI", 0.1}, {"IX", 0.1}};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(c.terms[k].pauli.str(), expected[k].first);
    EXPECT_DOUBLE_EQ(c.terms[k].coefficient, expected[k].second);
  }
  EXPECT_EQ(c.offset, 0.0);
}

TEST(CoefficientsAt, ConstantRulesIgnoreParameter) {
  const ParamHamiltonian h(1, {{PauliString::parse("X"), ConstantRule{0.3}},
                               {PauliString::parse("Z"), ConstantRule{-2.0}}});
  const auto a = coefficients_at(h, -4.0);
  const auto b = coefficients_at(h, 17.0);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ(a.terms[k].coefficient, b.terms[k].coefficient);
  }
}

TEST(CoefficientsAt, H2TableRowReadBack) {
  const auto table = std::make_shared<const CoefficientTable>(CoefficientTable::parse_csv(
      "R,c_II,c_ZI,c_IZ,c_ZZ,c_XX,E_nuc\n"
      "0.735,-1.0523732,-0.3979374,0.3979374,-0.0112801,0.1809312,0.7199689\n"
      "1.0,-0.9,-0.35,0.35,-0.01,0.2,0.52917721\n"));
  const auto h = build_h2(table);
  const auto c = coefficients_at(h, 0.735);
  ASSERT_EQ(c.terms.size(), 4u);
  EXPECT_EQ(c.terms[0].pauli.str(), "ZI");
  EXPECT_DOUBLE_EQ(c.terms[0].coefficient, -0.3979374);
  EXPECT_EQ(c.terms[1].pauli.str(), "IZ");
  EXPECT_DOUBLE_EQ(c.terms[1].coefficient, 0.3979374);
  EXPECT_EQ(c.terms[2].pauli.str(), "ZZ");
  EXPECT_DOUBLE_EQ(c.terms[2].coefficient, -0.0112801);
  EXPECT_EQ(c.terms[3].pauli.str(), "XX");
  EXPECT_DOUBLE_EQ(c.terms[3].coefficient, 0.1809312);
  // II coefficient and nuclear energy live in the offset
  EXPECT_DOUBLE_EQ(c.offset, -1.0523732 + 0.7199689);
}

TEST(CoefficientsAt, MissingTableKeyThrows) {
  const auto table = std::make_shared<const CoefficientTable>(
      CoefficientTable::parse_csv("g,a\n0.5,1.0\n"));
  const ParamHamiltonian h(1, {{PauliString::parse("Z"), TableColumnRule{"a"}}}, {},
                           table);
  EXPECT_DOUBLE_EQ(coefficients_at(h, 0.5).terms[0].coefficient, 1.0);
  EXPECT_THROW(coefficients_at(h, 0.6), DataError);
  EXPECT_THROW(coefficients_at(h, 0.5 + 1e-9), DataError);
  EXPECT_NO_THROW(coefficients_at(h, 0.5 + 1e-13));
}

TEST(CoefficientsAt, PureFunction) {
  const auto h = build_xxz(4, 1.0);
  const auto a = coefficients_at(h, 0.37);
  const auto b = coefficients_at(h, 0.37);
  ASSERT_EQ(a.terms.size(), b.terms.size());
  for (std::size_t k = 0; k < a.terms.size(); ++k) {
    EXPECT_EQ(a.terms[k].pauli, b.terms[k].pauli);
    EXPECT_EQ(a.terms[k].coefficient, b.terms[k].coefficient);
  }
}

TEST(ParamHamiltonian, Invariants) {
  EXPECT_THROW(ParamHamiltonian(2, {{PauliString::parse("XX"), ConstantRule{1}},
                                    {PauliString::parse("XX"), ConstantRule{2}}}),
               InvalidArgument);
  EXPECT_THROW(ParamHamiltonian(2, {{PauliString::parse("XXX"), ConstantRule{1}}}),
               InvalidArgument);
  EXPECT_THROW(ParamHamiltonian(1, {{PauliString::parse("X"), TableColumnRule{"a"}}}),
               InvalidArgument);
  const auto table = std::make_shared<const CoefficientTable>(
      CoefficientTable::parse_csv("g,a\n0.5,1.0\n"));
  EXPECT_THROW(ParamHamiltonian(1, {{PauliString::parse("X"), TableColumnRule{"b"}}},
                                {}, table),
               DataError);
}

TEST(ApplyHamiltonian, EmptySumIsZero) {
  const ParamHamiltonian h(2, {});
  std::mt19937_64 rng(3);
  const auto out = apply_hamiltonian(h, 0.0, StateVector(oracle::random_state(2, rng)));
  EXPECT_EQ(out.norm(), 0.0);
}

TEST(ApplyHamiltonian, SingleZOnZero) {
  const ParamHamiltonian h(1, {{PauliString::parse("Z"), ConstantRule{1.0}}});
  const auto out = apply_hamiltonian(h, 0.0, StateVector::zero(1));
  EXPECT_LT(dist(out, StateVector::zero(1).amplitudes()), 1e-15);
}

TEST(ApplyHamiltonian, XYTwoSiteTripletEigenvector) {
  // (|01> + |10>)/sqrt2 is an eigenvector with eigenvalue -2 at J=-1, B=0.
  const CMatrix dense = oracle::xy_matrix(2, -1.0, 0.0, 0.0);
  CVector v = CVector::Zero(4);
  v[1] = v[2] = 1.0 / std::sqrt(2.0);
  ASSERT_LT((dense * v + 2.0 * v).norm(), 1e-14);  // oracle check
  const auto out = apply_hamiltonian(build_xy(2, -1.0, 0.0), 0.0, StateVector(v));
  EXPECT_LT(dist(out, -2.0 * v), 1e-12);
}

TEST(ApplyHamiltonian, MatchesDenseKroneckerOracle) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n) {
    for (double g : {-0.7, 0.0, 0.4, 1.9}) {
      const CVector v = oracle::random_state(n, rng);
      const auto xy = apply_hamiltonian(build_xy(n, -1.0, 0.1), g, StateVector(v));
      EXPECT_LT((xy.amplitudes() - oracle::xy_matrix(n, -1.0, 0.1, g) * v)
                    .cwiseAbs()
                    .maxCoeff(),
                1e-12);
      const auto xxz = apply_hamiltonian(build_xxz(n, 1.0), g, StateVector(v));
      EXPECT_LT((xxz.amplitudes() - oracle::xxz_matrix(n, 1.0, g) * v)
                    .cwiseAbs()
                    .maxCoeff(),
                1e-12);
    }
  }
}

TEST(CoefficientTable, CsvParsing) {
  const auto t = CoefficientTable::parse_csv(
      "# fixture\n"
      "R, a ,b\r\n"
      "\n"
      "1.5e-1,2,-3.25E+1\n"
      "0.2,+4,5\n");
  EXPECT_EQ(t.key_name(), "R");
  ASSERT_EQ(t.columns().size(), 2u);
  EXPECT_EQ(t.columns()[0], "a");
  EXPECT_DOUBLE_EQ(t.value(0.15, 1), -32.5);
  EXPECT_DOUBLE_EQ(t.value(0.2, 0), 4.0);
  EXPECT_THROW(CoefficientTable::parse_csv(""), DataError);
  EXPECT_THROW(CoefficientTable::parse_csv("R,a\n"), DataError);
  EXPECT_THROW(CoefficientTable::parse_csv("R,a\n1,2,3\n"), DataError);
  EXPECT_THROW(CoefficientTable::parse_csv("R,a\n1,x\n"), DataError);
  EXPECT_THROW(CoefficientTable::parse_csv("R,a\n1,inf\n"), DataError);
  EXPECT_THROW(CoefficientTable::parse_csv("R,a\n1,nan\n"), DataError);
  EXPECT_THROW(CoefficientTable::parse_csv("R,a\n1,2\n1,3\n"), DataError);
}
