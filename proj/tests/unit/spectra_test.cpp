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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "eigencont/error.hpp"
#include "eigencont/models.hpp"
#include "support/oracles.hpp"

using namespace eigencont;

namespace {

ParamHamiltonian single_term(const char* word) {
  return ParamHamiltonian(static_cast<int>(std::string(word).size()),
                          {{PauliString::parse(word), ConstantRule{1.0}}});
}

// Random Hamiltonian over every Pauli word with a coin-flip mask.
ParamHamiltonian random_hamiltonian(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::bernoulli_distribution keep(0.4);
  std::vector<HamiltonianTerm> terms;
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  const int total = 1 << (2 * n);
  for (int code = 1; code < total; ++code) {
    if (!keep(rng)) continue;
    std::string w;
    for (int q = 0; q < n; ++q) w += letters[(code >> (2 * q)) & 3];
    terms.push_back({PauliString::parse(w), LinearRule{coef(rng), coef(rng)}});
  }
  if (terms.empty()) terms.push_back({PauliString::single(n, 0, Pauli::Z), ConstantRule{1.0}});
  return ParamHamiltonian(n, std::move(terms), {ConstantRule{coef(rng)}});
}

}  // namespace

TEST(DenseMatrix, SingleZ) {
  const CMatrix m = dense_matrix(single_term("Z"), 0.0);
  CMatrix expect = CMatrix::Zero(2, 2);
  expect(0, 0) = 1.0;
  expect(1, 1) = -1.0;
  EXPECT_EQ(m, expect);
}

TEST(DenseMatrix, XXIsAntiDiagonal) {
  const CMatrix m = dense_matrix(single_term("XX"), 0.0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      EXPECT_EQ(m(r, c), Complex(r + c == 3 ? 1.0 : 0.0));
}

TEST(DenseMatrix, XYTwoSiteCrossing) {
  const auto h = build_xy(2, -1.0, 0.0);
  auto ev = oracle::jacobi_eigenvalues(dense_matrix(h, 1.0));
  ASSERT_EQ(ev.size(), 4u);
  EXPECT_NEAR(ev[0], -2.0, 1e-10);
  EXPECT_NEAR(ev[1], -2.0, 1e-10);
  EXPECT_NEAR(ev[2], 2.0, 1e-10);
  EXPECT_NEAR(ev[3], 2.0, 1e-10);
}

TEST(DenseMatrix, CapExceededThrows) {
  ::setenv("EIGENCONT_MAX_QUBITS", "3", 1);
  EXPECT_THROW(dense_matrix(build_xy(4, -1.0, 0.0), 0.0), DimensionError);
  ::unsetenv("EIGENCONT_MAX_QUBITS");
}

TEST(LowestEigenstates, XYZeroField) {
  const auto pairs = lowest_eigenstates(build_xy(2, -1.0, 0.0), 0.0, 1);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_NEAR(pairs[0].energy, -2.0, 1e-12);
  CVector expect = CVector::Zero(4);
  expect[1] = expect[2] = 1.0 / std::sqrt(2.0);
  EXPECT_LT((pairs[0].vector.amplitudes() - expect).norm(), 1e-10);
}

TEST(LowestEigenstates, XYStrongField) {
  const auto pairs = lowest_eigenstates(build_xy(2, -1.0, 0.0), 2.0, 1);
  EXPECT_NEAR(pairs[0].energy, -4.0, 1e-12);
  EXPECT_LT((pairs[0].vector.amplitudes() - StateVector::basis(2, 3).amplitudes()).norm(),
            1e-10);
}

TEST(LowestEigenstates, DegenerateTieBreakIsDeterministic) {
  // At the crossing the block spans (|01>+|10>)/sqrt2 and |11>.
  const auto h = build_xy(2, -1.0, 0.0);
  const auto a = lowest_eigenstates(h, 1.0, 2);
  const auto b = lowest_eigenstates(h, 1.0, 2);
  for (int k = 0; k < 2; ++k)
    EXPECT_EQ(a[k].vector.amplitudes(), b[k].vector.amplitudes());
  CVector sym = CVector::Zero(4);
  sym[1] = sym[2] = 1.0 / std::sqrt(2.0);
  EXPECT_LT((a[0].vector.amplitudes() - sym).norm(), 1e-8);
  EXPECT_LT((a[1].vector.amplitudes() - StateVector::basis(2, 3).amplitudes()).norm(), 1e-8);
}

TEST(LowestEigenstates, RangeErrors) {
  const auto h = build_xy(2, -1.0, 0.0);
  EXPECT_THROW(lowest_eigenstates(h, 0.0, 0), InvalidArgument);
  EXPECT_THROW(lowest_eigenstates(h, 0.0, 5), InvalidArgument);
}

TEST(LowestEigenstates, FullBasisTraceIdentity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const int n = 1 + t % 3;
    const auto h = random_hamiltonian(n, rng);
    const double g = std::uniform_real_distribution<double>(-2, 2)(rng);
    const auto pairs = lowest_eigenstates(h, g, 1 << n);
    double sum = 0.0;
    for (const auto& p : pairs) sum += p.energy;
    EXPECT_NEAR(sum, dense_matrix(h, g).trace().real(), 1e-10);
  }
}

TEST(SpectraProperties, HermitianResidualOrthonormalOrdered) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 4;
    const auto h = random_hamiltonian(n, rng);
    const double g = std::uniform_real_distribution<double>(-2, 2)(rng);
    const CMatrix m = dense_matrix(h, g);
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);

    const auto pairs = lowest_eigenstates(h, g, 1 << n);
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      const CVector& v = pairs[a].vector.amplitudes();
      EXPECT_LE((m * v - pairs[a].energy * v).norm(), 1e-8);
      if (a > 0) EXPECT_LE(pairs[a - 1].energy, pairs[a].energy);
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        const Complex ov = v.dot(pairs[b].vector.amplitudes());
        EXPECT_LT(std::abs(ov - (a == b ? 1.0 : 0.0)), 1e-8);
      }
    }
  }
}

TEST(SpectraProperties, AgreesWithJacobiOracle) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 3;
    const auto h = random_hamiltonian(n, rng);
    const double g = std::uniform_real_distribution<double>(-2, 2)(rng);
    const auto ours = spectrum(h, g);
    const auto ref = oracle::jacobi_eigenvalues(oracle::dense(
        [&] {
          std::vector<oracle::Term> terms;
          for (const auto& term : h.terms())
            terms.push_back({term.pauli.str(), h.evaluate(term.rule, g)});
          return terms;
        }(),
        n, h.offset_at(g)));
    ASSERT_EQ(ours.size(), ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_NEAR(ours[k], ref[k], 1e-10);
  }
}

TEST(SpectraProperties, TwoByTwoCharacteristicPolynomial) {
  // a I + b X + c Y + d Z has eigenvalues a -/+ sqrt(b^2 + c^2 + d^2).
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 50; ++t) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    const ParamHamiltonian h(1,
                             {{PauliString::parse("X"), ConstantRule{b}},
                              {PauliString::parse("Y"), ConstantRule{c}},
                              {PauliString::parse("Z"), ConstantRule{d}}},
                             {ConstantRule{a}});
    const auto ev = spectrum(h, 0.0);
    const double r = std::sqrt(b * b + c * c + d * d);
    EXPECT_NEAR(ev[0], a - r, 1e-10);
    EXPECT_NEAR(ev[1], a + r, 1e-10);
  }
}
