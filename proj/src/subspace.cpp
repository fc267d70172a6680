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

#include "eigencont/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "json.hpp"

#include "eigencont/error.hpp"
#include "eigencont/spectra.hpp"

namespace eigencont {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

nlohmann::json matrix_json(const CMatrix& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json rule_json(const CoefficientRule& rule) {
  return std::visit(
      [](const auto& r) -> nlohmann::json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ConstantRule>) {
          return {{"kind", "constant"}, {"value", r.value}};
        } else if constexpr (std::is_same_v<T, LinearRule>) {
          return {{"kind", "linear"}, {"offset", r.offset}, {"slope", r.slope}};
        } else {
          return {{"kind", "table"}, {"column", r.column}};
        }
      },
      rule);
}

}  // namespace

TrainingSet build_training_set(const ParamHamiltonian& h,
                               const TrainingSpec& spec) {
  if (spec.empty()) throw InvalidArgument("training spec is empty");
  const auto dim = std::size_t{1} << h.n_qubits();
  if (spec.size() > dim) {
    throw InvalidArgument("training spec has more points than the Hilbert "
                          "space dimension");
  }
  // one diagonalization per distinct g
  std::map<double, std::vector<EigenPair>> cache;
  std::map<double, int> depth;
  for (const auto& p : spec) {
    if (p.index < 0 || static_cast<std::size_t>(p.index) >= dim) {
      throw InvalidArgument("training eigenstate index " +
                            std::to_string(p.index) + " out of range");
    }
    depth[p.g] = std::max(depth[p.g], p.index + 1);
  }
  for (const auto& [g, k] : depth) cache[g] = lowest_eigenstates(h, g, k);

  TrainingSet ts;
  ts.spec = spec;
  ts.states.reserve(spec.size());
  for (const auto& p : spec) {
    ts.states.push_back(cache.at(p.g)[static_cast<std::size_t>(p.index)].vector);
  }
  return ts;
}

void MeasurementConfig::validate() const {
  if (mode == MeasurementMode::shots && shots < 1) {
    throw InvalidArgument("shots must be >= 1 in shots mode");
  }
  if (noise) {
    for (double e : {noise->eps01, noise->eps10}) {
      if (!(e >= 0.0 && e < 0.5)) {
        throw InvalidArgument("readout error probabilities must lie in [0, 0.5)");
      }
    }
  }
}

std::uint64_t substream_seed(std::uint64_t master_seed, const EstimatorKey& key) {
  std::uint64_t h = mix64(master_seed);
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(key.i)));
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(key.j)));
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(key.term + 1)));
  h = mix64(h ^ (key.part == Part::real ? 0x52ULL : 0x49ULL));
  return h;
}

double mitigate_readout(double p0_observed, const ReadoutNoise& noise) {
  const double denom = 1.0 - noise.eps01 - noise.eps10;
  if (denom <= 0.0) {
    throw NumericsError("readout confusion matrix is singular");
  }
  return std::clamp((p0_observed - noise.eps10) / denom, 0.0, 1.0);
}

double hadamard_estimate(const StateVector& u, const StateVector& v,
                         const PauliString* pauli, Part part,
                         const MeasurementConfig& cfg, std::uint64_t stream) {
  const Complex amp =
      pauli ? inner_product(u, apply_pauli(*pauli, v)) : inner_product(u, v);
  const double a = part == Part::real ? amp.real() : amp.imag();
  if (cfg.mode == MeasurementMode::exact) return a;

  const double p0 = std::clamp((1.0 + a) / 2.0, 0.0, 1.0);
  std::mt19937_64 gen(stream);
  std::int64_t zeros = 0;
  if (cfg.noise) {
    const auto& nz = *cfg.noise;
    for (std::int64_t s = 0; s < cfg.shots; ++s) {
      const bool zero = uniform01(gen) < p0;
      const double flip = zero ? nz.eps01 : nz.eps10;
      const bool read_zero = (uniform01(gen) < flip) ? !zero : zero;
      zeros += read_zero ? 1 : 0;
    }
  } else {
    for (std::int64_t s = 0; s < cfg.shots; ++s) {
      zeros += uniform01(gen) < p0 ? 1 : 0;
    }
  }
  double p0_hat = static_cast<double>(zeros) / static_cast<double>(cfg.shots);
  if (cfg.mitigate && cfg.noise) p0_hat = mitigate_readout(p0_hat, *cfg.noise);
  return 2.0 * p0_hat - 1.0;
}

SubspaceMatrices measure_subspace(const TrainingSet& ts,
                                  const ParamHamiltonian& h,
                                  const MeasurementConfig& cfg) {
  cfg.validate();
  const auto m = static_cast<Eigen::Index>(ts.size());
  if (m == 0) throw InvalidArgument("training set is empty");
  for (const auto& s : ts.states) {
    if (s.n_qubits() != h.n_qubits()) {
      throw InvalidArgument("training state and Hamiltonian disagree on the "
                            "qubit count");
    }
  }

  SubspaceMatrices sm;
  sm.mode = cfg.mode;
  sm.overlap = CMatrix::Zero(m, m);
  sm.terms.assign(h.terms().size(), CMatrix::Zero(m, m));

  if (cfg.mode == MeasurementMode::exact) {
    std::vector<std::vector<StateVector>> images;  // P^k |phi_j>
    images.reserve(h.terms().size());
    for (const auto& t : h.terms()) {
      std::vector<StateVector> row;
      row.reserve(ts.size());
      for (const auto& s : ts.states) row.push_back(apply_pauli(t.pauli, s));
      images.push_back(std::move(row));
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto& bra = ts.states[static_cast<std::size_t>(i)];
      for (Eigen::Index j = i; j < m; ++j) {
        Complex s = inner_product(bra, ts.states[static_cast<std::size_t>(j)]);
        if (i == j) s = s.real();
        sm.overlap(i, j) = s;
        sm.overlap(j, i) = std::conj(s);
        for (std::size_t k = 0; k < images.size(); ++k) {
          Complex t = inner_product(bra, images[k][static_cast<std::size_t>(j)]);
          if (i == j) t = t.real();
          sm.terms[k](i, j) = t;
          sm.terms[k](j, i) = std::conj(t);
        }
      }
    }
    return sm;
  }

  const int n_terms = static_cast<int>(h.terms().size());
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& bra = ts.states[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < m; ++j) {
      const auto& ket = ts.states[static_cast<std::size_t>(j)];
      for (int k = -1; k < n_terms; ++k) {
        const PauliString* p =
            k < 0 ? nullptr : &h.terms()[static_cast<std::size_t>(k)].pauli;
        auto estimate = [&](Part part) {
          ++sm.estimator_calls;
          const EstimatorKey key{static_cast<int>(i), static_cast<int>(j), k,
                                 part};
          return hadamard_estimate(bra, ket, p, part, cfg,
                                   substream_seed(cfg.seed, key));
        };
        Complex value;
        if (i == j) {
          value = k < 0 ? 1.0 : estimate(Part::real);
        } else {
          const double re = estimate(Part::real);
          const double im = estimate(Part::imag);
          value = {re, im};
        }
        CMatrix& target = k < 0 ? sm.overlap : sm.terms[static_cast<std::size_t>(k)];
        target(i, j) = value;
        target(j, i) = std::conj(value);
      }
    }
  }
  return sm;
}

ProjectedProblem assemble(const SubspaceMatrices& sm, const ParamHamiltonian& h,
                          double g) {
  if (sm.terms.size() != h.terms().size()) {
    throw InvalidArgument("subspace matrices were measured for a different "
                          "Hamiltonian");
  }
  const auto coeffs = coefficients_at(h, g);
  CMatrix hm = coeffs.offset * sm.overlap;
  for (std::size_t k = 0; k < sm.terms.size(); ++k) {
    hm += coeffs.terms[k].coefficient * sm.terms[k];
  }
  return {std::move(hm), sm.overlap};
}

std::string matrices_to_json(const SubspaceMatrices& sm,
                             const ParamHamiltonian& h, const TrainingSet& ts) {
  nlohmann::json doc;
  doc["n_qubits"] = h.n_qubits();
  doc["dimension"] = sm.dim();
  doc["mode"] = sm.mode == MeasurementMode::exact ? "exact" : "shots";
  auto training = nlohmann::json::array();
  for (const auto& p : ts.spec) training.push_back({{"g", p.g}, {"index", p.index}});
  doc["training"] = std::move(training);
  doc["S"] = matrix_json(sm.overlap);
  auto terms = nlohmann::json::array();
  for (std::size_t k = 0; k < sm.terms.size(); ++k) {
    terms.push_back({{"pauli", h.terms()[k].pauli.str()},
                     {"rule", rule_json(h.terms()[k].rule)},
                     {"T", matrix_json(sm.terms[k])}});
  }
  doc["terms"] = std::move(terms);
  auto offset = nlohmann::json::array();
  for (const auto& r : h.offset_rules()) offset.push_back(rule_json(r));
  doc["offset"] = std::move(offset);
  return doc.dump(2);
}

}  // namespace eigencont
