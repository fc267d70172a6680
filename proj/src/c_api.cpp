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

#include "eigencont/eigencont.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "eigencont/error.hpp"
#include "eigencont/gevp.hpp"
#include "eigencont/lcu.hpp"
#include "eigencont/models.hpp"
#include "eigencont/spectra.hpp"
#include "eigencont/subspace.hpp"
#include "eigencont/sweep.hpp"

struct ec_hamiltonian {
  eigencont::ParamHamiltonian h;
};
struct ec_training_set {
  eigencont::TrainingSet ts;
};
struct ec_subspace {
  eigencont::SubspaceMatrices sm;
  eigencont::TrainingSet ts;
};
struct ec_sweep_config {
  eigencont::SweepConfig cfg;
};
struct ec_sweep_result {
  eigencont::SweepResult result;
};

namespace {

using eigencont::Complex;
using eigencont::CMatrix;
using eigencont::CVector;

thread_local std::string g_last_error;

ec_status fail(ec_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
ec_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return EC_OK;
  } catch (const eigencont::ConfigError& e) {
    return fail(EC_ERROR_CONFIG, e.what());
  } catch (const eigencont::DataError& e) {
    return fail(EC_ERROR_DATA, e.what());
  } catch (const eigencont::DimensionError& e) {
    return fail(EC_ERROR_DIMENSION, e.what());
  } catch (const eigencont::NumericsError& e) {
    return fail(EC_ERROR_NUMERICS, e.what());
  } catch (const eigencont::InvalidArgument& e) {
    return fail(EC_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(EC_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(EC_ERROR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw eigencont::InvalidArgument(what);
}

CVector read_complex(const double* data, std::size_t len) {
  CVector v(static_cast<Eigen::Index>(len));
  for (std::size_t i = 0; i < len; ++i) {
    v[static_cast<Eigen::Index>(i)] = Complex(data[2 * i], data[2 * i + 1]);
  }
  return v;
}

void write_complex(const CVector& v, double* out) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[2 * i] = v[i].real();
    out[2 * i + 1] = v[i].imag();
  }
}

CMatrix read_matrix(const double* data, std::size_t m) {
  CMatrix a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t k = 2 * (r * m + c);
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(data[k], data[k + 1]);
    }
  }
  return a;
}

void write_matrix(const CMatrix& a, double* out) {
  const auto m = a.rows();
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out[2 * (r * a.cols() + c)] = a(r, c).real();
      out[2 * (r * a.cols() + c) + 1] = a(r, c).imag();
    }
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ec_version(void) { return "0.1.0"; }

const char* ec_status_string(ec_status status) {
  switch (status) {
    case EC_OK: return "ok";
    case EC_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case EC_ERROR_DIMENSION: return "dimension cap exceeded";
    case EC_ERROR_DATA: return "data error";
    case EC_ERROR_CONFIG: return "config error";
    case EC_ERROR_NUMERICS: return "numerical error";
    case EC_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ec_last_error(void) { return g_last_error.c_str(); }

void ec_string_free(char* s) { std::free(s); }

ec_status ec_hamiltonian_xy(int n, double j, double bx, int periodic,
                            ec_hamiltonian** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    auto h = eigencont::build_xy(n, j, bx,
                                 periodic ? eigencont::Boundary::periodic
                                          : eigencont::Boundary::open);
    *out = new ec_hamiltonian{std::move(h)};
  });
}

ec_status ec_hamiltonian_xxz(int n, double j, int periodic,
                             ec_hamiltonian** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    auto h = eigencont::build_xxz(n, j,
                                  periodic ? eigencont::Boundary::periodic
                                           : eigencont::Boundary::open);
    *out = new ec_hamiltonian{std::move(h)};
  });
}

ec_status ec_hamiltonian_h2_csv(const char* path, ec_hamiltonian** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "NULL argument");
    auto table = std::make_shared<const eigencont::CoefficientTable>(
        eigencont::CoefficientTable::load_csv(path));
    *out = new ec_hamiltonian{eigencont::build_h2(std::move(table))};
  });
}

void ec_hamiltonian_free(ec_hamiltonian* h) { delete h; }

int ec_hamiltonian_num_qubits(const ec_hamiltonian* h) {
  return h ? h->h.n_qubits() : 0;
}

size_t ec_hamiltonian_num_terms(const ec_hamiltonian* h) {
  return h ? h->h.terms().size() : 0;
}

ec_status ec_hamiltonian_term(const ec_hamiltonian* h, size_t k, double g,
                              char* pauli, size_t pauli_cap,
                              double* coefficient) {
  return guarded([&] {
    require(h != nullptr, "hamiltonian is NULL");
    require(k < h->h.terms().size(), "term index out of range");
    const auto& term = h->h.terms()[k];
    if (pauli) {
      const std::string s = term.pauli.str();
      require(pauli_cap > s.size(), "pauli buffer too small");
      std::memcpy(pauli, s.c_str(), s.size() + 1);
    }
    if (coefficient) *coefficient = h->h.evaluate(term.rule, g);
  });
}

ec_status ec_hamiltonian_offset(const ec_hamiltonian* h, double g,
                                double* offset) {
  return guarded([&] {
    require(h != nullptr && offset != nullptr, "NULL argument");
    *offset = h->h.offset_at(g);
  });
}

ec_status ec_hamiltonian_spectrum(const ec_hamiltonian* h, double g,
                                  double* energies, size_t len) {
  return guarded([&] {
    require(h != nullptr && energies != nullptr, "NULL argument");
    require(len == (std::size_t{1} << h->h.n_qubits()), "len must be 2^n");
    const auto ev = eigencont::spectrum(h->h, g);
    std::copy(ev.begin(), ev.end(), energies);
  });
}

ec_status ec_energy_expectation(const ec_hamiltonian* h, double g,
                                const double* state, size_t len,
                                double* energy) {
  return guarded([&] {
    require(h != nullptr && state != nullptr && energy != nullptr,
            "NULL argument");
    require(len == (std::size_t{1} << h->h.n_qubits()), "len must be 2^n");
    const eigencont::StateVector v(read_complex(state, len));
    require(v.is_normalized(), "state is not normalized");
    *energy = eigencont::energy_expectation(v, h->h, g);
  });
}

ec_status ec_training_set_build(const ec_hamiltonian* h, const double* g,
                                const int* idx, size_t m,
                                ec_training_set** out) {
  return guarded([&] {
    require(h != nullptr && g != nullptr && idx != nullptr && out != nullptr,
            "NULL argument");
    eigencont::TrainingSpec spec;
    for (std::size_t i = 0; i < m; ++i) spec.push_back({g[i], idx[i]});
    *out = new ec_training_set{eigencont::build_training_set(h->h, spec)};
  });
}

void ec_training_set_free(ec_training_set* ts) { delete ts; }

size_t ec_training_set_size(const ec_training_set* ts) {
  return ts ? ts->ts.size() : 0;
}

ec_status ec_training_set_state(const ec_training_set* ts, size_t i,
                                double* amplitudes, size_t len) {
  return guarded([&] {
    require(ts != nullptr && amplitudes != nullptr, "NULL argument");
    require(i < ts->ts.size(), "state index out of range");
    const auto& s = ts->ts.states[i];
    require(len == s.dim(), "len must equal the state dimension");
    write_complex(s.amplitudes(), amplitudes);
  });
}

void ec_measurement_config_init(ec_measurement_config* cfg) {
  if (!cfg) return;
  *cfg = ec_measurement_config{0, 20000, 0, 0, 0.0, 0.0, 0};
}

ec_status ec_subspace_measure(const ec_training_set* ts,
                              const ec_hamiltonian* h,
                              const ec_measurement_config* cfg,
                              ec_subspace** out) {
  return guarded([&] {
    require(ts != nullptr && h != nullptr && cfg != nullptr && out != nullptr,
            "NULL argument");
    eigencont::MeasurementConfig mc;
    mc.mode = cfg->shots_mode ? eigencont::MeasurementMode::shots
                              : eigencont::MeasurementMode::exact;
    mc.shots = cfg->shots;
    mc.seed = cfg->seed;
    if (cfg->has_noise) mc.noise = eigencont::ReadoutNoise{cfg->eps01, cfg->eps10};
    mc.mitigate = cfg->mitigate != 0;
    *out = new ec_subspace{eigencont::measure_subspace(ts->ts, h->h, mc), ts->ts};
  });
}

void ec_subspace_free(ec_subspace* sm) { delete sm; }

size_t ec_subspace_dim(const ec_subspace* sm) {
  return sm ? static_cast<size_t>(sm->sm.dim()) : 0;
}

size_t ec_subspace_estimator_calls(const ec_subspace* sm) {
  return sm ? sm->sm.estimator_calls : 0;
}

ec_status ec_subspace_assemble(const ec_subspace* sm, const ec_hamiltonian* h,
                               double g, double* h_out, double* s_out) {
  return guarded([&] {
    require(sm != nullptr && h != nullptr, "NULL argument");
    const auto p = eigencont::assemble(sm->sm, h->h, g);
    if (h_out) write_matrix(p.hamiltonian, h_out);
    if (s_out) write_matrix(p.overlap, s_out);
  });
}

ec_status ec_subspace_to_json(const ec_subspace* sm, const ec_hamiltonian* h,
                              char** json) {
  return guarded([&] {
    require(sm != nullptr && h != nullptr && json != nullptr, "NULL argument");
    *json = copy_string(eigencont::matrices_to_json(sm->sm, h->h, sm->ts));
  });
}

ec_status ec_gevp_solve(size_t m, const double* h, const double* s, double eps,
                        double* energies, double* coeffs, size_t* rank) {
  return guarded([&] {
    require(h != nullptr && s != nullptr && energies != nullptr &&
                rank != nullptr,
            "NULL argument");
    require(m > 0, "m must be positive");
    const auto sol =
        eigencont::solve_gevp(read_matrix(h, m), read_matrix(s, m), eps);
    *rank = static_cast<size_t>(sol.retained_rank);
    for (std::size_t i = 0; i < sol.energies.size(); ++i) {
      energies[i] = sol.energies[i];
      if (coeffs) write_complex(sol.coeff_vectors[i], coeffs + 2 * i * m);
    }
  });
}

ec_status ec_lcu_combine(const ec_training_set* ts, const double* coeffs,
                         size_t m, double* state, size_t len,
                         double* success_probability) {
  return guarded([&] {
    require(ts != nullptr && coeffs != nullptr && state != nullptr,
            "NULL argument");
    require(m == ts->ts.size(), "coefficient count must equal the training "
                                "set size");
    require(len == ts->ts.states.front().dim(),
            "len must equal the state dimension");
    const CVector c = read_complex(coeffs, m);
    const auto r = eigencont::lcu_combine(
        ts->ts, std::span<const Complex>(c.data(), m));
    write_complex(r.state.amplitudes(), state);
    if (success_probability) *success_probability = r.success_probability;
  });
}

ec_status ec_sweep_config_parse(const char* toml_text, const char* base_dir,
                                ec_sweep_config** out) {
  return guarded([&] {
    require(toml_text != nullptr && out != nullptr, "NULL argument");
    *out = new ec_sweep_config{eigencont::parse_config(
        toml_text, base_dir ? std::filesystem::path(base_dir)
                            : std::filesystem::path())};
  });
}

void ec_sweep_config_free(ec_sweep_config* cfg) { delete cfg; }

ec_status ec_sweep_config_set_seed(ec_sweep_config* cfg, uint64_t seed) {
  return guarded([&] {
    require(cfg != nullptr, "config is NULL");
    cfg->cfg.measurement.seed = seed;
  });
}

ec_status ec_sweep_config_set_output(ec_sweep_config* cfg, const char* path) {
  return guarded([&] {
    require(cfg != nullptr, "config is NULL");
    if (path && *path) cfg->cfg.output = path;
  });
}

int ec_sweep_config_has_output(const ec_sweep_config* cfg) {
  return cfg && !cfg->cfg.output.empty() ? 1 : 0;
}

ec_status ec_sweep_config_set_dump_path(ec_sweep_config* cfg,
                                        const char* path) {
  return guarded([&] {
    require(cfg != nullptr, "config is NULL");
    if (path && *path) cfg->cfg.dump_matrices = path;
  });
}

ec_status ec_sweep_run(const ec_sweep_config* cfg, ec_sweep_result** out) {
  return guarded([&] {
    require(cfg != nullptr && out != nullptr, "NULL argument");
    *out = new ec_sweep_result{eigencont::run_sweep(cfg->cfg)};
  });
}

void ec_sweep_result_free(ec_sweep_result* r) { delete r; }

size_t ec_sweep_result_num_rows(const ec_sweep_result* r) {
  return r ? r->result.rows.size() : 0;
}

size_t ec_sweep_result_measurement_passes(const ec_sweep_result* r) {
  return r ? r->result.summary.measurement_passes : 0;
}

int ec_sweep_result_max_abs_err(const ec_sweep_result* r, double* out) {
  if (!r || !r->result.summary.max_abs_err_level0) return 0;
  if (out) *out = *r->result.summary.max_abs_err_level0;
  return 1;
}

ec_status ec_sweep_result_csv(const ec_sweep_result* r, char** csv) {
  return guarded([&] {
    require(r != nullptr && csv != nullptr, "NULL argument");
    *csv = copy_string(eigencont::to_csv(r->result));
  });
}

}  // extern "C"
