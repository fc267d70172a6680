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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eigencont/models.hpp"
#include "eigencont/subspace.hpp"

namespace eigencont {

enum class ModelKind { xy, xxz, h2 };

struct ModelSpec {
  ModelKind kind = ModelKind::xy;
  int n = 2;
  double j = -1.0;
  double bx = 0.0;
  Boundary boundary = Boundary::open;
  std::filesystem::path table;  // h2 only
};

struct SweepConfig {
  ModelSpec model;
  TrainingSpec training;
  std::vector<double> targets;
  MeasurementConfig measurement;
  double gevp_eps = 0.0;
  bool lcu_verify = false;
  bool compare_exact = true;
  int n_levels = 0;  // 0 reports every retained level
  std::filesystem::path output;
  std::filesystem::path dump_matrices;
};

/// Parses and validates a TOML sweep description. Relative table paths are
/// resolved against `base_dir`. Unknown keys are rejected; every error is a
/// ConfigError naming the offending key (and line, when known).
SweepConfig parse_config(std::string_view text,
                         const std::filesystem::path& base_dir = {});

ParamHamiltonian build_model(const ModelSpec& spec);

struct SweepRow {
  double g = 0.0;
  int level = 0;
  double e_ec = 0.0;
  int retained_rank = 0;
  std::optional<double> e_exact;
  std::optional<double> e_lcu;
  std::optional<double> lcu_success_prob;
};

struct SweepSummary {
  std::optional<double> max_abs_err_level0;
  std::vector<int> retained_ranks;  // one per target
  std::size_t measurement_passes = 0;
  std::size_t estimator_calls = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ordered by (g, level)
  SweepSummary summary;
};

inline constexpr std::string_view kCsvHeader =
    "g,level,E_ec,retained_rank,E_exact,abs_err,E_lcu,lcu_success_prob";

/// Train, measure once, then assemble and solve at every target. Writes the
/// CSV to cfg.output and the matrix dump to cfg.dump_matrices when set.
/// Failures at a target are rethrown as NumericsError naming that g.
SweepResult run_sweep(const SweepConfig& cfg);

// CSV text; reals use 12 significant digits.
std::string to_csv(const SweepResult& result);

}  // namespace eigencont
