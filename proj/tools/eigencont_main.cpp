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

// eigencont command-line driver. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eigencont/eigencont.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

int exit_code_for(ec_status status) {
  return (status == EC_ERROR_CONFIG || status == EC_ERROR_DATA) ? kExitConfig
                                                                : kExitRuntime;
}

int report(ec_status status) {
  std::cerr << "eigencont: " << ec_status_string(status) << ": "
            << ec_last_error() << '\n';
  return exit_code_for(status);
}

int run(const std::string& config_path, const std::string& out_path,
        const std::string& dump_path, std::optional<std::uint64_t> seed) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "eigencont: cannot read " << config_path << '\n';
    return kExitConfig;
  }
  std::ostringstream text;
  text << in.rdbuf();
  const std::string base =
      std::filesystem::absolute(config_path).parent_path().string();

  ec_sweep_config* cfg = nullptr;
  if (auto st = ec_sweep_config_parse(text.str().c_str(), base.c_str(), &cfg);
      st != EC_OK) {
    return report(st);
  }
  ec_status st = EC_OK;
  if (seed) st = ec_sweep_config_set_seed(cfg, *seed);
  if (st == EC_OK) st = ec_sweep_config_set_output(cfg, out_path.c_str());
  if (st == EC_OK) st = ec_sweep_config_set_dump_path(cfg, dump_path.c_str());
  const bool to_stdout = ec_sweep_config_has_output(cfg) == 0;
  ec_sweep_result* result = nullptr;
  if (st == EC_OK) st = ec_sweep_run(cfg, &result);
  ec_sweep_config_free(cfg);
  if (st != EC_OK) return report(st);

  std::cerr << "eigencont: " << ec_sweep_result_num_rows(result)
            << " rows written";
  double err = 0.0;
  if (ec_sweep_result_max_abs_err(result, &err)) {
    std::cerr << ", max |E_ec - E_exact| (level 0) = " << err;
  }
  std::cerr << '\n';
  if (to_stdout) {
    char* csv = nullptr;
    if (ec_sweep_result_csv(result, &csv) == EC_OK) {
      std::cout << csv;
      ec_string_free(csv);
    }
  }
  ec_sweep_result_free(result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eigenvector continuation on a statevector simulator"};
  app.set_version_flag("--version", std::string(ec_version()));
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "run a sweep described by a TOML config");
  std::string config_path;
  std::string out_path;
  std::string dump_path;
  std::uint64_t seed_value = 0;
  run_cmd->add_option("config", config_path, "sweep config (TOML)")->required();
  run_cmd->add_option("--out", out_path, "CSV output path (overrides output.path)");
  run_cmd->add_option("--dump-matrices", dump_path,
                      "write the measured S and T^k matrices as JSON");
  auto* seed_opt =
      run_cmd->add_option("--seed", seed_value, "override measurement.seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  std::optional<std::uint64_t> seed;
  if (seed_opt->count() > 0) seed = seed_value;
  return run(config_path, out_path, dump_path, seed);
}
