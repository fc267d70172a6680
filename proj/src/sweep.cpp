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

#include "eigencont/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "eigencont/error.hpp"
#include "eigencont/gevp.hpp"
#include "eigencont/lcu.hpp"
#include "eigencont/spectra.hpp"
#include "toml_lite.hpp"

namespace eigencont {

namespace {

// Typed, key-tracking view of one config table.
class Section {
 public:
  Section(const toml::Table* table, std::string name)
      : table_(table), name_(std::move(name)) {}

  bool present() const { return table_ != nullptr; }
  bool has(const std::string& key) const {
    return table_ && table_->count(key) > 0;
  }

  const toml::Value* find(const std::string& key) {
    seen_.insert(key);
    if (!table_) return nullptr;
    const auto it = table_->find(key);
    return it == table_->end() ? nullptr : &it->second;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what,
                         int line = 0) const {
    throw ConfigError(qualified(key) + ": " + what, line);
  }

  std::string qualified(const std::string& key) const {
    return name_.empty() ? key : name_ + "." + key;
  }

  double real(const std::string& key, std::optional<double> fallback = {}) {
    const auto* v = find(key);
    if (!v) {
      if (fallback) return *fallback;
      fail(key, "required key is missing");
    }
    return as_real(*v, key);
  }

  double as_real(const toml::Value& v, const std::string& key) const {
    double out = 0.0;
    if (const auto* i = std::get_if<std::int64_t>(&v.data)) {
      out = static_cast<double>(*i);
    } else if (const auto* d = std::get_if<double>(&v.data)) {
      out = *d;
    } else {
      fail(key, std::string("expected a number, found ") + v.type_name(), v.line);
    }
    if (!std::isfinite(out)) fail(key, "value must be finite", v.line);
    return out;
  }

  std::int64_t integer(const std::string& key,
                       std::optional<std::int64_t> fallback = {}) {
    const auto* v = find(key);
    if (!v) {
      if (fallback) return *fallback;
      fail(key, "required key is missing");
    }
    const auto* i = std::get_if<std::int64_t>(&v->data);
    if (!i) fail(key, std::string("expected an integer, found ") + v->type_name(), v->line);
    return *i;
  }

  bool boolean(const std::string& key, bool fallback) {
    const auto* v = find(key);
    if (!v) return fallback;
    const auto* b = std::get_if<bool>(&v->data);
    if (!b) fail(key, std::string("expected a boolean, found ") + v->type_name(), v->line);
    return *b;
  }

  std::optional<std::string> string(const std::string& key) {
    const auto* v = find(key);
    if (!v) return std::nullopt;
    const auto* s = std::get_if<std::string>(&v->data);
    if (!s) fail(key, std::string("expected a string, found ") + v->type_name(), v->line);
    return *s;
  }

  int line_of(const std::string& key) const {
    if (!table_) return 0;
    const auto it = table_->find(key);
    return it == table_->end() ? 0 : it->second.line;
  }

  void reject_unknown() const {
    if (!table_) return;
    for (const auto& [key, value] : *table_) {
      if (!seen_.count(key)) fail(key, "unknown key", value.line);
    }
  }

 private:
  const toml::Table* table_;
  std::string name_;
  std::set<std::string> seen_;
};

Section sub(Section& root, const std::string& name) {
  const auto* v = root.find(name);
  if (!v) return Section(nullptr, name);
  if (!v->is_table()) root.fail(name, "expected a table", v->line);
  return Section(&v->table(), name);
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

SweepConfig parse_config(std::string_view text,
                         const std::filesystem::path& base_dir) {
  const toml::Table doc = toml::parse(text);
  Section root(&doc, "");
  SweepConfig cfg;

  // [model]
  {
    Section model = sub(root, "model");
    if (!model.present()) root.fail("model", "required table is missing");
    const auto kind = model.string("kind");
    if (!kind) model.fail("kind", "required key is missing");
    if (*kind == "xy") {
      cfg.model.kind = ModelKind::xy;
    } else if (*kind == "xxz") {
      cfg.model.kind = ModelKind::xxz;
    } else if (*kind == "h2") {
      cfg.model.kind = ModelKind::h2;
    } else {
      model.fail("kind", "expected xy, xxz or h2, found '" + *kind + "'",
                 model.line_of("kind"));
    }
    if (cfg.model.kind == ModelKind::h2) {
      const auto table = model.string("table");
      if (!table) model.fail("table", "required for model kind h2");
      cfg.model.table = std::filesystem::path(*table);
      if (cfg.model.table.is_relative() && !base_dir.empty()) {
        cfg.model.table = base_dir / cfg.model.table;
      }
      cfg.model.n = 2;
    } else {
      const auto n = model.integer("n");
      if (n < 2) model.fail("n", "chain needs at least 2 sites", model.line_of("n"));
      if (n > 30) model.fail("n", "too many sites", model.line_of("n"));
      cfg.model.n = static_cast<int>(n);
      cfg.model.j = model.real("J", cfg.model.kind == ModelKind::xy ? -1.0 : 1.0);
      if (cfg.model.kind == ModelKind::xy) cfg.model.bx = model.real("Bx", 0.0);
      if (const auto bc = model.string("boundary")) {
        if (*bc == "open") {
          cfg.model.boundary = Boundary::open;
        } else if (*bc == "periodic") {
          cfg.model.boundary = Boundary::periodic;
          if (cfg.model.n < 3) {
            model.fail("boundary", "periodic chains need n >= 3",
                       model.line_of("boundary"));
          }
        } else {
          model.fail("boundary", "expected open or periodic",
                     model.line_of("boundary"));
        }
      }
    }
    model.reject_unknown();
  }

  // [training]
  {
    Section training = sub(root, "training");
    const auto* points = training.find("points");
    if (!points) training.fail("points", "required key is missing");
    if (!points->is_array() || points->array().empty()) {
      training.fail("points", "expected a non-empty array of [g, index] pairs",
                    points->line);
    }
    for (const auto& p : points->array()) {
      if (!p.is_array() || p.array().size() != 2) {
        training.fail("points", "each entry must be [g, eigenstate_index]", p.line);
      }
      const double g = training.as_real(p.array()[0], "points");
      const auto* idx = std::get_if<std::int64_t>(&p.array()[1].data);
      if (!idx || *idx < 0) {
        training.fail("points", "eigenstate index must be a non-negative integer",
                      p.line);
      }
      cfg.training.push_back({g, static_cast<int>(*idx)});
    }
    const std::size_t dim = std::size_t{1} << std::min(cfg.model.n, 30);
    if (cfg.training.size() > dim) {
      training.fail("points", "more training states than the Hilbert space "
                              "dimension");
    }
    for (const auto& p : cfg.training) {
      if (static_cast<std::size_t>(p.index) >= dim) {
        training.fail("points", "eigenstate index exceeds the Hilbert space "
                                "dimension");
      }
    }
    training.reject_unknown();
  }

  // [targets]
  {
    Section targets = sub(root, "targets");
    if (!targets.present()) root.fail("targets", "required table is missing");
    if (targets.has("values")) {
      if (targets.has("start") || targets.has("stop") || targets.has("count")) {
        targets.fail("values", "give either values or start/stop/count, not both");
      }
      const auto* values = targets.find("values");
      if (!values->is_array() || values->array().empty()) {
        targets.fail("values", "expected a non-empty array", values->line);
      }
      for (const auto& v : values->array()) {
        cfg.targets.push_back(targets.as_real(v, "values"));
      }
    } else {
      const double start = targets.real("start");
      const double stop = targets.real("stop");
      const auto count = targets.integer("count");
      if (count < 2) {
        targets.fail("count", "grid needs count >= 2", targets.line_of("count"));
      }
      for (std::int64_t i = 0; i < count; ++i) {
        cfg.targets.push_back(i == count - 1
                                  ? stop
                                  : start + (stop - start) * static_cast<double>(i) /
                                                static_cast<double>(count - 1));
      }
    }
    targets.reject_unknown();
  }

  // [measurement]
  {
    Section m = sub(root, "measurement");
    const auto mode = m.string("mode").value_or("exact");
    if (mode == "exact") {
      cfg.measurement.mode = MeasurementMode::exact;
    } else if (mode == "shots") {
      cfg.measurement.mode = MeasurementMode::shots;
    } else {
      m.fail("mode", "expected exact or shots", m.line_of("mode"));
    }
    cfg.measurement.shots = m.integer("shots", 20000);
    if (cfg.measurement.mode == MeasurementMode::shots && cfg.measurement.shots < 1) {
      m.fail("shots", "must be >= 1 in shots mode", m.line_of("shots"));
    }
    const auto seed = m.integer("seed", 0);
    if (seed < 0) m.fail("seed", "must be non-negative", m.line_of("seed"));
    cfg.measurement.seed = static_cast<std::uint64_t>(seed);
    if (m.has("eps01") || m.has("eps10")) {
      ReadoutNoise noise{m.real("eps01", 0.0), m.real("eps10", 0.0)};
      for (const char* key : {"eps01", "eps10"}) {
        const double e = std::string(key) == "eps01" ? noise.eps01 : noise.eps10;
        if (!(e >= 0.0 && e < 0.5)) {
          m.fail(key, "must lie in [0, 0.5)", m.line_of(key));
        }
      }
      cfg.measurement.noise = noise;
    }
    cfg.measurement.mitigate = m.boolean("mitigate", false);
    m.reject_unknown();
  }

  // [solver]
  {
    Section s = sub(root, "solver");
    const double fallback = cfg.measurement.mode == MeasurementMode::exact
                                ? kDefaultExactEps
                                : kDefaultShotsEps;
    cfg.gevp_eps = s.real("gevp_eps", fallback);
    if (!(cfg.gevp_eps >= 0.0 && cfg.gevp_eps < 1.0)) {
      s.fail("gevp_eps", "must lie in [0, 1)", s.line_of("gevp_eps"));
    }
    s.reject_unknown();
  }

  // [output]
  {
    Section o = sub(root, "output");
    if (const auto path = o.string("path")) cfg.output = *path;
    if (const auto path = o.string("dump_matrices")) cfg.dump_matrices = *path;
    cfg.lcu_verify = o.boolean("lcu_verify", false);
    cfg.compare_exact = o.boolean("compare_exact", true);
    const auto levels = o.integer("levels", 0);
    if (levels < 0) o.fail("levels", "must be >= 0", o.line_of("levels"));
    cfg.n_levels = static_cast<int>(levels);
    o.reject_unknown();
  }

  root.reject_unknown();
  return cfg;
}

ParamHamiltonian build_model(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelKind::xy: return build_xy(spec.n, spec.j, spec.bx, spec.boundary);
    case ModelKind::xxz: return build_xxz(spec.n, spec.j, spec.boundary);
    case ModelKind::h2:
      return build_h2(std::make_shared<const CoefficientTable>(
          CoefficientTable::load_csv(spec.table)));
  }
  throw InvalidArgument("unknown model kind");
}

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.targets.empty()) throw ConfigError("targets: no target values");
  const ParamHamiltonian h = build_model(cfg.model);
  if (const auto& table = h.table()) {
    auto check = [&](double g, const char* key) {
      try {
        table->row_index(g);
      } catch (const DataError& e) {
        throw ConfigError(std::string(key) + ": " + e.what());
      }
    };
    for (const auto& p : cfg.training) check(p.g, "training.points");
    for (double g : cfg.targets) check(g, "targets");
  }

  const TrainingSet ts = build_training_set(h, cfg.training);
  const SubspaceMatrices sm = measure_subspace(ts, h, cfg.measurement);

  SweepResult result;
  result.summary.measurement_passes = 1;
  result.summary.estimator_calls = sm.estimator_calls;

  if (!cfg.dump_matrices.empty()) {
    std::ofstream out(cfg.dump_matrices, std::ios::binary);
    if (!out) throw DataError("cannot write " + cfg.dump_matrices.string());
    out << matrices_to_json(sm, h, ts) << '\n';
  }

  std::optional<LcuPreparer> lcu;
  if (cfg.lcu_verify) lcu.emplace(ts);

  std::vector<double> order = cfg.targets;
  std::sort(order.begin(), order.end());
  for (double g : order) {
    try {
      const auto problem = assemble(sm, h, g);
      const GevpSolution sol =
          solve_gevp(problem.hamiltonian, problem.overlap, cfg.gevp_eps);
      result.summary.retained_ranks.push_back(sol.retained_rank);
      std::vector<double> exact;
      if (cfg.compare_exact) exact = spectrum(h, g);
      int levels = sol.retained_rank;
      if (cfg.n_levels > 0) levels = std::min(levels, cfg.n_levels);
      for (int l = 0; l < levels; ++l) {
        SweepRow row;
        row.g = g;
        row.level = l;
        row.e_ec = sol.energies[static_cast<std::size_t>(l)];
        row.retained_rank = sol.retained_rank;
        if (cfg.compare_exact && static_cast<std::size_t>(l) < exact.size()) {
          row.e_exact = exact[static_cast<std::size_t>(l)];
        }
        if (l == 0 && lcu) {
          const auto& c = sol.coeff_vectors.front();
          const auto prepared =
              lcu->combine(std::span<const Complex>(c.data(), static_cast<std::size_t>(c.size())));
          row.e_lcu = energy_expectation(prepared.state, h, g);
          row.lcu_success_prob = prepared.success_probability;
        }
        if (l == 0 && row.e_exact) {
          const double err = std::abs(row.e_ec - *row.e_exact);
          auto& worst = result.summary.max_abs_err_level0;
          worst = worst ? std::max(*worst, err) : err;
        }
        result.rows.push_back(row);
      }
    } catch (const Error& e) {
      throw NumericsError("target g=" + format_real(g) + ": " + e.what());
    }
  }

  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw DataError("cannot write " + cfg.output.string());
    out << to_csv(result);
  }
  return result;
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : result.rows) {
    os << format_real(r.g) << ',' << r.level << ',' << format_real(r.e_ec) << ','
       << r.retained_rank << ',';
    if (r.e_exact) {
      os << format_real(*r.e_exact) << ',' << format_real(std::abs(r.e_ec - *r.e_exact));
    } else {
      os << ',';
    }
    os << ',';
    if (r.e_lcu) os << format_real(*r.e_lcu);
    os << ',';
    if (r.lcu_success_prob) os << format_real(*r.lcu_success_prob);
    os << '\n';
  }
  return os.str();
}

}  // namespace eigencont
