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

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "eigencont/error.hpp"

namespace eigencont {

namespace {

constexpr double kKeyTolerance = 1e-12;

// i^k for k mod 4.
Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// out += coeff * P in.
void accumulate_pauli(const PauliString& p, double coeff, const CVector& in,
                      CVector& out) {
  const std::uint64_t flip = p.flip_mask();
  const std::uint64_t sign = p.sign_mask();
  const Complex base = coeff * i_power(p.y_count());
  const auto dim = static_cast<std::uint64_t>(in.size());
  for (std::uint64_t b = 0; b < dim; ++b) {
    const Complex amp = in[static_cast<Eigen::Index>(b)];
    if (amp == Complex{}) continue;
    const bool negative = (std::popcount(b & sign) & 1) != 0;
    out[static_cast<Eigen::Index>(b ^ flip)] += negative ? -base * amp : base * amp;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view field, int line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw DataError("coefficient table line " + std::to_string(line_no) +
                    ": cannot parse '" + std::string(field) + "' as a real");
  }
  if (!std::isfinite(value)) {
    throw DataError("coefficient table line " + std::to_string(line_no) +
                    ": non-finite value");
  }
  return value;
}

}  // namespace

PauliString::PauliString(std::vector<Pauli> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) throw InvalidArgument("Pauli string must be non-empty");
  if (letters_.size() > 63) throw InvalidArgument("Pauli string too long");
  const auto n = letters_.size();
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    switch (letters_[q]) {
      case Pauli::I: break;
      case Pauli::X: flip_mask_ |= bit; break;
      case Pauli::Y:
        flip_mask_ |= bit;
        sign_mask_ |= bit;
        ++y_count_;
        break;
      case Pauli::Z: sign_mask_ |= bit; break;
    }
  }
}

PauliString PauliString::parse(std::string_view letters) {
  std::vector<Pauli> out;
  out.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'I': out.push_back(Pauli::I); break;
      case 'X': out.push_back(Pauli::X); break;
      case 'Y': out.push_back(Pauli::Y); break;
      case 'Z': out.push_back(Pauli::Z); break;
      default:
        throw InvalidArgument("invalid Pauli letter '" + std::string(1, c) +
                              "' in \"" + std::string(letters) + "\"");
    }
  }
  return PauliString(std::move(out));
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
  if (n_qubits <= 0 || qubit < 0 || qubit >= n_qubits) {
    throw InvalidArgument("qubit index out of range");
  }
  std::vector<Pauli> letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  letters[static_cast<std::size_t>(qubit)] = p;
  return PauliString(std::move(letters));
}

PauliString PauliString::pair(int n_qubits, int q0, int q1, Pauli p) {
  if (q0 == q1) throw InvalidArgument("pair requires distinct qubits");
  if (n_qubits <= 0 || q0 < 0 || q1 < 0 || q0 >= n_qubits || q1 >= n_qubits) {
    throw InvalidArgument("qubit index out of range");
  }
  std::vector<Pauli> letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  letters[static_cast<std::size_t>(q0)] = p;
  letters[static_cast<std::size_t>(q1)] = p;
  return PauliString(std::move(letters));
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back("IXYZ"[static_cast<int>(p)]);
  return s;
}

StateVector apply_pauli(const PauliString& p, const StateVector& v) {
  if (p.n_qubits() != v.n_qubits()) {
    throw InvalidArgument("apply_pauli: string " + p.str() + " acts on " +
                          std::to_string(p.n_qubits()) +
                          " qubits, state has " + std::to_string(v.n_qubits()));
  }
  CVector out = CVector::Zero(v.amplitudes().size());
  accumulate_pauli(p, 1.0, v.amplitudes(), out);
  return StateVector(std::move(out));
}

std::string describe(const CoefficientRule& rule) {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        std::ostringstream os;
        os.precision(17);
        if constexpr (std::is_same_v<T, ConstantRule>) {
          os << "constant(" << r.value << ")";
        } else if constexpr (std::is_same_v<T, LinearRule>) {
          os << "linear(" << r.offset << " + " << r.slope << "*g)";
        } else {
          os << "table(" << r.column << ")";
        }
        return os.str();
      },
      rule);
}

CoefficientTable::CoefficientTable(std::string key_name,
                                   std::vector<std::string> columns,
                                   std::vector<double> keys,
                                   std::vector<std::vector<double>> rows)
    : key_name_(std::move(key_name)),
      columns_(std::move(columns)),
      keys_(std::move(keys)),
      rows_(std::move(rows)) {
  if (keys_.empty()) throw DataError("coefficient table is empty");
  if (keys_.size() != rows_.size()) {
    throw DataError("coefficient table: key/row count mismatch");
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    for (std::size_t j = i + 1; j < columns_.size(); ++j) {
      if (columns_[i] == columns_[j]) {
        throw DataError("coefficient table: duplicate column '" + columns_[i] +
                        "'");
      }
    }
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != columns_.size()) {
      throw DataError("coefficient table: row " + std::to_string(r) +
                      " has the wrong number of entries");
    }
    if (!std::isfinite(keys_[r])) {
      throw DataError("coefficient table: non-finite key");
    }
    for (double x : rows_[r]) {
      if (!std::isfinite(x)) {
        throw DataError("coefficient table: non-finite entry in row " +
                        std::to_string(r));
      }
    }
    for (std::size_t s = 0; s < r; ++s) {
      if (std::abs(keys_[s] - keys_[r]) <= kKeyTolerance) {
        throw DataError("coefficient table: duplicate key");
      }
    }
  }
}

CoefficientTable CoefficientTable::parse_csv(std::string_view text) {
  std::string key_name;
  std::vector<std::string> columns;
  std::vector<double> keys;
  std::vector<std::vector<double>> rows;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos
                                          ? std::string_view::npos
                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_commas(line);
    if (!have_header) {
      if (fields.size() < 2) {
        throw DataError("coefficient table header needs a key and at least "
                        "one column");
      }
      key_name = std::string(fields[0]);
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i].empty()) throw DataError("coefficient table: empty column name");
        columns.emplace_back(fields[i]);
      }
      have_header = true;
      continue;
    }
    if (fields.size() != columns.size() + 1) {
      throw DataError("coefficient table line " + std::to_string(line_no) +
                      ": expected " + std::to_string(columns.size() + 1) +
                      " fields, found " + std::to_string(fields.size()));
    }
    keys.push_back(parse_real(fields[0], line_no));
    std::vector<double> row;
    row.reserve(columns.size());
    for (std::size_t i = 1; i < fields.size(); ++i) {
      row.push_back(parse_real(fields[i], line_no));
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw DataError("coefficient table is empty");
  return CoefficientTable(std::move(key_name), std::move(columns),
                          std::move(keys), std::move(rows));
}

CoefficientTable CoefficientTable::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open coefficient table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

std::optional<std::size_t> CoefficientTable::column_index(
    std::string_view name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns_.begin());
}

std::size_t CoefficientTable::row_index(double g) const {
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (std::abs(keys_[i] - g) <= kKeyTolerance) return i;
  }
  std::ostringstream os;
  os.precision(17);
  os << "parameter " << key_name_ << "=" << g
     << " is not a row of the coefficient table";
  throw DataError(os.str());
}

double CoefficientTable::value(double g, std::size_t column) const {
  return rows_[row_index(g)].at(column);
}

ParamHamiltonian::ParamHamiltonian(int n_qubits,
                                   std::vector<HamiltonianTerm> terms,
                                   std::vector<CoefficientRule> offset,
                                   std::shared_ptr<const CoefficientTable> table)
    : n_qubits_(n_qubits),
      terms_(std::move(terms)),
      offset_(std::move(offset)),
      table_(std::move(table)) {
  if (n_qubits_ <= 0) throw InvalidArgument("Hamiltonian needs n_qubits >= 1");
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].pauli.n_qubits() != n_qubits_) {
      throw InvalidArgument("term " + terms_[k].pauli.str() +
                            " does not act on " + std::to_string(n_qubits_) +
                            " qubits");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (terms_[j].pauli == terms_[k].pauli) {
        throw InvalidArgument("duplicate Pauli term " + terms_[k].pauli.str());
      }
    }
  }
  auto check_rule = [this](const CoefficientRule& rule) {
    if (const auto* col = std::get_if<TableColumnRule>(&rule)) {
      if (!table_) {
        throw InvalidArgument("table rule '" + col->column +
                              "' used without a coefficient table");
      }
      if (!table_->column_index(col->column)) {
        throw DataError("coefficient table has no column '" + col->column +
                        "'");
      }
    }
  };
  for (const auto& t : terms_) check_rule(t.rule);
  for (const auto& r : offset_) check_rule(r);
}

double ParamHamiltonian::evaluate(const CoefficientRule& rule, double g) const {
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ConstantRule>) {
          return r.value;
        } else if constexpr (std::is_same_v<T, LinearRule>) {
          return r.offset + r.slope * g;
        } else {
          return table_->value(g, *table_->column_index(r.column));
        }
      },
      rule);
}

double ParamHamiltonian::offset_at(double g) const {
  double total = 0.0;
  for (const auto& r : offset_) total += evaluate(r, g);
  return total;
}

ConcreteCoefficients coefficients_at(const ParamHamiltonian& h, double g) {
  ConcreteCoefficients out;
  out.terms.reserve(h.terms().size());
  for (const auto& t : h.terms()) {
    out.terms.push_back({t.pauli, h.evaluate(t.rule, g)});
  }
  out.offset = h.offset_at(g);
  return out;
}

StateVector apply_hamiltonian(const ParamHamiltonian& h, double g,
                              const StateVector& v) {
  if (v.n_qubits() != h.n_qubits()) {
    throw InvalidArgument("apply_hamiltonian: state has " +
                          std::to_string(v.n_qubits()) +
                          " qubits, Hamiltonian has " +
                          std::to_string(h.n_qubits()));
  }
  const auto coeffs = coefficients_at(h, g);
  CVector out = coeffs.offset * v.amplitudes();
  for (const auto& t : coeffs.terms) {
    accumulate_pauli(t.pauli, t.coefficient, v.amplitudes(), out);
  }
  return StateVector(std::move(out));
}

}  // namespace eigencont
