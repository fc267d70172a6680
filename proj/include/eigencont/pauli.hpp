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
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "eigencont/statevector.hpp"

namespace eigencont {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Phaseless tensor product of single-qubit Paulis. Letter 0 acts on qubit 0,
/// which is the most significant bit of the basis index.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> letters);
  // Parses e.g. "XZI". Throws InvalidArgument on other characters or "".
  static PauliString parse(std::string_view letters);
  // Single-letter string `p` on `qubit`, identity elsewhere.
  static PauliString single(int n_qubits, int qubit, Pauli p);
  static PauliString pair(int n_qubits, int q0, int q1, Pauli p);

  int n_qubits() const noexcept { return static_cast<int>(letters_.size()); }
  const std::vector<Pauli>& letters() const noexcept { return letters_; }
  std::string str() const;

  // Bits flipped by X/Y, and bits whose value contributes a sign (Z/Y).
  std::uint64_t flip_mask() const noexcept { return flip_mask_; }
  std::uint64_t sign_mask() const noexcept { return sign_mask_; }
  int y_count() const noexcept { return y_count_; }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Pauli> letters_;
  std::uint64_t flip_mask_ = 0;
  std::uint64_t sign_mask_ = 0;
  int y_count_ = 0;
};

// P|v>. Throws InvalidArgument on a qubit-count mismatch.
StateVector apply_pauli(const PauliString& p, const StateVector& v);

// c(g) = value.
struct ConstantRule {
  double value = 0.0;
};
// c(g) = offset + slope * g.
struct LinearRule {
  double offset = 0.0;
  double slope = 0.0;
};
// c(g) = table[g][column]; only meaningful inside a Hamiltonian that owns a
// coefficient table containing `column`.
struct TableColumnRule {
  std::string column;
};
using CoefficientRule = std::variant<ConstantRule, LinearRule, TableColumnRule>;

std::string describe(const CoefficientRule& rule);

/// Parameter-keyed table of named real columns. Lookups match keys exactly
/// (within 1e-12); there is no interpolation.
class CoefficientTable {
 public:
  CoefficientTable(std::string key_name, std::vector<std::string> columns,
                   std::vector<double> keys,
                   std::vector<std::vector<double>> rows);

  // CSV with header `<key>,<col>,...`. Blank lines and lines starting with
  // '#' are skipped.
  static CoefficientTable parse_csv(std::string_view text);
  static CoefficientTable load_csv(const std::filesystem::path& path);

  const std::string& key_name() const noexcept { return key_name_; }
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<double>& keys() const noexcept { return keys_; }
  const std::vector<double>& row(std::size_t i) const { return rows_.at(i); }
  std::size_t size() const noexcept { return keys_.size(); }

  std::optional<std::size_t> column_index(std::string_view name) const;
  // Throws DataError when g is not a key.
  std::size_t row_index(double g) const;
  double value(double g, std::size_t column) const;

 private:
  std::string key_name_;
  std::vector<std::string> columns_;
  std::vector<double> keys_;
  std::vector<std::vector<double>> rows_;
};

struct HamiltonianTerm {
  PauliString pauli;
  CoefficientRule rule;
};

struct ConcreteTerm {
  PauliString pauli;
  double coefficient;
};

struct ConcreteCoefficients {
  std::vector<ConcreteTerm> terms;
  double offset = 0.0;
};

/// H(g) = sum_k c_k(g) P^k + offset(g) I.
///
/// The offset is a sum of rules so that several identity contributions
/// (e.g. an electronic constant and a nuclear repulsion column) can be kept
/// separate. Immutable after construction.
class ParamHamiltonian {
 public:
  ParamHamiltonian(int n_qubits, std::vector<HamiltonianTerm> terms,
                   std::vector<CoefficientRule> offset = {},
                   std::shared_ptr<const CoefficientTable> table = nullptr);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<HamiltonianTerm>& terms() const noexcept { return terms_; }
  const std::vector<CoefficientRule>& offset_rules() const noexcept {
    return offset_;
  }
  const std::shared_ptr<const CoefficientTable>& table() const noexcept {
    return table_;
  }

  double evaluate(const CoefficientRule& rule, double g) const;
  double offset_at(double g) const;

 private:
  int n_qubits_;
  std::vector<HamiltonianTerm> terms_;
  std::vector<CoefficientRule> offset_;
  std::shared_ptr<const CoefficientTable> table_;
};

ConcreteCoefficients coefficients_at(const ParamHamiltonian& h, double g);

StateVector apply_hamiltonian(const ParamHamiltonian& h, double g,
                              const StateVector& v);

}  // namespace eigencont
