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

// Parser for the subset of TOML used by sweep configs: tables, arrays of
// tables, dotted and quoted keys, basic/literal strings, integers, floats,
// booleans, (nested, multi-line) arrays and inline tables. Dates and
// multi-line strings are not supported.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eigencont::toml {

struct Value;
using Array = std::vector<Value>;
using Table = std::map<std::string, Value>;

struct Value {
  std::variant<bool, std::int64_t, double, std::string, std::shared_ptr<Array>,
               std::shared_ptr<Table>>
      data;
  int line = 0;

  bool is_table() const { return std::holds_alternative<std::shared_ptr<Table>>(data); }
  bool is_array() const { return std::holds_alternative<std::shared_ptr<Array>>(data); }
  const Table& table() const { return *std::get<std::shared_ptr<Table>>(data); }
  Table& table() { return *std::get<std::shared_ptr<Table>>(data); }
  const Array& array() const { return *std::get<std::shared_ptr<Array>>(data); }
  Array& array() { return *std::get<std::shared_ptr<Array>>(data); }
  const char* type_name() const;
};

// Throws ConfigError carrying the offending line.
Table parse(std::string_view text);

}  // namespace eigencont::toml
