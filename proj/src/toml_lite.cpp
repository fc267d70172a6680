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

#include "toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "eigencont/error.hpp"

namespace eigencont::toml {

const char* Value::type_name() const {
  switch (data.index()) {
    case 0: return "boolean";
    case 1: return "integer";
    case 2: return "float";
    case 3: return "string";
    case 4: return "array";
    default: return "table";
  }
}

namespace {

Value make_table(int line) {
  return Value{std::make_shared<Table>(), line};
}

Value make_array(int line) {
  return Value{std::make_shared<Array>(), line};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Table run() {
    Value root = make_table(1);
    Table* current = &root.table();
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        current = header(root);
      } else {
        key_value(*current);
      }
      end_of_line();
    }
    return std::move(root.table());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  // tables created by a [header] or key = {...}; redefinition is an error
  std::vector<const Table*> defined_;

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("TOML parse error: " + what, line_);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  char get() {
    const char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  void skip_comment() {
    if (peek() == '#') {
      while (!eof() && peek() != '\n') ++pos_;
    }
  }
  void skip_blank_lines() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (peek() == '\r') ++pos_;
      if (peek() == '\n') {
        get();
        continue;
      }
      break;
    }
  }
  // whitespace, comments and newlines inside arrays
  void skip_array_space() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (peek() == '\r' || peek() == '\n') {
        get();
        continue;
      }
      break;
    }
  }
  void end_of_line() {
    skip_ws();
    skip_comment();
    if (peek() == '\r') ++pos_;
    if (eof()) return;
    if (peek() != '\n') fail(std::string("unexpected character '") + peek() + "'");
    get();
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  static bool bare_key_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  std::string single_key() {
    skip_ws();
    if (peek() == '"') return basic_string();
    if (peek() == '\'') return literal_string();
    const std::size_t start = pos_;
    while (!eof() && bare_key_char(peek())) ++pos_;
    if (start == pos_) fail("expected a key");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<std::string> dotted_key() {
    std::vector<std::string> parts{single_key()};
    skip_ws();
    while (peek() == '.') {
      ++pos_;
      parts.push_back(single_key());
      skip_ws();
    }
    return parts;
  }

  // Walks/creates intermediate tables for a dotted path.
  Table* descend(Table* t, const std::vector<std::string>& path,
                 std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      auto it = t->find(path[i]);
      if (it == t->end()) {
        it = t->emplace(path[i], make_table(line_)).first;
      }
      Value& v = it->second;
      if (v.is_array() && !v.array().empty() && v.array().back().is_table()) {
        t = &v.array().back().table();
      } else if (v.is_table()) {
        t = &v.table();
      } else {
        fail("key '" + path[i] + "' is not a table");
      }
    }
    return t;
  }

  Table* header(Value& root) {
    get();  // '['
    const bool array_of_tables = peek() == '[';
    if (array_of_tables) get();
    const auto path = dotted_key();
    expect(']');
    if (array_of_tables) expect(']');
    Table* parent = descend(&root.table(), path, path.size() - 1);
    const std::string& last = path.back();
    if (array_of_tables) {
      auto it = parent->find(last);
      if (it == parent->end()) {
        it = parent->emplace(last, make_array(line_)).first;
      } else if (!it->second.is_array()) {
        fail("key '" + last + "' already defined as " + it->second.type_name());
      }
      it->second.array().push_back(make_table(line_));
      return &it->second.array().back().table();
    }
    auto it = parent->find(last);
    if (it == parent->end()) {
      it = parent->emplace(last, make_table(line_)).first;
    } else if (!it->second.is_table()) {
      fail("key '" + last + "' already defined as " + it->second.type_name());
    }
    Table* t = &it->second.table();
    for (const Table* d : defined_) {
      if (d == t) fail("table [" + last + "] defined twice");
    }
    defined_.push_back(t);
    return t;
  }

  void key_value(Table& into) {
    const auto path = dotted_key();
    skip_ws();
    expect('=');
    skip_ws();
    const int line = line_;
    Value v = value();
    v.line = line;
    Table* t = descend(&into, path, path.size() - 1);
    if (!t->emplace(path.back(), std::move(v)).second) {
      fail("duplicate key '" + path.back() + "'");
    }
  }

  Value value() {
    const char c = peek();
    if (c == '"') return Value{basic_string(), line_};
    if (c == '\'') return Value{literal_string(), line_};
    if (c == '[') return array();
    if (c == '{') return inline_table();
    if (text_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return Value{true, line_};
    }
    if (text_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return Value{false, line_};
    }
    return number();
  }

  std::string basic_string() {
    get();  // '"'
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = get();
      if (c == '"') break;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (eof()) fail("unterminated escape");
      switch (get()) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        case 'b': out.push_back('\b'); break;
        case 'f': out.push_back('\f'); break;
        default: fail("unsupported escape sequence");
      }
    }
    return out;
  }

  std::string literal_string() {
    get();  // '\''
    const std::size_t start = pos_;
    while (!eof() && peek() != '\'' && peek() != '\n') ++pos_;
    if (peek() != '\'') fail("unterminated literal string");
    std::string out(text_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  Value number() {
    const int line = line_;
    const std::size_t start = pos_;
    while (!eof()) {
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
          c == '.' || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    std::string token;
    for (char c : text_.substr(start, pos_ - start)) {
      if (c != '_') token.push_back(c);
    }
    if (token.empty()) fail("expected a value");
    std::string_view body = token;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    if (body == "inf" || body == "nan") {
      const double v = body == "inf" ? std::numeric_limits<double>::infinity()
                                     : std::numeric_limits<double>::quiet_NaN();
      return Value{negative ? -v : v, line};
    }
    const bool is_float = body.find_first_of(".eE") != std::string_view::npos;
    if (is_float) {
      double v = 0.0;
      const auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
      if (ec != std::errc{} || p != body.data() + body.size()) {
        fail("invalid number '" + token + "'");
      }
      return Value{negative ? -v : v, line};
    }
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc{} || p != body.data() + body.size()) {
      fail("invalid value '" + token + "'");
    }
    return Value{negative ? -v : v, line};
  }

  Value array() {
    Value out = make_array(line_);
    get();  // '['
    while (true) {
      skip_array_space();
      if (peek() == ']') {
        get();
        break;
      }
      const int line = line_;
      Value item = value();
      item.line = line;
      out.array().push_back(std::move(item));
      skip_array_space();
      if (peek() == ',') {
        get();
        continue;
      }
      if (peek() == ']') {
        get();
        break;
      }
      fail("expected ',' or ']' in array");
    }
    return out;
  }

  Value inline_table() {
    Value out = make_table(line_);
    get();  // '{'
    skip_ws();
    if (peek() == '}') {
      get();
      return out;
    }
    while (true) {
      key_value(out.table());
      skip_ws();
      if (peek() == ',') {
        get();
        continue;
      }
      expect('}');
      break;
    }
    defined_.push_back(&out.table());
    return out;
  }
};

}  // namespace

Table parse(std::string_view text) { return Parser(text).run(); }

}  // namespace eigencont::toml
