// Copyright 2026 The rowl Authors
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

#include <string>
#include <variant>

namespace rowl {

enum class Severity { Warning, Error };

/// Machine-checkable category of a diagnostic. Tests and the CLI branch on
/// this instead of matching message strings.
enum class DiagCode {
  General,
  Lex,          // illegal character while tokenizing
  Parse,        // grammar violation
  Notation,     // variable-notation normalization failure
  Unmappable,   // rule matches no supported kind
  Conflict,     // equivalentClass vs complementOf on one class pair
  DomainClash,  // datatype property id reused under another domain
  Xml,          // malformed XML input
  Unsupported,  // OWL construct outside the generated subset
  DanglingRef,  // reference to an undeclared class
  Io,
};

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::General;
  int line = 0;    // 1-based; 0 when unknown
  int column = 0;  // 1-based byte offset into the line; 0 when unknown
  std::string message;
  std::string source_text;  // offending input line, when available

  static Diagnostic error(DiagCode code, std::string message, int line = 0,
                          int column = 0, std::string source_text = {}) {
    return {Severity::Error, code, line, column, std::move(message),
            std::move(source_text)};
  }

  static Diagnostic warning(DiagCode code, std::string message, int line = 0,
                            int column = 0, std::string source_text = {}) {
    return {Severity::Warning, code, line, column, std::move(message),
            std::move(source_text)};
  }
};

inline const char* severity_name(Severity s) {
  return s == Severity::Error ? "ERROR" : "WARNING";
}

/// Renders a diagnostic the way the CLI prints it: "LEVEL line:col message".
inline std::string format_diagnostic(const Diagnostic& d) {
  std::string out = severity_name(d.severity);
  out += ' ';
  out += std::to_string(d.line);
  out += ':';
  out += std::to_string(d.column);
  out += ' ';
  out += d.message;
  return out;
}

/// Either a value or the first diagnostic that prevented producing one.
template <typename T>
using Result = std::variant<T, Diagnostic>;

template <typename T>
bool is_error(const Result<T>& r) {
  return std::holds_alternative<Diagnostic>(r);
}

template <typename T>
const T& value(const Result<T>& r) {
  return std::get<T>(r);
}

template <typename T>
T&& take_value(Result<T>&& r) {
  return std::get<T>(std::move(r));
}

template <typename T>
const Diagnostic& error(const Result<T>& r) {
  return std::get<Diagnostic>(r);
}

}  // namespace rowl
