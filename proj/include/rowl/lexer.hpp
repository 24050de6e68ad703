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
#include <string_view>
#include <vector>

#include "rowl/diagnostics.hpp"
#include "rowl/rule.hpp"

namespace rowl {

enum class TokenKind {
  If,
  Then,
  And,
  Equivalent,
  PartOf,
  Not,
  In,      // "in" or "∈"
  Subset,  // "⊂"
  Equals,
  LParen,
  RParen,
  Comma,
  Ident,
};

inline std::string_view token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::If: return "IF";
    case TokenKind::Then: return "THEN";
    case TokenKind::And: return "'and'";
    case TokenKind::Equivalent: return "'equivalent'";
    case TokenKind::PartOf: return "'part_of'";
    case TokenKind::Not: return "'not'";
    case TokenKind::In: return "'in'";
    case TokenKind::Subset: return "'⊂'";
    case TokenKind::Equals: return "'='";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Ident: return "identifier";
  }
  return "token";
}

struct Token {
  TokenKind kind = TokenKind::Ident;
  std::string text;
  int column = 1;  // 1-based byte offset into the line

  bool operator==(const Token&) const = default;
};

namespace detail {

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline std::string printable_char(unsigned char c) {
  if (c >= 0x20 && c < 0x7F) return std::string(1, static_cast<char>(c));
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "\\x";
  out += kHex[c >> 4];
  out += kHex[c & 0xF];
  return out;
}

}  // namespace detail

/// Splits one logical rule line into tokens. Reserved words are matched
/// case-insensitively; "∈" and "in" both yield In; "⊂" yields Subset.
/// Columns are 1-based byte offsets. An ASCII character outside the token
/// alphabet is an error; bytes >= 0x80 are identifier characters, so UTF-8
/// names lex without inspection.
inline Result<std::vector<Token>> tokenize(std::string_view line,
                                           int line_no = 1) {
  constexpr std::string_view kMemberOfUtf8 = "\xE2\x88\x88";  // ∈
  constexpr std::string_view kSubsetUtf8 = "\xE2\x8A\x82";    // ⊂

  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    const int column = static_cast<int>(i) + 1;
    if (is_space_byte(c)) {
      ++i;
      continue;
    }
    switch (c) {
      case '(': out.push_back({TokenKind::LParen, "(", column}); ++i; continue;
      case ')': out.push_back({TokenKind::RParen, ")", column}); ++i; continue;
      case ',': out.push_back({TokenKind::Comma, ",", column}); ++i; continue;
      case '=': out.push_back({TokenKind::Equals, "=", column}); ++i; continue;
      default: break;
    }
    if (line.substr(i, kMemberOfUtf8.size()) == kMemberOfUtf8) {
      out.push_back({TokenKind::In, std::string(kMemberOfUtf8), column});
      i += kMemberOfUtf8.size();
      continue;
    }
    if (line.substr(i, kSubsetUtf8.size()) == kSubsetUtf8) {
      out.push_back({TokenKind::Subset, std::string(kSubsetUtf8), column});
      i += kSubsetUtf8.size();
      continue;
    }
    if (is_identifier_start(c)) {
      size_t end = i + 1;
      while (end < line.size() &&
             is_identifier_char(static_cast<unsigned char>(line[end]))) {
        ++end;
      }
      std::string text(line.substr(i, end - i));
      const std::string lower = detail::ascii_lower(text);
      TokenKind kind = TokenKind::Ident;
      if (lower == "if") kind = TokenKind::If;
      else if (lower == "then") kind = TokenKind::Then;
      else if (lower == "and") kind = TokenKind::And;
      else if (lower == "equivalent") kind = TokenKind::Equivalent;
      else if (lower == "part_of") kind = TokenKind::PartOf;
      else if (lower == "not") kind = TokenKind::Not;
      else if (lower == "in") kind = TokenKind::In;
      out.push_back({kind, std::move(text), column});
      i = end;
      continue;
    }
    return Diagnostic::error(
        DiagCode::Lex,
        "illegal character '" + detail::printable_char(c) + "'", line_no,
        column, std::string(line));
  }
  return out;
}

}  // namespace rowl
