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
#include <utility>
#include <vector>

#include "rowl/diagnostics.hpp"

namespace rowl::xml {

// A deliberately small, non-validating XML 1.0 reader: elements, attributes,
// character data, comments, processing instructions and the five predefined
// entities plus numeric references. No DOCTYPE, no CDATA. It reads either a
// whole document or a bare sequence of sibling elements, which is how
// ontology fragments without a root element are consumed.

struct Element {
  std::string name;  // as written, prefix included ("owl:Class")
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::string text;  // concatenated character data

  const std::string* attribute(std::string_view attr_name) const {
    for (const auto& [k, v] : attributes) {
      if (k == attr_name) return &v;
    }
    return nullptr;
  }

  bool operator==(const Element&) const = default;
};

inline std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string escape_attribute(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

namespace detail {

inline bool is_name_start(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' ||
         c == ':' || c >= 0x80;
}

inline bool is_name_char(unsigned char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

class Reader {
 public:
  explicit Reader(std::string_view input) : in_(input) {}

  Result<std::vector<Element>> run() {
    std::vector<Element> roots;
    if (!skip_misc()) return take_error();
    while (!at_end()) {
      Element element;
      if (!parse_element(element)) return take_error();
      roots.push_back(std::move(element));
      if (!skip_misc()) return take_error();
    }
    if (roots.empty()) {
      fail("no XML content");
      return take_error();
    }
    return roots;
  }

 private:
  bool at_end() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }

  char advance() {
    const char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  bool starts_with(std::string_view s) const {
    return in_.substr(pos_, s.size()) == s;
  }

  void skip(size_t n) {
    for (size_t i = 0; i < n && !at_end(); ++i) advance();
  }

  bool fail(std::string message) {
    if (!failed_) {
      error_ = Diagnostic::error(DiagCode::Xml,
                                 "malformed XML: " + std::move(message), line_,
                                 col_);
      failed_ = true;
    }
    return false;
  }

  Diagnostic take_error() {
    if (!failed_) fail("internal reader error");
    return error_;
  }

  void skip_whitespace() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' ||
                         peek() == '\n')) {
      advance();
    }
  }

  // Skips whitespace, comments, processing instructions and the XML
  // declaration between top-level elements.
  bool skip_misc() {
    for (;;) {
      skip_whitespace();
      if (starts_with("<?")) {
        const size_t end = in_.find("?>", pos_);
        if (end == std::string_view::npos) return fail("unterminated '<?'");
        skip(end + 2 - pos_);
        continue;
      }
      if (starts_with("<!--")) {
        if (!skip_comment()) return false;
        continue;
      }
      if (starts_with("<!")) {
        return fail("unsupported markup declaration");
      }
      return true;
    }
  }

  bool skip_comment() {
    const size_t end = in_.find("-->", pos_);
    if (end == std::string_view::npos) return fail("unterminated comment");
    skip(end + 3 - pos_);
    return true;
  }

  bool parse_name(std::string& out) {
    if (at_end() || !is_name_start(static_cast<unsigned char>(peek()))) {
      return fail("expected a name");
    }
    out.clear();
    while (!at_end() && is_name_char(static_cast<unsigned char>(peek()))) {
      out.push_back(advance());
    }
    return true;
  }

  bool decode_entity(std::string& out) {
    advance();  // '&'
    const size_t end = in_.find(';', pos_);
    if (end == std::string_view::npos || end - pos_ > 8) {
      return fail("unterminated entity reference");
    }
    const std::string_view name = in_.substr(pos_, end - pos_);
    skip(end + 1 - pos_);
    if (name == "amp") out.push_back('&');
    else if (name == "lt") out.push_back('<');
    else if (name == "gt") out.push_back('>');
    else if (name == "quot") out.push_back('"');
    else if (name == "apos") out.push_back('\'');
    else if (!name.empty() && name.front() == '#') {
      int code = 0;
      size_t i = 1;
      const bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
      if (hex) i = 2;
      if (i >= name.size()) return fail("bad character reference");
      for (; i < name.size(); ++i) {
        const char c = name[i];
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (hex && c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else return fail("bad character reference");
        code = code * (hex ? 16 : 10) + digit;
        if (code > 0x10FFFF) return fail("character reference out of range");
      }
      append_utf8(out, code);
    } else {
      return fail("unknown entity '&" + std::string(name) + ";'");
    }
    return true;
  }

  static void append_utf8(std::string& out, int code) {
    if (code < 0x80) {
      out.push_back(static_cast<char>(code));
    } else if (code < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (code >> 6)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else if (code < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (code >> 12)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (code >> 18)));
      out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    }
  }

  bool parse_attribute_value(std::string& out) {
    if (at_end() || (peek() != '"' && peek() != '\'')) {
      return fail("expected a quoted attribute value");
    }
    const char quote = advance();
    out.clear();
    while (!at_end() && peek() != quote) {
      if (peek() == '<') return fail("'<' in attribute value");
      if (peek() == '&') {
        if (!decode_entity(out)) return false;
      } else {
        out.push_back(advance());
      }
    }
    if (at_end()) return fail("unterminated attribute value");
    advance();  // closing quote
    return true;
  }

  bool parse_element(Element& out) {
    if (at_end() || peek() != '<') return fail("expected '<'");
    advance();
    if (!parse_name(out.name)) return false;

    for (;;) {
      skip_whitespace();
      if (at_end()) return fail("unterminated start tag");
      if (peek() == '>') {
        advance();
        return parse_content(out);
      }
      if (starts_with("/>")) {
        skip(2);
        return true;
      }
      std::string attr_name;
      if (!parse_name(attr_name)) return false;
      skip_whitespace();
      if (at_end() || peek() != '=') return fail("expected '='");
      advance();
      skip_whitespace();
      std::string attr_value;
      if (!parse_attribute_value(attr_value)) return false;
      if (out.attribute(attr_name) != nullptr) {
        return fail("duplicate attribute '" + attr_name + "'");
      }
      out.attributes.emplace_back(std::move(attr_name), std::move(attr_value));
    }
  }

  bool parse_content(Element& out) {
    for (;;) {
      if (at_end()) return fail("missing closing tag for '" + out.name + "'");
      if (starts_with("</")) {
        skip(2);
        std::string close_name;
        if (!parse_name(close_name)) return false;
        skip_whitespace();
        if (at_end() || peek() != '>') return fail("expected '>'");
        advance();
        if (close_name != out.name) {
          return fail("mismatched closing tag '" + close_name +
                      "' (expected '" + out.name + "')");
        }
        return true;
      }
      if (starts_with("<!--")) {
        if (!skip_comment()) return false;
        continue;
      }
      if (starts_with("<![")) return fail("unsupported CDATA section");
      if (starts_with("<?")) {
        const size_t end = in_.find("?>", pos_);
        if (end == std::string_view::npos) return fail("unterminated '<?'");
        skip(end + 2 - pos_);
        continue;
      }
      if (peek() == '<') {
        Element child;
        if (!parse_element(child)) return false;
        out.children.push_back(std::move(child));
        continue;
      }
      if (peek() == '&') {
        if (!decode_entity(out.text)) return false;
        continue;
      }
      out.text.push_back(advance());
    }
  }

  std::string_view in_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool failed_ = false;
  Diagnostic error_;
};

}  // namespace detail

/// Parses a document or a bare sequence of sibling elements. Returns the
/// top-level elements, or the first syntax error with line and column.
inline Result<std::vector<Element>> parse(std::string_view input) {
  return detail::Reader(input).run();
}

}  // namespace rowl::xml
