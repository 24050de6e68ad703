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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rowl/diagnostics.hpp"
#include "rowl/lexer.hpp"
#include "rowl/rule.hpp"

namespace rowl {

// Recursive-descent parser for the rule language:
//
//   rule       := "IF" premise "THEN" conclusion
//   premise    := pterm ("and" pterm)*
//   pterm      := IDENT
//               | "(" IDENT "equivalent" IDENT ")"
//               | "(" IDENT ("," IDENT)* ("∈"|"in") IDENT ")"
//   conclusion := IDENT
//               | ("not"|"part_of") IDENT
//               | IDENT IDENT+                 -- named relation, last is target
//               | "(" IDENT ("," IDENT)* ("∈"|"in") IDENT ")"
//
// plus the variable notation "IF x ⊂ F1 and F2 THEN x = C", which parses
// into SubsetPattern/EqualsPattern terms and is eliminated by
// normalize_notation. The token grammar is LL(1) apart from the bounded
// identifier lookahead in conclusions.

namespace detail {

class TokenCursor {
 public:
  TokenCursor(const std::vector<Token>& tokens, std::string_view source,
              int line_no)
      : tokens_(tokens), source_(source), line_(line_no) {}

  bool at_end() const { return index_ >= tokens_.size(); }

  bool peek_is(TokenKind k) const {
    return !at_end() && tokens_[index_].kind == k;
  }

  const Token& peek() const { return tokens_[index_]; }

  const Token& advance() { return tokens_[index_++]; }

  bool accept(TokenKind k) {
    if (!peek_is(k)) return false;
    ++index_;
    return true;
  }

  int error_column() const {
    if (!at_end()) return tokens_[index_].column;
    if (tokens_.empty()) return 1;
    const Token& last = tokens_.back();
    return last.column + static_cast<int>(last.text.size());
  }

  Diagnostic error(std::string message) const {
    return Diagnostic::error(DiagCode::Parse, std::move(message), line_,
                             error_column(), std::string(source_));
  }

  Diagnostic unexpected(std::string_view expected) const {
    std::string found =
        at_end() ? std::string("end of line")
                 : "'" + peek().text + "'";
    return error("unexpected " + found + " (expected " +
                 std::string(expected) + ")");
  }

 private:
  const std::vector<Token>& tokens_;
  std::string_view source_;
  int line_;
  size_t index_ = 0;
};

inline Result<Fact> expect_fact(TokenCursor& cur, std::string_view what) {
  if (!cur.peek_is(TokenKind::Ident)) return cur.unexpected(what);
  return Fact(cur.advance().text);
}

// Parses "( ... )" after the '(' has been confirmed but not consumed.
// Memberships are allowed everywhere; equivalence pairs only in premises.
inline Result<PremiseTerm> parse_group(TokenCursor& cur,
                                       bool allow_equivalence) {
  cur.advance();  // '('
  auto first = expect_fact(cur, "fact inside '('");
  if (is_error(first)) return error(first);

  if (allow_equivalence && cur.accept(TokenKind::Equivalent)) {
    auto second = expect_fact(cur, "fact after 'equivalent'");
    if (is_error(second)) return error(second);
    if (!cur.accept(TokenKind::RParen)) {
      return cur.error("unbalanced parentheses");
    }
    return PremiseTerm(EquivalenceTerm{value(first), value(second)});
  }

  if (cur.peek_is(TokenKind::Comma) || cur.peek_is(TokenKind::In)) {
    std::vector<Fact> members{value(first)};
    while (cur.accept(TokenKind::Comma)) {
      auto member = expect_fact(cur, "fact after ','");
      if (is_error(member)) return error(member);
      members.push_back(value(member));
    }
    if (!cur.accept(TokenKind::In)) {
      return cur.unexpected("'in'");
    }
    auto target = expect_fact(cur, "fact after 'in'");
    if (is_error(target)) return error(target);
    if (!cur.accept(TokenKind::RParen)) {
      return cur.error("unbalanced parentheses");
    }
    return PremiseTerm(MembershipTerm{std::move(members), value(target)});
  }

  return cur.unexpected(allow_equivalence ? "'equivalent', ',' or 'in'"
                                          : "',' or 'in'");
}

inline Result<PremiseTerm> parse_premise_term(TokenCursor& cur,
                                              bool allow_subset) {
  if (cur.peek_is(TokenKind::Ident)) {
    Fact fact(cur.advance().text);
    if (cur.peek_is(TokenKind::Subset)) {
      if (!allow_subset) {
        return cur.error("'⊂' is only allowed on the first premise term");
      }
      cur.advance();
      auto head = expect_fact(cur, "fact after '⊂'");
      if (is_error(head)) return error(head);
      return PremiseTerm(SubsetPattern{std::move(fact), value(head)});
    }
    return PremiseTerm(FactTerm{std::move(fact)});
  }
  if (cur.peek_is(TokenKind::LParen)) {
    return parse_group(cur, /*allow_equivalence=*/true);
  }
  return cur.unexpected("fact or '('");
}

inline Result<ConclusionTerm> parse_conclusion(TokenCursor& cur) {
  if (cur.peek_is(TokenKind::Not) || cur.peek_is(TokenKind::PartOf)) {
    const bool negated = cur.advance().kind == TokenKind::Not;
    auto target = expect_fact(cur, "fact after relation keyword");
    if (is_error(target)) return error(target);
    return ConclusionTerm(RelationTerm{
        negated ? RelationKeyword::negation() : RelationKeyword::part_of(),
        value(target)});
  }

  if (cur.peek_is(TokenKind::LParen)) {
    auto group = parse_group(cur, /*allow_equivalence=*/false);
    if (is_error(group)) return error(group);
    return ConclusionTerm(std::get<MembershipTerm>(value(group)));
  }

  if (cur.peek_is(TokenKind::Ident)) {
    std::vector<std::string> parts{cur.advance().text};
    if (cur.accept(TokenKind::Equals)) {
      auto value_fact = expect_fact(cur, "fact after '='");
      if (is_error(value_fact)) return error(value_fact);
      return ConclusionTerm(
          EqualsPattern{Fact(parts.front()), value(value_fact)});
    }
    while (cur.peek_is(TokenKind::Ident)) {
      parts.push_back(cur.advance().text);
    }
    if (parts.size() == 1) {
      if (!cur.at_end()) return cur.unexpected("end of rule");
      return ConclusionTerm(FactTerm{Fact(parts.front())});
    }
    // Consecutive identifiers: all but the last concatenate into one named
    // relation ("has Vechicle Car" -> hasVechicle, Car).
    std::string name;
    for (size_t i = 0; i + 1 < parts.size(); ++i) name += parts[i];
    if (is_reserved_word(name)) {
      return cur.error("relation name '" + name + "' is a reserved word");
    }
    return ConclusionTerm(
        RelationTerm{RelationKeyword::named(name), Fact(parts.back())});
  }

  return cur.unexpected("conclusion");
}

}  // namespace detail

/// Parses one token sequence into a Rule with kind Unclassified. Every
/// failure is reported as a single ERROR diagnostic with the offending
/// column; the parser never throws on malformed input.
inline Result<Rule> parse_rule(const std::vector<Token>& tokens,
                               std::string_view source_text = {},
                               int line_no = 1) {
  detail::TokenCursor cur(tokens, source_text, line_no);

  if (!cur.accept(TokenKind::If)) {
    return cur.unexpected("IF");
  }
  if (cur.peek_is(TokenKind::Then)) {
    return cur.error("empty premise");
  }

  std::vector<PremiseTerm> premise;
  auto first = detail::parse_premise_term(cur, /*allow_subset=*/true);
  if (is_error(first)) return error(first);
  premise.push_back(value(first));
  while (cur.accept(TokenKind::And)) {
    auto term = detail::parse_premise_term(cur, /*allow_subset=*/false);
    if (is_error(term)) return error(term);
    premise.push_back(value(term));
  }

  if (!cur.accept(TokenKind::Then)) {
    return cur.unexpected("'and' or THEN");
  }
  if (cur.at_end()) {
    return cur.error("empty conclusion");
  }

  auto conclusion = detail::parse_conclusion(cur);
  if (is_error(conclusion)) return error(conclusion);
  if (!cur.at_end()) {
    return cur.unexpected("end of rule");
  }

  Rule rule;
  rule.premise = std::move(premise);
  rule.conclusion = value(conclusion);
  rule.source_text = std::string(source_text);
  rule.line = line_no;
  return rule;
}

/// Rewrites the variable notation "IF x ⊂ F1 and F2 THEN x = C" into the
/// canonical notation "IF F1 and F2 THEN C". Rules without variable terms
/// are returned unchanged. A variable bound on only one side, or bound to
/// different names, is an error.
inline Result<Rule> normalize_notation(Rule rule) {
  const SubsetPattern* subset = nullptr;
  for (const auto& term : rule.premise) {
    if (const auto* s = std::get_if<SubsetPattern>(&term)) {
      if (subset != nullptr) {
        return Diagnostic::error(DiagCode::Notation,
                                 "multiple '⊂' premise terms", rule.line, 1,
                                 rule.source_text);
      }
      subset = s;
    }
  }
  const auto* equals = std::get_if<EqualsPattern>(&rule.conclusion);

  if (subset == nullptr && equals == nullptr) return rule;

  if (subset == nullptr || equals == nullptr ||
      subset->variable != equals->variable) {
    std::string premise_var =
        subset != nullptr ? subset->variable.name() : "(none)";
    std::string conclusion_var =
        equals != nullptr ? equals->variable.name() : "(none)";
    return Diagnostic::error(
        DiagCode::Notation,
        "unbound notation variable: premise binds '" + premise_var +
            "', conclusion uses '" + conclusion_var + "'",
        rule.line, 1, rule.source_text);
  }

  Rule normalized = rule;
  for (auto& term : normalized.premise) {
    if (const auto* s = std::get_if<SubsetPattern>(&term)) {
      term = FactTerm{s->head};
    }
  }
  normalized.conclusion = FactTerm{equals->value};
  return normalized;
}

/// Tokenizes and parses one non-blank line.
inline Result<Rule> parse_line(std::string_view line, int line_no = 1) {
  auto tokens = tokenize(line, line_no);
  if (is_error(tokens)) return error(tokens);
  return parse_rule(value(tokens), line, line_no);
}

struct ParsedRules {
  std::vector<Rule> rules;
  std::vector<Diagnostic> diagnostics;
};

/// Parses a whole rule file: one rule per line, '#' starts a comment line,
/// blank lines are ignored. Every non-blank line yields exactly one rule or
/// at least one ERROR diagnostic.
inline ParsedRules parse_rules(std::string_view text) {
  ParsedRules out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    size_t first = 0;
    while (first < line.size() &&
           is_space_byte(static_cast<unsigned char>(line[first]))) {
      ++first;
    }
    const bool blank = first == line.size();
    const bool comment = !blank && line[first] == '#';
    if (!blank && !comment) {
      auto parsed = parse_line(line, line_no);
      if (is_error(parsed)) {
        out.diagnostics.push_back(error(parsed));
      } else {
        out.rules.push_back(take_value(std::move(parsed)));
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace rowl
