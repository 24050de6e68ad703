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

#include <algorithm>
#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rowl {

// ---------------------------------------------------------------------------
// Identifiers
//
// Identifiers name facts, classes, properties and relations. They are
// case-sensitive, must not contain whitespace, and are restricted to
// letters, digits and '_' (any byte >= 0x80 counts as a letter, so UTF-8
// names pass through unharmed). The first character must not be a digit,
// which keeps every identifier a legal XML NCName.
// ---------------------------------------------------------------------------

inline bool is_space_byte(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

inline bool is_identifier_start(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' ||
         c >= 0x80;
}

inline bool is_identifier_char(unsigned char c) {
  return is_identifier_start(c) || (c >= '0' && c <= '9');
}

/// Deletes all whitespace from a name, preserving the casing of each token.
/// Multi-word input like "has Vechicle" becomes "hasVechicle". Idempotent.
inline std::string normalize_identifier(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if (!is_space_byte(c)) out.push_back(static_cast<char>(c));
  }
  return out;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!is_identifier_start(static_cast<unsigned char>(s.front()))) return false;
  for (unsigned char c : s) {
    if (!is_identifier_char(c)) return false;
  }
  return true;
}

/// The rule language's reserved words, matched case-insensitively.
inline bool is_reserved_word(std::string_view s) {
  static constexpr std::array<std::string_view, 7> kReserved = {
      "if", "then", "and", "equivalent", "part_of", "not", "in"};
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  });
  return std::find(kReserved.begin(), kReserved.end(), lower) != kReserved.end();
}

// ---------------------------------------------------------------------------
// Facts
// ---------------------------------------------------------------------------

/// An atomic named thing appearing in a rule premise or conclusion.
/// Construction normalizes the name; equality is case-sensitive name
/// equality. The default constructor yields an empty placeholder that no
/// parsed or extracted rule ever contains.
class Fact {
 public:
  Fact() = default;
  explicit Fact(std::string_view name) : name_(normalize_identifier(name)) {
    if (!is_identifier(name_)) {
      throw std::invalid_argument("invalid fact name: '" + std::string(name) +
                                  "'");
    }
  }

  const std::string& name() const { return name_; }

  auto operator<=>(const Fact&) const = default;

 private:
  std::string name_;
};

// ---------------------------------------------------------------------------
// Relation keywords
// ---------------------------------------------------------------------------

/// The keyword joining the two objects of a relation conclusion: one of the
/// built-in relations or an arbitrary named link such as "hasVechicle".
struct RelationKeyword {
  enum class Kind { Equivalent, MemberOf, PartOf, Not, Named };

  Kind kind = Kind::Named;
  std::string name;  // set only when kind == Named

  static RelationKeyword equivalent() { return {Kind::Equivalent, {}}; }
  static RelationKeyword member_of() { return {Kind::MemberOf, {}}; }
  static RelationKeyword part_of() { return {Kind::PartOf, {}}; }
  static RelationKeyword negation() { return {Kind::Not, {}}; }

  static RelationKeyword named(std::string_view id) {
    std::string normalized = normalize_identifier(id);
    if (!is_identifier(normalized) || is_reserved_word(normalized)) {
      throw std::invalid_argument("invalid relation name: '" +
                                  std::string(id) + "'");
    }
    return {Kind::Named, std::move(normalized)};
  }

  /// Canonical lowercase spelling used in rendered rules.
  std::string_view spelled() const {
    switch (kind) {
      case Kind::Equivalent: return "equivalent";
      case Kind::MemberOf: return "in";
      case Kind::PartOf: return "part_of";
      case Kind::Not: return "not";
      case Kind::Named: return name;
    }
    return {};
  }

  auto operator<=>(const RelationKeyword&) const = default;
};

// ---------------------------------------------------------------------------
// Rule terms
// ---------------------------------------------------------------------------

struct FactTerm {
  Fact fact;
  auto operator<=>(const FactTerm&) const = default;
};

/// Premise group "(A equivalent B)".
struct EquivalenceTerm {
  Fact lhs;
  Fact rhs;
  auto operator<=>(const EquivalenceTerm&) const = default;
};

/// Membership assertion "(M1, M2 in T)"; members is non-empty.
struct MembershipTerm {
  std::vector<Fact> members;
  Fact target;
  auto operator<=>(const MembershipTerm&) const = default;
};

/// Head of the variable notation's premise: "x ⊂ F". Eliminated by
/// normalize_notation before classification.
struct SubsetPattern {
  Fact variable;
  Fact head;
  auto operator<=>(const SubsetPattern&) const = default;
};

/// Relation conclusion "not T", "part_of T" or "name T".
struct RelationTerm {
  RelationKeyword relation;
  Fact target;
  auto operator<=>(const RelationTerm&) const = default;
};

/// Conclusion of the variable notation: "x = C". Eliminated by
/// normalize_notation.
struct EqualsPattern {
  Fact variable;
  Fact value;
  auto operator<=>(const EqualsPattern&) const = default;
};

using PremiseTerm =
    std::variant<FactTerm, EquivalenceTerm, MembershipTerm, SubsetPattern>;
using ConclusionTerm =
    std::variant<FactTerm, RelationTerm, MembershipTerm, EqualsPattern>;

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

enum class RuleKind {
  Unclassified,
  ClassWithProperties,
  Equivalence,
  ObjectRelation,
  PartOf,
  Complement,
  BareSubsumption,
};

inline std::string_view rule_kind_name(RuleKind k) {
  switch (k) {
    case RuleKind::Unclassified: return "unclassified";
    case RuleKind::ClassWithProperties: return "class_with_properties";
    case RuleKind::Equivalence: return "equivalence";
    case RuleKind::ObjectRelation: return "object_relation";
    case RuleKind::PartOf: return "part_of";
    case RuleKind::Complement: return "complement";
    case RuleKind::BareSubsumption: return "bare_subsumption";
  }
  return "unclassified";
}

/// A parsed IF/THEN rule. Immutable in spirit: the pipeline passes rules by
/// value and never mutates a shared instance.
struct Rule {
  std::vector<PremiseTerm> premise;
  ConclusionTerm conclusion;
  RuleKind kind = RuleKind::Unclassified;
  std::string source_text;  // original input line, for diagnostics
  int line = 0;             // 1-based source line; 0 for synthetic rules
};

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Fact> sorted_unique(std::vector<Fact> facts) {
  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
  return facts;
}

inline std::string render_membership(const std::vector<Fact>& members,
                                     const Fact& target) {
  std::string out = "(";
  const std::vector<Fact> sorted = sorted_unique(members);
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out += ", ";
    out += sorted[i].name();
  }
  out += " in ";
  out += target.name();
  out += ")";
  return out;
}

inline std::string render_equivalence(const Fact& a, const Fact& b) {
  const Fact& lo = std::min(a, b);
  const Fact& hi = std::max(a, b);
  return "(" + lo.name() + " equivalent " + hi.name() + ")";
}

inline std::string render_premise_term(const PremiseTerm& term) {
  if (const auto* f = std::get_if<FactTerm>(&term)) return f->fact.name();
  if (const auto* e = std::get_if<EquivalenceTerm>(&term)) {
    return render_equivalence(e->lhs, e->rhs);
  }
  if (const auto* m = std::get_if<MembershipTerm>(&term)) {
    return render_membership(m->members, m->target);
  }
  throw std::logic_error("cannot render variable-notation term");
}

}  // namespace detail

/// Deterministic single-line rendering of a classified rule. Premise
/// conjuncts are sorted and de-duplicated, membership member lists are
/// sorted, the symmetric relations (equivalence, complement) are rendered
/// with the lexicographically smaller class first, and keywords use their
/// canonical lowercase spellings ("∈" renders as "in").
inline std::string canonical_form(const Rule& rule) {
  if (rule.kind == RuleKind::Unclassified) {
    throw std::logic_error("cannot canonicalize unclassified rule");
  }

  std::vector<std::string> premise_parts;
  std::string conclusion_part;

  if (rule.kind == RuleKind::Equivalence) {
    // The two membership targets of an equivalence rule are interchangeable
    // mirror images; canonical direction is "members in larger THEN members
    // in smaller".
    const EquivalenceTerm* eq = nullptr;
    const MembershipTerm* member = nullptr;
    for (const auto& term : rule.premise) {
      if (const auto* e = std::get_if<EquivalenceTerm>(&term)) eq = e;
      if (const auto* m = std::get_if<MembershipTerm>(&term)) member = m;
    }
    const auto* conclusion = std::get_if<MembershipTerm>(&rule.conclusion);
    if (eq == nullptr || member == nullptr || conclusion == nullptr) {
      throw std::logic_error("malformed equivalence rule");
    }
    const Fact lo = std::min(eq->lhs, eq->rhs);
    const Fact hi = std::max(eq->lhs, eq->rhs);
    premise_parts.push_back(detail::render_equivalence(lo, hi));
    premise_parts.push_back(detail::render_membership(member->members, hi));
    conclusion_part = detail::render_membership(conclusion->members, lo);
  } else if (rule.kind == RuleKind::Complement) {
    const auto* premise_fact = std::get_if<FactTerm>(&rule.premise.front());
    const auto* relation = std::get_if<RelationTerm>(&rule.conclusion);
    if (premise_fact == nullptr || relation == nullptr) {
      throw std::logic_error("malformed complement rule");
    }
    const Fact lo = std::min(premise_fact->fact, relation->target);
    const Fact hi = std::max(premise_fact->fact, relation->target);
    premise_parts.push_back(lo.name());
    conclusion_part = "not " + hi.name();
  } else {
    for (const auto& term : rule.premise) {
      premise_parts.push_back(detail::render_premise_term(term));
    }
    if (const auto* f = std::get_if<FactTerm>(&rule.conclusion)) {
      conclusion_part = f->fact.name();
    } else if (const auto* r = std::get_if<RelationTerm>(&rule.conclusion)) {
      conclusion_part = std::string(r->relation.spelled()) + " " +
                        r->target.name();
    } else if (const auto* m = std::get_if<MembershipTerm>(&rule.conclusion)) {
      conclusion_part = detail::render_membership(m->members, m->target);
    } else {
      throw std::logic_error("cannot render variable-notation conclusion");
    }
  }

  std::sort(premise_parts.begin(), premise_parts.end());
  premise_parts.erase(
      std::unique(premise_parts.begin(), premise_parts.end()),
      premise_parts.end());

  std::string out = "IF ";
  for (size_t i = 0; i < premise_parts.size(); ++i) {
    if (i > 0) out += " and ";
    out += premise_parts[i];
  }
  out += " THEN ";
  out += conclusion_part;
  return out;
}

}  // namespace rowl
