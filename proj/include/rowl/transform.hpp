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
#include <deque>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rowl/diagnostics.hpp"
#include "rowl/ontology.hpp"
#include "rowl/parser.hpp"
#include "rowl/rule.hpp"

namespace rowl {

enum class TransformMode { Administrative, Evolutionary };

struct TransformConfig {
  TransformMode mode = TransformMode::Administrative;
};

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace detail {

inline Diagnostic unmappable(const Rule& rule, std::string reason) {
  return Diagnostic::error(DiagCode::Unmappable,
                           "unmappable rule: " + std::move(reason), rule.line,
                           1, rule.source_text);
}

inline bool has_duplicates(std::vector<Fact> facts) {
  std::sort(facts.begin(), facts.end());
  return std::adjacent_find(facts.begin(), facts.end()) != facts.end();
}

}  // namespace detail

/// Assigns one of the six mappable kinds to a parsed, notation-normalized
/// rule, or explains why no kind fits. Degenerate shapes that would break
/// graph invariants (duplicate premise facts, a relation from a class to
/// itself) are rejected here so that every classified rule transforms into
/// a consistent fragment.
inline Result<RuleKind> classify(const Rule& rule) {
  if (rule.premise.empty()) {
    return detail::unmappable(rule, "empty premise");
  }
  for (const auto& term : rule.premise) {
    if (std::holds_alternative<SubsetPattern>(term)) {
      return detail::unmappable(rule, "variable notation was not normalized");
    }
  }
  if (std::holds_alternative<EqualsPattern>(rule.conclusion)) {
    return detail::unmappable(rule, "variable notation was not normalized");
  }

  std::vector<Fact> plain_facts;
  const EquivalenceTerm* equivalence = nullptr;
  const MembershipTerm* membership = nullptr;
  bool only_plain = true;
  for (const auto& term : rule.premise) {
    if (const auto* f = std::get_if<FactTerm>(&term)) {
      plain_facts.push_back(f->fact);
    } else {
      only_plain = false;
      if (const auto* e = std::get_if<EquivalenceTerm>(&term)) equivalence = e;
      if (const auto* m = std::get_if<MembershipTerm>(&term)) membership = m;
    }
  }

  if (const auto* conclusion = std::get_if<FactTerm>(&rule.conclusion)) {
    if (!only_plain) {
      return detail::unmappable(
          rule, "grouped premise terms require a membership conclusion");
    }
    if (detail::has_duplicates(plain_facts)) {
      return detail::unmappable(rule, "duplicate fact in premise");
    }
    if (plain_facts.size() >= 2) return RuleKind::ClassWithProperties;
    if (plain_facts.front() == conclusion->fact) {
      return detail::unmappable(rule, "rule relates '" +
                                          conclusion->fact.name() +
                                          "' to itself");
    }
    return RuleKind::BareSubsumption;
  }

  if (const auto* conclusion = std::get_if<RelationTerm>(&rule.conclusion)) {
    if (!only_plain || plain_facts.size() != 1) {
      return detail::unmappable(
          rule, "a relation conclusion requires exactly one premise fact");
    }
    if (plain_facts.front() == conclusion->target) {
      return detail::unmappable(
          rule, "rule relates '" + conclusion->target.name() + "' to itself");
    }
    switch (conclusion->relation.kind) {
      case RelationKeyword::Kind::Named: return RuleKind::ObjectRelation;
      case RelationKeyword::Kind::PartOf: return RuleKind::PartOf;
      case RelationKeyword::Kind::Not: return RuleKind::Complement;
      default:
        return detail::unmappable(rule, "unsupported relation keyword");
    }
  }

  const auto* conclusion = std::get_if<MembershipTerm>(&rule.conclusion);
  if (conclusion == nullptr) {
    return detail::unmappable(rule, "unsupported conclusion shape");
  }
  if (rule.premise.size() != 2 || equivalence == nullptr ||
      membership == nullptr) {
    return detail::unmappable(
        rule,
        "a membership conclusion requires a premise of one equivalence pair "
        "and one membership");
  }
  if (equivalence->lhs == equivalence->rhs) {
    return detail::unmappable(rule, "equivalence pair names one class twice");
  }
  if (detail::has_duplicates(membership->members) ||
      detail::has_duplicates(conclusion->members)) {
    return detail::unmappable(rule, "duplicate fact in membership");
  }
  const bool premise_on_lhs = membership->target == equivalence->lhs;
  const bool premise_on_rhs = membership->target == equivalence->rhs;
  if (!premise_on_lhs && !premise_on_rhs) {
    return detail::unmappable(rule, "membership target '" +
                                        membership->target.name() +
                                        "' is not one of the equivalent "
                                        "classes");
  }
  const Fact& other = premise_on_lhs ? equivalence->rhs : equivalence->lhs;
  if (conclusion->target != other) {
    return detail::unmappable(
        rule, "conclusion membership target '" + conclusion->target.name() +
                  "' is not the other equivalent class");
  }
  if (detail::sorted_unique(membership->members) !=
      detail::sorted_unique(conclusion->members)) {
    return detail::unmappable(
        rule, "premise and conclusion memberships list different facts");
  }
  return RuleKind::Equivalence;
}

// ---------------------------------------------------------------------------
// Transformation
// ---------------------------------------------------------------------------

/// Produces the ontology fragment for one classified rule. Total on
/// classified rules; throws only on the precondition violation of an
/// unclassified input.
inline FragmentDelta transform(const Rule& rule) {
  if (rule.kind == RuleKind::Unclassified) {
    throw std::logic_error("transform requires a classified rule");
  }

  FragmentDelta delta;
  delta.provenance = canonical_form(rule);
  delta.line = rule.line;
  OntologyGraph& g = delta.additions;

  switch (rule.kind) {
    case RuleKind::ClassWithProperties: {
      const auto& conclusion = std::get<FactTerm>(rule.conclusion).fact;
      g.add_class(conclusion.name());
      for (const auto& term : rule.premise) {
        const auto& fact = std::get<FactTerm>(term).fact;
        g.add_property({fact.name(), conclusion.name()});
      }
      break;
    }
    case RuleKind::Equivalence: {
      const EquivalenceTerm* eq = nullptr;
      const MembershipTerm* member = nullptr;
      for (const auto& term : rule.premise) {
        if (const auto* e = std::get_if<EquivalenceTerm>(&term)) eq = e;
        if (const auto* m = std::get_if<MembershipTerm>(&term)) member = m;
      }
      g.add_class(eq->lhs.name());
      g.add_class(eq->rhs.name());
      for (const auto& fact : member->members) {
        g.add_property({fact.name(), eq->lhs.name()});
        g.add_property({fact.name(), eq->rhs.name()});
      }
      g.add_link(LinkDecl::equivalent_class(eq->lhs.name(), eq->rhs.name()));
      break;
    }
    case RuleKind::ObjectRelation:
    case RuleKind::PartOf:
    case RuleKind::Complement:
    case RuleKind::BareSubsumption: {
      const auto& premise = std::get<FactTerm>(rule.premise.front()).fact;
      std::string target;
      std::string relation_name;
      if (rule.kind == RuleKind::BareSubsumption) {
        target = std::get<FactTerm>(rule.conclusion).fact.name();
      } else {
        const auto& conclusion = std::get<RelationTerm>(rule.conclusion);
        target = conclusion.target.name();
        relation_name = conclusion.relation.name;
      }
      g.add_class(premise.name());
      g.add_class(target);
      if (rule.kind == RuleKind::ObjectRelation) {
        g.add_link(LinkDecl::object_property(relation_name, premise.name(),
                                             target));
      } else if (rule.kind == RuleKind::Complement) {
        g.add_link(LinkDecl::complement_of(premise.name(), target));
      } else {
        g.add_link(LinkDecl::sub_class_of(premise.name(), target));
      }
      break;
    }
    case RuleKind::Unclassified:
      break;  // unreachable
  }
  return delta;
}

// ---------------------------------------------------------------------------
// Refinement (the evolutionary pass)
// ---------------------------------------------------------------------------

namespace detail {

// True when `to` is reachable from `from` over subClassOf edges, excluding
// the direct edge under test.
inline bool subclass_reachable(const OntologyGraph& g, const std::string& from,
                               const std::string& to,
                               const LinkDecl& excluded) {
  std::set<std::string> visited{from};
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    const std::string node = queue.front();
    queue.pop_front();
    for (const auto& l : g.links) {
      if (l.kind != LinkKind::SubClassOf || l == excluded) continue;
      if (l.source != node || visited.count(l.target) > 0) continue;
      if (l.target == to) return true;
      visited.insert(l.target);
      queue.push_back(l.target);
    }
  }
  return false;
}

}  // namespace detail

/// Normalizes a graph to a fixed point, repeating three passes until
/// nothing changes:
///   1. property-to-class promotion: a datatype property whose id is also a
///      class id is replaced by an objectProperty link "has<Name>" from its
///      domain to that class (skipped when the domain is the class itself);
///   2. equivalence property sharing: a datatype property on one class of
///      an equivalentClass pair is copied to the other (skipped for ids
///      that are class names, which pass 1 owns);
///   3. subsumption de-duplication: a subClassOf link implied by a chain of
///      other subClassOf links is removed.
/// Classes are never removed.
inline OntologyGraph refine(OntologyGraph g) {
  for (;;) {
    bool changed = false;

    // Pass 1: property-to-class promotion.
    std::vector<DatatypePropertyDecl> promote;
    for (const auto& p : g.datatype_properties) {
      if (g.has_class(p.id) && p.domain != p.id) promote.push_back(p);
    }
    for (const auto& p : promote) {
      g.datatype_properties.erase(p);
      g.add_link(LinkDecl::object_property("has" + p.id, p.domain, p.id));
      changed = true;
    }

    // Pass 2: equivalence property sharing.
    std::vector<DatatypePropertyDecl> shared;
    for (const auto& l : g.links) {
      if (l.kind != LinkKind::EquivalentClass) continue;
      for (const auto& [from, to] :
           {std::pair{l.source, l.target}, std::pair{l.target, l.source}}) {
        for (const auto& p : g.properties_of(from)) {
          if (g.has_class(p.id)) continue;
          DatatypePropertyDecl mirrored{p.id, to, p.range};
          if (g.datatype_properties.count(mirrored) == 0) {
            shared.push_back(std::move(mirrored));
          }
        }
      }
    }
    for (auto& p : shared) {
      if (g.datatype_properties.insert(std::move(p)).second) changed = true;
    }

    // Pass 3: subsumption de-duplication (transitive reduction).
    std::vector<LinkDecl> sub_links;
    for (const auto& l : g.links) {
      if (l.kind == LinkKind::SubClassOf) sub_links.push_back(l);
    }
    for (const auto& l : sub_links) {
      if (detail::subclass_reachable(g, l.source, l.target, l)) {
        g.links.erase(l);
        changed = true;
      }
    }

    if (!changed) return g;
  }
}

// ---------------------------------------------------------------------------
// The full pipeline
// ---------------------------------------------------------------------------

struct ConvertResult {
  OntologyGraph graph;
  std::vector<Diagnostic> diagnostics;
};

/// Runs normalize -> classify -> transform -> merge for each rule, in input
/// order. Unmappable or conflicting rules are skipped with diagnostics; the
/// batch never aborts. Evolutionary mode additionally refines the graph
/// after every merge, which makes it order-sensitive by design;
/// administrative mode is permutation-invariant for conflict-free inputs.
inline ConvertResult convert(std::span<const Rule> rules,
                             TransformConfig config = {}) {
  ConvertResult result;
  for (const Rule& input : rules) {
    auto normalized = normalize_notation(input);
    if (is_error(normalized)) {
      result.diagnostics.push_back(error(normalized));
      continue;
    }
    Rule rule = take_value(std::move(normalized));
    auto kind = classify(rule);
    if (is_error(kind)) {
      result.diagnostics.push_back(error(kind));
      continue;
    }
    rule.kind = value(kind);

    const FragmentDelta delta = transform(rule);
    MergeResult merged = merge_delta(result.graph, delta);
    result.diagnostics.insert(result.diagnostics.end(),
                              merged.diagnostics.begin(),
                              merged.diagnostics.end());
    if (!merged.ok) continue;
    result.graph = std::move(merged.graph);
    if (config.mode == TransformMode::Evolutionary) {
      result.graph = refine(std::move(result.graph));
    }
  }
  return result;
}

inline ConvertResult convert(const std::vector<Rule>& rules,
                             TransformConfig config = {}) {
  return convert(std::span<const Rule>(rules.data(), rules.size()), config);
}

}  // namespace rowl
