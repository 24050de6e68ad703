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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rowl/ontology.hpp"
#include "rowl/rule.hpp"

namespace rowl {

// ---------------------------------------------------------------------------
// Rule extraction: the inverse of convert over the graphs convert produces.
//
// Per declaration:
//   - an equivalentClass link whose classes share at least one property id
//     becomes one equivalence rule over the shared set;
//   - a class's properties not covered by an equivalence rule become one
//     class-with-properties rule. The premise is the uncovered set when it
//     has at least two facts; a single uncovered property widens to the
//     class's full property set so that re-converting the rule recreates
//     properties, not a subsumption. Only a genuinely single-property
//     class (which administrative conversion never produces) extracts with
//     a one-fact premise;
//   - objectProperty, subClassOf and complementOf links each become one
//     relation rule. Subsumption always extracts as "part_of": the
//     part-of and bare-subsumption kinds map onto the same link, so the
//     distinction is lost in the graph and extraction picks one spelling.
//
// For a graph produced by administrative convert, converting the extracted
// rules reproduces the graph exactly. Isolated classes (no properties, no
// links), which administrative convert never produces, carry no
// information and yield no rule. Equivalent classes that share no property
// at all (possible after evolutionary promotion) likewise yield no rule
// for the link.
// ---------------------------------------------------------------------------

/// Recovers the canonical rule set of a graph, duplicate-free and sorted by
/// canonical form.
inline std::vector<Rule> extract_rules(const OntologyGraph& g) {
  std::vector<Rule> rules;
  // Property ids per class, and the ids already covered by an extracted
  // equivalence rule.
  std::map<std::string, std::set<std::string>> properties;
  for (const auto& p : g.datatype_properties) {
    properties[p.domain].insert(p.id);
  }
  std::map<std::string, std::set<std::string>> covered;

  auto make_rule = [](std::vector<PremiseTerm> premise,
                      ConclusionTerm conclusion, RuleKind kind) {
    Rule rule;
    rule.premise = std::move(premise);
    rule.conclusion = std::move(conclusion);
    rule.kind = kind;
    rule.source_text = canonical_form(rule);
    return rule;
  };

  for (const auto& l : g.links) {
    switch (l.kind) {
      case LinkKind::EquivalentClass: {
        std::set<std::string> shared;
        const auto& lhs = properties[l.source];
        const auto& rhs = properties[l.target];
        std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                              std::inserter(shared, shared.begin()));
        if (shared.empty()) break;
        std::vector<Fact> members;
        for (const auto& id : shared) members.emplace_back(id);
        covered[l.source].insert(shared.begin(), shared.end());
        covered[l.target].insert(shared.begin(), shared.end());
        // Canonical direction: members live in the larger-named class in
        // the premise and in the smaller-named one in the conclusion.
        rules.push_back(make_rule(
            {EquivalenceTerm{Fact(l.source), Fact(l.target)},
             MembershipTerm{members, Fact(l.target)}},
            MembershipTerm{members, Fact(l.source)}, RuleKind::Equivalence));
        break;
      }
      case LinkKind::ObjectProperty:
        rules.push_back(make_rule(
            {FactTerm{Fact(l.source)}},
            RelationTerm{RelationKeyword::named(l.name), Fact(l.target)},
            RuleKind::ObjectRelation));
        break;
      case LinkKind::SubClassOf:
        rules.push_back(make_rule(
            {FactTerm{Fact(l.source)}},
            RelationTerm{RelationKeyword::part_of(), Fact(l.target)},
            RuleKind::PartOf));
        break;
      case LinkKind::ComplementOf:
        rules.push_back(make_rule(
            {FactTerm{Fact(l.source)}},
            RelationTerm{RelationKeyword::negation(), Fact(l.target)},
            RuleKind::Complement));
        break;
    }
  }

  for (const auto& [class_id, ids] : properties) {
    const auto& done = covered[class_id];
    std::vector<std::string> uncovered;
    for (const auto& id : ids) {
      if (done.count(id) == 0) uncovered.push_back(id);
    }
    if (uncovered.empty()) continue;
    std::vector<PremiseTerm> premise;
    if (uncovered.size() >= 2) {
      for (const auto& id : uncovered) premise.push_back(FactTerm{Fact(id)});
    } else {
      for (const auto& id : ids) premise.push_back(FactTerm{Fact(id)});
    }
    rules.push_back(make_rule(std::move(premise), FactTerm{Fact(class_id)},
                              RuleKind::ClassWithProperties));
  }

  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    return canonical_form(a) < canonical_form(b);
  });
  rules.erase(std::unique(rules.begin(), rules.end(),
                          [](const Rule& a, const Rule& b) {
                            return canonical_form(a) == canonical_form(b);
                          }),
              rules.end());
  return rules;
}

}  // namespace rowl
