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

// Seeded generators for property-style tests. Deliberately framework-free
// so both the Catch2 suite and the acceptance binary can use them.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "rowl/ontology.hpp"
#include "rowl/rule.hpp"
#include "rowl/transform.hpp"

namespace rowl::testing {

inline const std::vector<std::string>& class_name_pool() {
  static const std::vector<std::string> pool = {
      "Alpha", "Beta", "Gamma", "Delta", "Car", "Wheel", "Plane", "Frame"};
  return pool;
}

// Partially overlaps the class pool so promotion and id qualification
// trigger; no name contains the reserved "__" infix.
inline const std::vector<std::string>& property_name_pool() {
  static const std::vector<std::string> pool = {
      "mass", "color", "Wheel", "Engine", "size", "Alpha", "age"};
  return pool;
}

inline const std::vector<std::string>& relation_name_pool() {
  static const std::vector<std::string> pool = {"hasPart", "refersTo", "Wheel"};
  return pool;
}

template <typename Rng>
const std::string& pick(const std::vector<std::string>& pool, Rng& rng) {
  std::uniform_int_distribution<size_t> dist(0, pool.size() - 1);
  return pool[dist(rng)];
}

template <typename Rng>
int pick_int(int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(rng);
}

/// A random graph satisfying every model invariant: declared endpoints,
/// direction-normalized symmetric links, no self links, no class pair that
/// is both equivalent and complementary.
template <typename Rng>
OntologyGraph random_graph(Rng& rng) {
  OntologyGraph g;

  const int class_count = pick_int(2, 6, rng);
  std::vector<std::string> classes;
  while (static_cast<int>(g.classes.size()) < class_count) {
    const std::string& name = pick(class_name_pool(), rng);
    if (g.classes.insert(name).second) classes.push_back(name);
  }

  const int property_count = pick_int(0, 6, rng);
  for (int i = 0; i < property_count; ++i) {
    g.add_property({pick(property_name_pool(), rng), pick(classes, rng)});
  }

  const int link_attempts = pick_int(0, 6, rng);
  for (int i = 0; i < link_attempts; ++i) {
    const std::string& a = pick(classes, rng);
    const std::string& b = pick(classes, rng);
    if (a == b) continue;
    const std::string lo = std::min(a, b);
    const std::string hi = std::max(a, b);
    switch (pick_int(0, 3, rng)) {
      case 0:
        g.add_link(LinkDecl::object_property(pick(relation_name_pool(), rng),
                                             a, b));
        break;
      case 1:
        if (g.links.count(LinkDecl::complement_of(lo, hi)) == 0) {
          g.add_link(LinkDecl::equivalent_class(a, b));
        }
        break;
      case 2:
        g.add_link(LinkDecl::sub_class_of(a, b));
        break;
      default:
        if (g.links.count(LinkDecl::equivalent_class(lo, hi)) == 0) {
          g.add_link(LinkDecl::complement_of(a, b));
        }
        break;
    }
  }
  return g;
}

/// A random classified rule drawn from the six mappable kinds. The kind is
/// assigned by the real classifier, so generated rules always agree with it.
template <typename Rng>
Rule random_rule(Rng& rng) {
  static const std::vector<std::string> facts = {"Car",  "Wheel", "Plane",
                                                 "Bike", "Motor", "Rudder"};
  for (;;) {
    Rule rule;
    switch (pick_int(0, 5, rng)) {
      case 0: {  // class with properties
        const int premise_size = pick_int(2, 4, rng);
        std::vector<std::string> chosen;
        while (static_cast<int>(chosen.size()) < premise_size) {
          const std::string& f = pick(facts, rng);
          if (std::find(chosen.begin(), chosen.end(), f) == chosen.end()) {
            chosen.push_back(f);
          }
        }
        for (const auto& f : chosen) rule.premise.push_back(FactTerm{Fact(f)});
        rule.conclusion = FactTerm{Fact(pick(facts, rng))};
        break;
      }
      case 1: {  // equivalence
        const std::string& a = facts[0];
        const std::string& b = facts[3];
        std::vector<Fact> members;
        const int member_count = pick_int(1, 2, rng);
        members.emplace_back(facts[4]);
        if (member_count == 2) members.emplace_back(facts[5]);
        const bool premise_on_a = pick_int(0, 1, rng) == 0;
        rule.premise.push_back(EquivalenceTerm{Fact(a), Fact(b)});
        rule.premise.push_back(
            MembershipTerm{members, Fact(premise_on_a ? a : b)});
        rule.conclusion = MembershipTerm{members, Fact(premise_on_a ? b : a)};
        break;
      }
      case 2:  // object relation
        rule.premise.push_back(FactTerm{Fact(facts[0])});
        rule.conclusion = RelationTerm{RelationKeyword::named("linksTo"),
                                       Fact(facts[1])};
        break;
      case 3:
        rule.premise.push_back(FactTerm{Fact(pick(facts, rng))});
        rule.conclusion =
            RelationTerm{RelationKeyword::part_of(), Fact(pick(facts, rng))};
        break;
      case 4:
        rule.premise.push_back(FactTerm{Fact(pick(facts, rng))});
        rule.conclusion =
            RelationTerm{RelationKeyword::negation(), Fact(pick(facts, rng))};
        break;
      default:
        rule.premise.push_back(FactTerm{Fact(pick(facts, rng))});
        rule.conclusion = FactTerm{Fact(pick(facts, rng))};
        break;
    }
    auto kind = classify(rule);
    if (is_error(kind)) continue;  // rejected degenerate draw, try again
    rule.kind = value(kind);
    return rule;
  }
}

/// Random token soup for the parser totality fuzz: keywords, identifiers,
/// punctuation, stray bytes. A share of the lines is biased into IF/THEN
/// shape so both parser outcomes occur.
template <typename Rng>
std::string random_rule_line(Rng& rng) {
  static const std::vector<std::string> vocabulary = {
      "IF",     "THEN", "and",  "equivalent", "part_of", "not",
      "in",     "∈",    "⊂",    "=",          "(",       ")",
      ",",      "Car",  "Wheel", "x",         "Plane",   "##",
      "%",      "\"",   "1road", "_ok",       "caf\xC3\xA9"};
  auto soup = [&](int count) {
    std::string out;
    for (int i = 0; i < count; ++i) {
      if (!out.empty()) out += ' ';
      out += vocabulary[static_cast<size_t>(
          pick_int(0, static_cast<int>(vocabulary.size()) - 1, rng))];
    }
    return out;
  };
  if (pick_int(0, 2, rng) == 0) {
    return "IF " + soup(pick_int(1, 4, rng)) + " THEN " +
           soup(pick_int(1, 3, rng));
  }
  return soup(pick_int(0, 12, rng));
}

}  // namespace rowl::testing
