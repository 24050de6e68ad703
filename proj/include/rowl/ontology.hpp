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

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rowl/diagnostics.hpp"
#include "rowl/rule.hpp"

namespace rowl {

inline constexpr std::string_view kXsdStringUri =
    "http://www.w3.org/2001/XMLSchema#string";

// ---------------------------------------------------------------------------
// Declarations
//
// The ontology graph knows three kinds of declaration: classes, datatype
// properties (attributes of a class) and links. Links are object properties
// (arbitrary named relations) or one of the standard axiom relations
// equivalentClass / subClassOf / complementOf. Every node is a class;
// instances are never materialized.
// ---------------------------------------------------------------------------

/// Attribute of a class. Identity is (id, domain, range): the same property
/// id may legitimately appear under several domains (both halves of an
/// equivalence carry the same attributes); the serializer disambiguates the
/// XML IDs when that happens.
struct DatatypePropertyDecl {
  std::string id;
  std::string domain;
  std::string range = std::string(kXsdStringUri);

  auto operator<=>(const DatatypePropertyDecl&) const = default;
};

enum class LinkKind { ObjectProperty, EquivalentClass, SubClassOf, ComplementOf };

inline std::string_view link_kind_name(LinkKind k) {
  switch (k) {
    case LinkKind::ObjectProperty: return "objectProperty";
    case LinkKind::EquivalentClass: return "equivalentClass";
    case LinkKind::SubClassOf: return "subClassOf";
    case LinkKind::ComplementOf: return "complementOf";
  }
  return "link";
}

/// Typed link between two classes. The symmetric kinds (equivalentClass,
/// complementOf) are stored direction-normalized with the lexicographically
/// smaller id as source; objectProperty and subClassOf are directional.
/// Self-links are rejected at construction.
struct LinkDecl {
  LinkKind kind = LinkKind::ObjectProperty;
  std::string name;  // set only for ObjectProperty
  std::string source;
  std::string target;

  static LinkDecl object_property(std::string name, std::string source,
                                  std::string target) {
    return make(LinkKind::ObjectProperty, std::move(name), std::move(source),
                std::move(target));
  }
  static LinkDecl equivalent_class(std::string a, std::string b) {
    return make(LinkKind::EquivalentClass, {}, std::move(a), std::move(b));
  }
  static LinkDecl sub_class_of(std::string sub, std::string super) {
    return make(LinkKind::SubClassOf, {}, std::move(sub), std::move(super));
  }
  static LinkDecl complement_of(std::string a, std::string b) {
    return make(LinkKind::ComplementOf, {}, std::move(a), std::move(b));
  }

  bool symmetric() const {
    return kind == LinkKind::EquivalentClass || kind == LinkKind::ComplementOf;
  }

  friend auto operator<=>(const LinkDecl& a, const LinkDecl& b) {
    // Sort key (kind, source, target, name); this is also the serializer's
    // emission order.
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.source <=> b.source; c != 0) return c;
    if (auto c = a.target <=> b.target; c != 0) return c;
    return a.name <=> b.name;
  }
  friend bool operator==(const LinkDecl& a, const LinkDecl& b) = default;

 private:
  static LinkDecl make(LinkKind kind, std::string name, std::string source,
                       std::string target) {
    if (source == target) {
      throw std::invalid_argument("self link on class '" + source + "'");
    }
    LinkDecl link{kind, std::move(name), std::move(source), std::move(target)};
    if (link.symmetric() && link.target < link.source) {
      std::swap(link.source, link.target);
    }
    return link;
  }
};

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// The in-memory ontology: sets of class ids, datatype properties and links.
/// A graph is a cheap value; every pipeline operation takes graphs by const
/// reference and returns new ones, so shared instances are never mutated.
struct OntologyGraph {
  std::set<std::string> classes;
  std::set<DatatypePropertyDecl> datatype_properties;
  std::set<LinkDecl> links;

  bool operator==(const OntologyGraph&) const = default;

  bool empty() const {
    return classes.empty() && datatype_properties.empty() && links.empty();
  }

  bool has_class(std::string_view id) const {
    return classes.count(std::string(id)) > 0;
  }

  void add_class(std::string id) { classes.insert(std::move(id)); }
  void add_property(DatatypePropertyDecl p) {
    datatype_properties.insert(std::move(p));
  }
  void add_link(LinkDecl l) { links.insert(std::move(l)); }

  /// Datatype properties declared on one class, in sorted order.
  std::vector<DatatypePropertyDecl> properties_of(std::string_view domain) const {
    std::vector<DatatypePropertyDecl> out;
    for (const auto& p : datatype_properties) {
      if (p.domain == domain) out.push_back(p);
    }
    return out;
  }

  /// Property ids grouped by id -> set of domains.
  std::map<std::string, std::set<std::string>> property_domains() const {
    std::map<std::string, std::set<std::string>> out;
    for (const auto& p : datatype_properties) out[p.id].insert(p.domain);
    return out;
  }

  /// Checks referential integrity, id validity and pair-conflict freedom.
  /// Returns one diagnostic per violation; empty means the graph is valid.
  std::vector<Diagnostic> validate() const {
    std::vector<Diagnostic> out;
    for (const auto& id : classes) {
      if (!is_identifier(id)) {
        out.push_back(Diagnostic::error(DiagCode::General,
                                        "invalid class id '" + id + "'"));
      }
    }
    for (const auto& p : datatype_properties) {
      if (!is_identifier(p.id)) {
        out.push_back(Diagnostic::error(DiagCode::General,
                                        "invalid property id '" + p.id + "'"));
      }
      if (!has_class(p.domain)) {
        out.push_back(Diagnostic::error(
            DiagCode::DanglingRef, "datatype property '" + p.id +
                                       "' references undeclared class '" +
                                       p.domain + "'"));
      }
    }
    std::set<std::pair<std::string, std::string>> equivalent_pairs;
    std::set<std::pair<std::string, std::string>> complement_pairs;
    for (const auto& l : links) {
      for (const auto* endpoint : {&l.source, &l.target}) {
        if (!has_class(*endpoint)) {
          out.push_back(Diagnostic::error(
              DiagCode::DanglingRef,
              std::string(link_kind_name(l.kind)) +
                  " link references undeclared class '" + *endpoint + "'"));
        }
      }
      if (l.kind == LinkKind::EquivalentClass) {
        equivalent_pairs.insert({l.source, l.target});
      } else if (l.kind == LinkKind::ComplementOf) {
        complement_pairs.insert({l.source, l.target});
      } else if (l.kind == LinkKind::ObjectProperty && !is_identifier(l.name)) {
        out.push_back(Diagnostic::error(
            DiagCode::General, "invalid object property name '" + l.name + "'"));
      }
    }
    for (const auto& pair : equivalent_pairs) {
      if (complement_pairs.count(pair) > 0) {
        out.push_back(Diagnostic::error(
            DiagCode::Conflict,
            "classes '" + pair.first + "' and '" + pair.second +
                "' are declared both equivalent and complementary"));
      }
    }
    return out;
  }
};

/// The graph additions produced by transforming one rule, before merging.
struct FragmentDelta {
  OntologyGraph additions;
  std::string provenance;  // canonical form of the source rule
  int line = 0;
};

struct MergeResult {
  bool ok = true;
  OntologyGraph graph;  // merged graph, or the unchanged input on conflict
  std::vector<Diagnostic> diagnostics;
};

/// Set-union of a delta into a graph. Re-declaring an identical class,
/// property or link is a no-op. A union that would make a class pair both
/// equivalent and complementary is rejected whole: the result is the input
/// graph plus one CONFLICT error. Reusing a property id under a new domain
/// succeeds with a DOMAIN_CLASH warning (the serializer qualifies the XML
/// ids in that case).
inline MergeResult merge_delta(const OntologyGraph& graph,
                               const FragmentDelta& delta) {
  MergeResult result;

  OntologyGraph merged = graph;
  merged.classes.insert(delta.additions.classes.begin(),
                        delta.additions.classes.end());
  merged.datatype_properties.insert(delta.additions.datatype_properties.begin(),
                                    delta.additions.datatype_properties.end());
  merged.links.insert(delta.additions.links.begin(),
                      delta.additions.links.end());

  std::set<std::pair<std::string, std::string>> equivalent_pairs;
  std::set<std::pair<std::string, std::string>> complement_pairs;
  for (const auto& l : merged.links) {
    if (l.kind == LinkKind::EquivalentClass) {
      equivalent_pairs.insert({l.source, l.target});
    } else if (l.kind == LinkKind::ComplementOf) {
      complement_pairs.insert({l.source, l.target});
    }
  }
  for (const auto& pair : equivalent_pairs) {
    if (complement_pairs.count(pair) > 0) {
      result.ok = false;
      result.graph = graph;
      result.diagnostics.push_back(Diagnostic::error(
          DiagCode::Conflict,
          "conflict: classes '" + pair.first + "' and '" + pair.second +
              "' would be both equivalent and complementary",
          delta.line, 1, delta.provenance));
      return result;
    }
  }

  // A dangling delta is a caller bug, but surfaces as a diagnostic rather
  // than a corrupt graph.
  for (const auto& issue : merged.validate()) {
    result.ok = false;
    result.graph = graph;
    Diagnostic d = issue;
    d.line = delta.line;
    d.source_text = delta.provenance;
    result.diagnostics.push_back(std::move(d));
  }
  if (!result.ok) return result;

  const auto existing_domains = graph.property_domains();
  for (const auto& p : delta.additions.datatype_properties) {
    if (graph.datatype_properties.count(p) > 0) continue;
    auto it = existing_domains.find(p.id);
    if (it != existing_domains.end() && it->second.count(p.domain) == 0) {
      result.diagnostics.push_back(Diagnostic::warning(
          DiagCode::DomainClash,
          "datatype property '" + p.id + "' already declared with domain '" +
              *it->second.begin() + "', now also on '" + p.domain + "'",
          delta.line, 1, delta.provenance));
    }
  }

  result.graph = std::move(merged);
  return result;
}

/// Graph equality. Ids are global names, so this is set equality under the
/// declaration identity rules, not general graph isomorphism.
inline bool graph_isomorphic(const OntologyGraph& a, const OntologyGraph& b) {
  return a == b;
}

}  // namespace rowl
