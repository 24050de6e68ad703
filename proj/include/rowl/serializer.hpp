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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "rowl/diagnostics.hpp"
#include "rowl/ontology.hpp"
#include "rowl/xml.hpp"

namespace rowl {

inline constexpr std::string_view kRdfNs =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs =
    "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

enum class OutputFormat { RdfXml, Turtle };

struct SerializationConfig {
  OutputFormat format = OutputFormat::RdfXml;
  bool pretty = true;  // indentation for RDF/XML; Turtle is always laid out
};

/// True when s is a legal XML NCName (bytes >= 0x80 count as letters).
inline bool is_ncname(std::string_view s) {
  if (s.empty()) return false;
  const auto start = static_cast<unsigned char>(s.front());
  if (!((start >= 'A' && start <= 'Z') || (start >= 'a' && start <= 'z') ||
        start == '_' || start >= 0x80)) {
    return false;
  }
  for (unsigned char c : s) {
    if (!((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
          (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
          c >= 0x80)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// XML-ID disambiguation
//
// rdf:ID values must be unique in one document, but the graph may carry the
// same property id under several domains (both halves of an equivalence),
// a property id that doubles as a class id, or one relation name on several
// links. Colliding occurrences are emitted with a reserved "__" suffix:
// property ids as "<id>__<Domain>", object property names as
// "<name>__<Source>" (and "<name>__<Source>__<Target>" when one source
// carries the name twice). The subset reader reverses the scheme, so "__"
// is best avoided in user-chosen identifiers.
// ---------------------------------------------------------------------------

namespace detail {

struct EmittedIds {
  std::map<std::pair<std::string, std::string>, std::string> property_ids;
  std::map<std::tuple<std::string, std::string, std::string>, std::string>
      object_property_ids;
};

inline EmittedIds compute_emitted_ids(const OntologyGraph& g) {
  const auto domains_by_property = g.property_domains();

  std::map<std::string, std::vector<std::pair<std::string, std::string>>>
      links_by_name;
  for (const auto& l : g.links) {
    if (l.kind == LinkKind::ObjectProperty) {
      links_by_name[l.name].emplace_back(l.source, l.target);
    }
  }

  EmittedIds out;
  for (const auto& p : g.datatype_properties) {
    const bool collides = g.has_class(p.id) ||
                          domains_by_property.at(p.id).size() > 1 ||
                          links_by_name.count(p.id) > 0;
    out.property_ids[{p.id, p.domain}] =
        collides ? p.id + "__" + p.domain : p.id;
  }
  for (const auto& [name, pairs] : links_by_name) {
    const bool collides = g.has_class(name) ||
                          domains_by_property.count(name) > 0 ||
                          pairs.size() > 1;
    for (const auto& [source, target] : pairs) {
      std::string emitted = name;
      if (collides) {
        const auto same_source =
            std::count_if(pairs.begin(), pairs.end(),
                          [&](const auto& st) { return st.first == source; });
        // "<name>__<source>" would tie with a datatype property of the same
        // name on that class; extend with the target to stay unique.
        const auto domains = domains_by_property.find(name);
        const bool ties_with_property =
            domains != domains_by_property.end() &&
            domains->second.count(source) > 0;
        emitted += "__" + source;
        if (same_source > 1 || ties_with_property) emitted += "__" + target;
      }
      out.object_property_ids[{name, source, target}] = std::move(emitted);
    }
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace detail {

class RdfXmlWriter {
 public:
  explicit RdfXmlWriter(bool pretty) : pretty_(pretty) {}

  void write(const OntologyGraph& g) {
    const EmittedIds ids = compute_emitted_ids(g);

    raw("<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    newline();
    raw("<rdf:RDF xmlns:rdf=\"");
    raw(kRdfNs);
    raw("\" xmlns:rdfs=\"");
    raw(kRdfsNs);
    raw("\" xmlns:owl=\"");
    raw(kOwlNs);
    raw("\" xmlns:xsd=\"");
    raw(kXsdNs);
    raw("\">");
    newline();

    // Classes carry their axiom links as children; subjects of the
    // symmetric kinds are already direction-normalized.
    for (const auto& id : g.classes) {
      std::vector<const LinkDecl*> axioms;
      for (const auto& l : g.links) {
        if (l.kind != LinkKind::ObjectProperty && l.source == id) {
          axioms.push_back(&l);
        }
      }
      if (axioms.empty()) {
        open_line(1);
        raw("<owl:Class rdf:ID=\"" + xml::escape_attribute(id) + "\"/>");
        newline();
        continue;
      }
      open_line(1);
      raw("<owl:Class rdf:ID=\"" + xml::escape_attribute(id) + "\">");
      newline();
      for (const LinkDecl* l : axioms) {
        open_line(2);
        raw("<" + std::string(axiom_element(l->kind)) + " rdf:resource=\"#" +
            xml::escape_attribute(l->target) + "\"/>");
        newline();
      }
      open_line(1);
      raw("</owl:Class>");
      newline();
    }

    for (const auto& p : g.datatype_properties) {
      property_element("owl:DatatypeProperty",
                       ids.property_ids.at({p.id, p.domain}), p.domain,
                       p.range, /*range_is_reference=*/false);
    }
    for (const auto& l : g.links) {
      if (l.kind != LinkKind::ObjectProperty) continue;
      property_element(
          "owl:ObjectProperty",
          ids.object_property_ids.at({l.name, l.source, l.target}), l.source,
          l.target, /*range_is_reference=*/true);
    }

    raw("</rdf:RDF>");
    newline();
  }

  std::string take() { return std::move(out_); }

 private:
  static std::string_view axiom_element(LinkKind kind) {
    switch (kind) {
      case LinkKind::EquivalentClass: return "owl:equivalentClass";
      case LinkKind::SubClassOf: return "rdfs:subClassOf";
      case LinkKind::ComplementOf: return "owl:complementOf";
      case LinkKind::ObjectProperty: break;
    }
    return "owl:ObjectProperty";
  }

  void property_element(std::string_view element, const std::string& id,
                        const std::string& domain, const std::string& range,
                        bool range_is_reference) {
    open_line(1);
    raw("<" + std::string(element) + " rdf:ID=\"" + xml::escape_attribute(id) +
        "\">");
    newline();
    open_line(2);
    raw("<rdfs:domain rdf:resource=\"#" + xml::escape_attribute(domain) +
        "\"/>");
    newline();
    open_line(2);
    raw("<rdfs:range rdf:resource=\"" +
        (range_is_reference ? "#" + xml::escape_attribute(range)
                            : xml::escape_attribute(range)) +
        "\"/>");
    newline();
    open_line(1);
    raw("</" + std::string(element) + ">");
    newline();
  }

  void raw(std::string_view s) { out_ += s; }
  void newline() {
    if (pretty_) out_ += '\n';
  }
  void open_line(int depth) {
    if (pretty_) out_.append(static_cast<size_t>(depth) * 2, ' ');
  }

  bool pretty_;
  std::string out_;
};

inline std::string write_turtle(const OntologyGraph& g) {
  const EmittedIds ids = compute_emitted_ids(g);
  std::string out;
  out += "@prefix owl: <";
  out += kOwlNs;
  out += "> .\n@prefix rdfs: <";
  out += kRdfsNs;
  out += "> .\n@prefix xsd: <";
  out += kXsdNs;
  out += "> .\n";

  auto subject = [&](const std::string& id, std::string_view type) {
    out += "\n<#" + id + "> a " + std::string(type);
  };

  for (const auto& id : g.classes) {
    subject(id, "owl:Class");
    for (const auto& l : g.links) {
      if (l.kind == LinkKind::ObjectProperty || l.source != id) continue;
      out += " ;\n  ";
      switch (l.kind) {
        case LinkKind::EquivalentClass: out += "owl:equivalentClass"; break;
        case LinkKind::SubClassOf: out += "rdfs:subClassOf"; break;
        case LinkKind::ComplementOf: out += "owl:complementOf"; break;
        case LinkKind::ObjectProperty: break;
      }
      out += " <#" + l.target + ">";
    }
    out += " .\n";
  }
  for (const auto& p : g.datatype_properties) {
    subject(ids.property_ids.at({p.id, p.domain}), "owl:DatatypeProperty");
    out += " ;\n  rdfs:domain <#" + p.domain + "> ;\n  rdfs:range xsd:string .\n";
  }
  for (const auto& l : g.links) {
    if (l.kind != LinkKind::ObjectProperty) continue;
    subject(ids.object_property_ids.at({l.name, l.source, l.target}),
            "owl:ObjectProperty");
    out += " ;\n  rdfs:domain <#" + l.source + "> ;\n  rdfs:range <#" +
           l.target + "> .\n";
  }
  return out;
}

}  // namespace detail

/// Deterministic text form of a graph: equal graphs produce byte-identical
/// output. RDF/XML uses the vocabulary owl:Class, owl:DatatypeProperty,
/// owl:ObjectProperty, owl:equivalentClass, rdfs:subClassOf,
/// owl:complementOf, rdfs:domain and rdfs:range; classes are emitted in id
/// order with their axiom links as children, then datatype properties by
/// (id, domain), then object properties by (name, source, target). Turtle
/// is a projection of the same triples for human inspection; it has no
/// reader.
inline std::string serialize(const OntologyGraph& g,
                             const SerializationConfig& config = {}) {
  if (config.format == OutputFormat::Turtle) {
    return detail::write_turtle(g);
  }
  detail::RdfXmlWriter writer(config.pretty);
  writer.write(g);
  return writer.take();
}

// ---------------------------------------------------------------------------
// Subset reader
// ---------------------------------------------------------------------------

namespace detail {

inline Diagnostic subset_error(DiagCode code, std::string message) {
  return Diagnostic::error(code, std::move(message));
}

class SubsetReader {
 public:
  Result<OntologyGraph> read(std::string_view text) {
    auto parsed = xml::parse(text);
    if (is_error(parsed)) return error(parsed);

    PrefixMap prefixes{{"rdf", std::string(kRdfNs)},
                       {"rdfs", std::string(kRdfsNs)},
                       {"owl", std::string(kOwlNs)},
                       {"xsd", std::string(kXsdNs)}};

    const std::vector<xml::Element>& roots = value(parsed);
    std::vector<const xml::Element*> declarations;
    PrefixMap root_prefixes = prefixes;
    if (roots.size() == 1) {
      auto extended = with_declared_prefixes(prefixes, roots.front());
      const auto resolved = resolve(roots.front().name, extended);
      if (resolved.first == kRdfNs && resolved.second == "RDF") {
        root_prefixes = extended;
        for (const auto& child : roots.front().children) {
          declarations.push_back(&child);
        }
        if (!whitespace_only(roots.front().text)) {
          return subset_error(DiagCode::Unsupported,
                              "unexpected text content in rdf:RDF");
        }
      } else {
        declarations.push_back(&roots.front());
      }
    } else {
      for (const auto& root : roots) declarations.push_back(&root);
    }

    for (const auto* element : declarations) {
      if (auto failure = read_top_level(*element, root_prefixes)) {
        return *failure;
      }
    }
    return finish();
  }

 private:
  using PrefixMap = std::map<std::string, std::string>;
  using MaybeError = std::optional<Diagnostic>;

  struct RawProperty {
    std::string id;
    std::string domain;
  };
  struct RawObjectProperty {
    std::string id;
    std::string source;
    std::string target;
  };
  struct RawAxiom {
    LinkKind kind;
    std::string source;
    std::string target;
  };

  static bool whitespace_only(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return is_space_byte(c);
    });
  }

  static PrefixMap with_declared_prefixes(const PrefixMap& base,
                                          const xml::Element& e) {
    PrefixMap out = base;
    for (const auto& [name, value] : e.attributes) {
      if (name == "xmlns") {
        out[""] = value;
      } else if (name.starts_with("xmlns:")) {
        out[name.substr(6)] = value;
      }
    }
    return out;
  }

  static std::pair<std::string, std::string> resolve(const std::string& name,
                                                     const PrefixMap& prefixes) {
    const size_t colon = name.find(':');
    std::string prefix = colon == std::string::npos ? "" : name.substr(0, colon);
    std::string local = colon == std::string::npos ? name : name.substr(colon + 1);
    auto it = prefixes.find(prefix);
    return {it == prefixes.end() ? "" : it->second, std::move(local)};
  }

  // Strips a leading '#', deletes embedded whitespace (the generated
  // subset never contains any, but hand-written fragments like
  // rdf:ID="has Vechicle" do), and validates the remainder.
  Result<std::string> read_identifier(const std::string& raw) {
    std::string_view v = raw;
    if (!v.empty() && v.front() == '#') v.remove_prefix(1);
    std::string id = normalize_identifier(v);
    if (!is_identifier(id)) {
      return subset_error(DiagCode::Unsupported,
                          "invalid identifier '" + raw + "'");
    }
    return id;
  }

  MaybeError unknown_element(const xml::Element& e, const PrefixMap& prefixes) {
    const auto [ns, local] = resolve(e.name, prefixes);
    if (ns == kOwlNs || ns == kRdfsNs || ns == kRdfNs) {
      return subset_error(DiagCode::Unsupported,
                          "unsupported construct: " + local);
    }
    return subset_error(DiagCode::Unsupported,
                        "unknown element '" + e.name + "'");
  }

  MaybeError check_attributes(const xml::Element& e, const PrefixMap& prefixes,
                              const std::set<std::string>& allowed_rdf) {
    for (const auto& [name, attr_value] : e.attributes) {
      (void)attr_value;
      if (name == "xmlns" || name.starts_with("xmlns:")) continue;
      const auto [ns, local] = resolve(name, prefixes);
      if (ns == kRdfNs && allowed_rdf.count(local) > 0) continue;
      return subset_error(DiagCode::Unsupported,
                          "unknown attribute '" + name + "'");
    }
    return std::nullopt;
  }

  MaybeError read_top_level(const xml::Element& e, const PrefixMap& parent) {
    const PrefixMap prefixes = with_declared_prefixes(parent, e);
    const auto [ns, local] = resolve(e.name, prefixes);
    if (ns == kOwlNs && local == "Class") {
      return read_class(e, prefixes, nullptr);
    }
    if (ns == kOwlNs && local == "DatatypeProperty") {
      return read_datatype_property(e, prefixes);
    }
    if (ns == kOwlNs && local == "ObjectProperty") {
      return read_object_property(e, prefixes);
    }
    return unknown_element(e, prefixes);
  }

  // Reads an owl:Class element; stores the id into *id_out when requested
  // (nested class declarations inside axiom elements).
  MaybeError read_class(const xml::Element& e, const PrefixMap& parent,
                        std::string* id_out) {
    const PrefixMap prefixes = with_declared_prefixes(parent, e);
    if (auto failure = check_attributes(e, prefixes, {"ID", "about"})) {
      return failure;
    }
    const std::string* raw_id = nullptr;
    for (const auto& [name, attr_value] : e.attributes) {
      const auto [ns, local] = resolve(name, prefixes);
      if (ns == kRdfNs && (local == "ID" || local == "about")) {
        raw_id = &attr_value;
        break;
      }
    }
    if (raw_id == nullptr) {
      return subset_error(DiagCode::Unsupported, "owl:Class without rdf:ID");
    }
    auto id = read_identifier(*raw_id);
    if (is_error(id)) return error(id);
    classes_.insert(value(id));
    if (id_out != nullptr) *id_out = value(id);

    if (!whitespace_only(e.text)) {
      return subset_error(DiagCode::Unsupported,
                          "unexpected text content in owl:Class '" +
                              value(id) + "'");
    }
    for (const auto& child : e.children) {
      const PrefixMap child_prefixes = with_declared_prefixes(prefixes, child);
      const auto [child_ns, child_local] = resolve(child.name, child_prefixes);
      if (child_ns == kOwlNs && child_local == "equivalentClass") {
        if (auto failure = read_axiom(child, child_prefixes, value(id),
                                      LinkKind::EquivalentClass)) {
          return failure;
        }
      } else if (child_ns == kOwlNs && child_local == "complementOf") {
        if (auto failure = read_axiom(child, child_prefixes, value(id),
                                      LinkKind::ComplementOf)) {
          return failure;
        }
      } else if (child_ns == kRdfsNs && child_local == "subClassOf") {
        if (auto failure = read_axiom(child, child_prefixes, value(id),
                                      LinkKind::SubClassOf)) {
          return failure;
        }
      } else if (child_ns == kOwlNs && child_local == "DatatypeProperty") {
        if (auto failure = read_datatype_property(child, child_prefixes)) {
          return failure;
        }
      } else {
        return unknown_element(child, child_prefixes);
      }
    }
    return std::nullopt;
  }

  MaybeError read_axiom(const xml::Element& e, const PrefixMap& prefixes,
                        const std::string& source, LinkKind kind) {
    if (auto failure = check_attributes(e, prefixes, {"resource"})) {
      return failure;
    }
    const std::string* resource = nullptr;
    for (const auto& [name, attr_value] : e.attributes) {
      const auto [ns, local] = resolve(name, prefixes);
      if (ns == kRdfNs && local == "resource") resource = &attr_value;
    }
    std::string target;
    if (resource != nullptr) {
      if (!e.children.empty()) {
        return subset_error(DiagCode::Unsupported,
                            "axiom with both rdf:resource and a nested class");
      }
      auto id = read_identifier(*resource);
      if (is_error(id)) return error(id);
      target = value(id);
    } else {
      if (e.children.size() != 1) {
        return subset_error(
            DiagCode::Unsupported,
            std::string(link_kind_name(kind)) + " needs rdf:resource or one "
                                                "nested owl:Class");
      }
      const auto& child = e.children.front();
      const PrefixMap child_prefixes = with_declared_prefixes(prefixes, child);
      const auto [child_ns, child_local] = resolve(child.name, child_prefixes);
      if (child_ns != kOwlNs || child_local != "Class") {
        return unknown_element(child, child_prefixes);
      }
      if (auto failure = read_class(child, child_prefixes, &target)) {
        return failure;
      }
    }
    if (!whitespace_only(e.text)) {
      return subset_error(DiagCode::Unsupported,
                          "unexpected text content in axiom element");
    }
    if (source == target) {
      return subset_error(DiagCode::Unsupported,
                          "self link on class '" + source + "'");
    }
    axioms_.push_back({kind, source, target});
    return std::nullopt;
  }

  // Shared reader for the two property element shapes. Fills id plus the
  // rdf:resource values of rdfs:domain / rdfs:range children.
  MaybeError read_property_shape(const xml::Element& e,
                                 const PrefixMap& prefixes, std::string& id,
                                 std::string& domain_raw,
                                 std::string& range_raw) {
    if (auto failure = check_attributes(e, prefixes, {"ID", "about"})) {
      return failure;
    }
    const std::string* raw_id = nullptr;
    for (const auto& [name, attr_value] : e.attributes) {
      const auto [ns, local] = resolve(name, prefixes);
      if (ns == kRdfNs && (local == "ID" || local == "about")) {
        raw_id = &attr_value;
        break;
      }
    }
    if (raw_id == nullptr) {
      return subset_error(DiagCode::Unsupported,
                          "property element without rdf:ID");
    }
    auto parsed_id = read_identifier(*raw_id);
    if (is_error(parsed_id)) return error(parsed_id);
    id = value(parsed_id);

    if (!whitespace_only(e.text)) {
      return subset_error(DiagCode::Unsupported,
                          "unexpected text content in property '" + id + "'");
    }
    for (const auto& child : e.children) {
      const PrefixMap child_prefixes = with_declared_prefixes(prefixes, child);
      const auto [child_ns, child_local] = resolve(child.name, child_prefixes);
      const bool is_domain = child_ns == kRdfsNs && child_local == "domain";
      const bool is_range = child_ns == kRdfsNs && child_local == "range";
      if (!is_domain && !is_range) {
        return unknown_element(child, child_prefixes);
      }
      if (auto failure = check_attributes(child, child_prefixes, {"resource"})) {
        return failure;
      }
      if (!child.children.empty() || !whitespace_only(child.text)) {
        return subset_error(DiagCode::Unsupported,
                            "unexpected content in rdfs:" + child_local);
      }
      const std::string* resource = nullptr;
      for (const auto& [name, attr_value] : child.attributes) {
        const auto [ns, local] = resolve(name, child_prefixes);
        if (ns == kRdfNs && local == "resource") resource = &attr_value;
      }
      if (resource == nullptr) {
        return subset_error(DiagCode::Unsupported,
                            "rdfs:" + child_local + " without rdf:resource");
      }
      (is_domain ? domain_raw : range_raw) = *resource;
    }
    return std::nullopt;
  }

  MaybeError read_datatype_property(const xml::Element& e,
                                    const PrefixMap& parent) {
    const PrefixMap prefixes = with_declared_prefixes(parent, e);
    std::string id, domain_raw, range_raw;
    if (auto failure =
            read_property_shape(e, prefixes, id, domain_raw, range_raw)) {
      return failure;
    }
    if (domain_raw.empty()) {
      return subset_error(DiagCode::Unsupported,
                          "owl:DatatypeProperty '" + id +
                              "' is missing rdfs:domain");
    }
    if (!range_raw.empty() && range_raw != kXsdStringUri &&
        range_raw != "xs:string" && range_raw != "xsd:string") {
      return subset_error(DiagCode::Unsupported,
                          "unsupported datatype range '" + range_raw + "'");
    }
    auto domain = read_identifier(domain_raw);
    if (is_error(domain)) return error(domain);
    properties_.push_back({id, value(domain)});
    return std::nullopt;
  }

  MaybeError read_object_property(const xml::Element& e,
                                  const PrefixMap& parent) {
    const PrefixMap prefixes = with_declared_prefixes(parent, e);
    std::string id, domain_raw, range_raw;
    if (auto failure =
            read_property_shape(e, prefixes, id, domain_raw, range_raw)) {
      return failure;
    }
    if (domain_raw.empty() || range_raw.empty()) {
      return subset_error(DiagCode::Unsupported,
                          "owl:ObjectProperty '" + id +
                              "' needs rdfs:domain and rdfs:range");
    }
    auto source = read_identifier(domain_raw);
    if (is_error(source)) return error(source);
    auto target = read_identifier(range_raw);
    if (is_error(target)) return error(target);
    if (value(source) == value(target)) {
      return subset_error(DiagCode::Unsupported,
                          "self link on class '" + value(source) + "'");
    }
    object_properties_.push_back({id, value(source), value(target)});
    return std::nullopt;
  }

  // Reverses the serializer's "__" qualification. An id is restored to its
  // base form only when the document shows the collision that would have
  // forced qualification: the base is a class id, a qualified sibling of
  // the same base exists, or the two property families share the base.
  void dequalify() {
    auto property_base = [](const RawProperty& p) {
      const std::string suffix = "__" + p.domain;
      if (p.id.size() > suffix.size() && p.id.ends_with(suffix)) {
        return p.id.substr(0, p.id.size() - suffix.size());
      }
      return p.id;
    };
    auto object_base = [](const RawObjectProperty& op) {
      const std::string full = "__" + op.source + "__" + op.target;
      if (op.id.size() > full.size() && op.id.ends_with(full)) {
        return op.id.substr(0, op.id.size() - full.size());
      }
      const std::string partial = "__" + op.source;
      if (op.id.size() > partial.size() && op.id.ends_with(partial)) {
        return op.id.substr(0, op.id.size() - partial.size());
      }
      return op.id;
    };

    std::vector<std::string> property_bases, object_bases;
    for (const auto& p : properties_) property_bases.push_back(property_base(p));
    for (const auto& op : object_properties_) {
      object_bases.push_back(object_base(op));
    }

    for (size_t i = 0; i < properties_.size(); ++i) {
      const std::string& base = property_bases[i];
      if (base == properties_[i].id) continue;
      bool qualified_sibling = false;
      for (size_t j = 0; j < properties_.size(); ++j) {
        if (j != i && property_bases[j] == base &&
            properties_[j].domain != properties_[i].domain) {
          qualified_sibling = true;
        }
      }
      const bool object_shares =
          std::find(object_bases.begin(), object_bases.end(), base) !=
          object_bases.end();
      if (classes_.count(base) > 0 || qualified_sibling || object_shares) {
        properties_[i].id = base;
      }
    }

    for (size_t i = 0; i < object_properties_.size(); ++i) {
      const std::string& base = object_bases[i];
      if (base == object_properties_[i].id) continue;
      bool qualified_sibling = false;
      for (size_t j = 0; j < object_properties_.size(); ++j) {
        if (j != i && object_bases[j] == base &&
            (object_properties_[j].source != object_properties_[i].source ||
             object_properties_[j].target != object_properties_[i].target)) {
          qualified_sibling = true;
        }
      }
      const bool property_shares =
          std::find(property_bases.begin(), property_bases.end(), base) !=
          property_bases.end();
      if (classes_.count(base) > 0 || qualified_sibling || property_shares) {
        object_properties_[i].id = base;
      }
    }
  }

  Result<OntologyGraph> finish() {
    dequalify();

    OntologyGraph g;
    for (const auto& id : classes_) g.add_class(id);
    for (const auto& p : properties_) {
      if (!g.has_class(p.domain)) {
        return subset_error(DiagCode::DanglingRef,
                            "dangling reference: datatype property '" + p.id +
                                "' domain '#" + p.domain +
                                "' is not a declared class");
      }
      g.add_property({p.id, p.domain});
    }
    for (const auto& op : object_properties_) {
      for (const auto* endpoint : {&op.source, &op.target}) {
        if (!g.has_class(*endpoint)) {
          return subset_error(DiagCode::DanglingRef,
                              "dangling reference: object property '" + op.id +
                                  "' references undeclared class '#" +
                                  *endpoint + "'");
        }
      }
      g.add_link(LinkDecl::object_property(op.id, op.source, op.target));
    }
    for (const auto& axiom : axioms_) {
      for (const auto* endpoint : {&axiom.source, &axiom.target}) {
        if (!g.has_class(*endpoint)) {
          return subset_error(
              DiagCode::DanglingRef,
              "dangling reference: " +
                  std::string(link_kind_name(axiom.kind)) +
                  " references undeclared class '#" + *endpoint + "'");
        }
      }
      switch (axiom.kind) {
        case LinkKind::EquivalentClass:
          g.add_link(LinkDecl::equivalent_class(axiom.source, axiom.target));
          break;
        case LinkKind::ComplementOf:
          g.add_link(LinkDecl::complement_of(axiom.source, axiom.target));
          break;
        default:
          g.add_link(LinkDecl::sub_class_of(axiom.source, axiom.target));
          break;
      }
    }

    for (const auto& issue : g.validate()) {
      return issue;  // first violation (conflicting axioms, bad ids)
    }
    return g;
  }

  std::set<std::string> classes_;
  std::vector<RawProperty> properties_;
  std::vector<RawObjectProperty> object_properties_;
  std::vector<RawAxiom> axioms_;
};

}  // namespace detail

/// Reads the RDF/XML subset this serializer emits, plus the tolerances
/// needed for hand-written fragments: a missing rdf:RDF wrapper (a bare
/// sequence of declarations), rdf:ID values with a leading '#' or embedded
/// spaces, "xs:string" as a range, and class or property declarations
/// nested inside other declarations. Anything else is an error naming the
/// construct.
inline Result<OntologyGraph> parse_subset(std::string_view text) {
  detail::SubsetReader reader;
  return reader.read(text);
}

/// Structural comparison of two RDF/XML texts: true iff they declare the
/// same ontology once attribute order, whitespace, namespace prefix
/// spelling, element nesting style, axiom direction and the documented id
/// canonicalizations are ignored. Implemented by reading both sides with
/// parse_subset and comparing the graphs, so text outside the supported
/// subset is an error rather than a comparison.
inline Result<bool> structural_equal(std::string_view a, std::string_view b) {
  auto left = parse_subset(a);
  if (is_error(left)) {
    Diagnostic d = error(left);
    d.message = "left document: " + d.message;
    return d;
  }
  auto right = parse_subset(b);
  if (is_error(right)) {
    Diagnostic d = error(right);
    d.message = "right document: " + d.message;
    return d;
  }
  return value(left) == value(right);
}

}  // namespace rowl
