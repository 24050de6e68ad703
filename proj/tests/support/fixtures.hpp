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

// The vehicles corpus: five rules, one per mapping kind, plus the golden
// RDF/XML fragments each single rule must serialize to. The fragments keep
// their original hand-written quirks (ids with leading '#', an id with an
// embedded space, xs:string ranges, mixed nesting styles) on purpose: the
// structural comparison is expected to absorb exactly those.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "rowl/parser.hpp"
#include "rowl/rule.hpp"

namespace rowl::testing {

inline constexpr std::array<std::string_view, 5> kVehicleRules = {
    "IF Wings and Engine THEN Plane",
    "IF (Bike equivalent Bicycle) and (Wheel, Rudder in Bike) THEN (Wheel, "
    "Rudder in Bicycle)",
    "IF Driver THEN hasVechicle Car",
    "IF Wings THEN part_of Plane",
    "IF Car THEN not Plane",
};

inline std::string vehicle_rules_text() {
  std::string out;
  for (const auto line : kVehicleRules) {
    out += line;
    out += '\n';
  }
  return out;
}

inline std::vector<Rule> parse_vehicle_rules() {
  ParsedRules parsed = parse_rules(vehicle_rules_text());
  return parsed.rules;
}

// Golden fragment for the class-with-properties mapping.
inline constexpr std::string_view kTwoPropertyClassFragment = R"(
<owl:Class rdf:ID="#Plane"/>
  <owl:DatatypeProperty rdf:ID="Wings">
    <rdfs:domain rdf:resource="#Plane"/>
    <rdfs:range rdf:resource="xs:string"/>
  </owl:DatatypeProperty>
  <owl:DatatypeProperty rdf:ID="Engine">
    <rdfs:domain rdf:resource="#Plane"/>
    <rdfs:range rdf:resource="xs:string"/>
  </owl:DatatypeProperty>
)";

// Golden fragment for the equivalence mapping. Note the duplicated property
// ids under two domains and the nested re-declaration of Bicycle.
inline constexpr std::string_view kEquivalenceFragment = R"(
<owl:Class rdf:ID="Bicycle">
  <owl:DatatypeProperty rdf:ID="Wheel">
    <rdfs:domain rdf:resource="#Bicycle"/>
    <rdfs:range rdf:resource="xs:string"/>
  </owl:DatatypeProperty>
  <owl:DatatypeProperty rdf:ID="Rudder">
    <rdfs:domain rdf:resource="#Bicycle"/>
    <rdfs:range rdf:resource="xs:string"/>
  </owl:DatatypeProperty>
</owl:Class>
<owl:Class rdf:ID="Bike">
  <owl:DatatypeProperty rdf:ID="Wheel">
    <rdfs:domain rdf:resource="#Bike"/>
    <rdfs:range rdf:resource="xs:string"/>
  </owl:DatatypeProperty>
  <owl:DatatypeProperty rdf:ID="Rudder">
    <rdfs:domain rdf:resource="#Bike"/>
    <rdfs:range rdf:resource="xs:string"/>
  </owl:DatatypeProperty>
  <owl:equivalentClass>
    <owl:Class rdf:ID="Bicycle"/>
  </owl:equivalentClass>
</owl:Class>
)";

// Golden fragment for the object-relation mapping ("has Vechicle" is data,
// spelling included; the id normalizes to hasVechicle).
inline constexpr std::string_view kObjectRelationFragment = R"(
<owl:Class rdf:ID="#Driver"/>
<owl:Class rdf:ID="#Car"/>
<owl:ObjectProperty rdf:ID="has Vechicle">
  <rdfs:domain rdf:resource="#Driver"/>
  <rdfs:range rdf:resource="#Car"/>
</owl:ObjectProperty>
)";

// Golden fragment for the part-of mapping.
inline constexpr std::string_view kPartOfFragment = R"(
<owl:Class rdf:ID="Wings">
  <rdfs:subClassOf>
    <owl:Class rdf:ID="Plane"/>
  </rdfs:subClassOf>
</owl:Class>
)";

// Golden fragment for the complement mapping.
inline constexpr std::string_view kComplementFragment = R"(
<owl:Class rdf:ID="Plane"/>
<owl:Class rdf:ID="Car">
  <owl:complementOf rdf:resource="#Plane"/>
</owl:Class>
)";

inline constexpr std::array<std::string_view, 5> kVehicleFragments = {
    kTwoPropertyClassFragment, kEquivalenceFragment, kObjectRelationFragment,
    kPartOfFragment, kComplementFragment,
};

// The deliberately unsupported alternative encoding of a two-property
// class: the reader must reject unionOf by name.
inline constexpr std::string_view kUnionOfFragment = R"(
<owl:Class rdf:ID="Car">
  <owl:unionOf rdf:parseType="Collection">
    <owl:Class rdf:about="#Wheel"/>
    <owl:Class rdf:about="#Engine"/>
  </owl:unionOf>
</owl:Class>
)";

}  // namespace rowl::testing
