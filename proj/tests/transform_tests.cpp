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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "rowl/parser.hpp"
#include "rowl/transform.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace rowl;

namespace {

Rule parsed(std::string_view line) {
  auto rule = parse_line(line);
  REQUIRE_FALSE(is_error(rule));
  auto normalized = normalize_notation(value(rule));
  REQUIRE_FALSE(is_error(normalized));
  return take_value(std::move(normalized));
}

RuleKind kind_of(std::string_view line) {
  auto kind = classify(parsed(line));
  REQUIRE_FALSE(is_error(kind));
  return value(kind);
}

void expect_unmappable(std::string_view line) {
  auto kind = classify(parsed(line));
  REQUIRE(is_error(kind));
  CHECK(error(kind).code == DiagCode::Unmappable);
  CHECK(error(kind).severity == Severity::Error);
}

Rule classified(std::string_view line) {
  Rule rule = parsed(line);
  auto kind = classify(rule);
  REQUIRE_FALSE(is_error(kind));
  rule.kind = value(kind);
  return rule;
}

}  // namespace

TEST_CASE("classify recognizes the six mappable shapes") {
  CHECK(kind_of("IF Wings and Engine THEN Plane") ==
        RuleKind::ClassWithProperties);
  CHECK(kind_of("IF Tire and Rim and Hub THEN Wheel") ==
        RuleKind::ClassWithProperties);
  CHECK(kind_of("IF (Bike equivalent Bicycle) and (Wheel, Rudder in Bike) "
                "THEN (Wheel, Rudder in Bicycle)") == RuleKind::Equivalence);
  // Premise term order does not matter.
  CHECK(kind_of("IF (Wheel in Bike) and (Bike equivalent Bicycle) THEN "
                "(Wheel in Bicycle)") == RuleKind::Equivalence);
  CHECK(kind_of("IF Driver THEN hasVechicle Car") == RuleKind::ObjectRelation);
  CHECK(kind_of("IF Wings THEN part_of Plane") == RuleKind::PartOf);
  CHECK(kind_of("IF Car THEN not Plane") == RuleKind::Complement);
  CHECK(kind_of("IF Kitty THEN Cat") == RuleKind::BareSubsumption);
  // The variable notation classifies after normalization.
  CHECK(kind_of("IF x \xE2\x8A\x82 Wheel and Engine THEN x = Car") ==
        RuleKind::ClassWithProperties);
}

TEST_CASE("classify rejects every malformed equivalence shape") {
  // Conclusion target outside the pair.
  expect_unmappable(
      "IF (Alpha equivalent Beta) and (P in Alpha) THEN (P in Gamma)");
  // Premise membership target outside the pair.
  expect_unmappable(
      "IF (Alpha equivalent Beta) and (P in Gamma) THEN (P in Beta)");
  // Member sets differ.
  expect_unmappable(
      "IF (Alpha equivalent Beta) and (P in Alpha) THEN (Q in Beta)");
  // Conclusion target repeats the premise side.
  expect_unmappable(
      "IF (Alpha equivalent Beta) and (P in Alpha) THEN (P in Alpha)");
  // Pair naming one class twice.
  expect_unmappable(
      "IF (Alpha equivalent Alpha) and (P in Alpha) THEN (P in Alpha)");
  // Duplicate members.
  expect_unmappable(
      "IF (Alpha equivalent Beta) and (P, P in Alpha) THEN (P, P in Beta)");
  // Missing membership / extra terms.
  expect_unmappable("IF (Alpha equivalent Beta) THEN (P in Beta)");
  expect_unmappable(
      "IF (Alpha equivalent Beta) and (P in Alpha) and Gamma THEN (P in "
      "Beta)");
  // Membership conclusion without an equivalence premise.
  expect_unmappable("IF Alpha THEN (P in Alpha)");
}

TEST_CASE("classify rejects degenerate shapes") {
  expect_unmappable("IF Car THEN Car");
  expect_unmappable("IF Car THEN not Car");
  expect_unmappable("IF Car THEN part_of Car");
  expect_unmappable("IF Car THEN hasPart Car");
  expect_unmappable("IF Wheel and Wheel THEN Car");
  expect_unmappable("IF Wheel and Engine THEN not Car");
  expect_unmappable("IF Wheel and Engine THEN hasPart Car");
  expect_unmappable("IF (Wheel in Bike) THEN Car");
}

TEST_CASE("transform produces the fragment for each kind") {
  SECTION("object relation") {
    const FragmentDelta delta = transform(classified("IF Driver THEN hasVechicle Car"));
    CHECK(delta.additions.classes == std::set<std::string>{"Car", "Driver"});
    CHECK(delta.additions.datatype_properties.empty());
    REQUIRE(delta.additions.links.size() == 1);
    const LinkDecl& link = *delta.additions.links.begin();
    CHECK(link.kind == LinkKind::ObjectProperty);
    CHECK(link.name == "hasVechicle");
    CHECK(link.source == "Driver");
    CHECK(link.target == "Car");
  }

  SECTION("complement") {
    const FragmentDelta delta = transform(classified("IF Car THEN not Plane"));
    CHECK(delta.additions.classes == std::set<std::string>{"Car", "Plane"});
    REQUIRE(delta.additions.links.size() == 1);
    CHECK(delta.additions.links.begin()->kind == LinkKind::ComplementOf);
    CHECK(delta.additions.links.begin()->source == "Car");
    CHECK(delta.additions.links.begin()->target == "Plane");
  }

  SECTION("equivalence puts the members on both classes") {
    const FragmentDelta delta = transform(classified(
        "IF (Bike equivalent Bicycle) and (Wheel, Rudder in Bike) THEN "
        "(Wheel, Rudder in Bicycle)"));
    CHECK(delta.additions.classes == std::set<std::string>{"Bicycle", "Bike"});
    CHECK(delta.additions.datatype_properties ==
          std::set<DatatypePropertyDecl>{{"Rudder", "Bicycle"},
                                         {"Rudder", "Bike"},
                                         {"Wheel", "Bicycle"},
                                         {"Wheel", "Bike"}});
    REQUIRE(delta.additions.links.size() == 1);
    CHECK(delta.additions.links.begin()->kind == LinkKind::EquivalentClass);
    CHECK(delta.additions.links.begin()->source == "Bicycle");
  }

  SECTION("bare subsumption maps to subClassOf") {
    const FragmentDelta delta = transform(classified("IF Kitty THEN Cat"));
    REQUIRE(delta.additions.links.size() == 1);
    CHECK(delta.additions.links.begin()->kind == LinkKind::SubClassOf);
    CHECK(delta.additions.links.begin()->source == "Kitty");
  }

  SECTION("identical canonical rules produce identical deltas") {
    const FragmentDelta a = transform(classified("IF Wheel and Engine THEN Car"));
    const FragmentDelta b = transform(classified("IF Engine and Wheel THEN Car"));
    CHECK(a.additions == b.additions);
    CHECK(a.provenance == b.provenance);
  }
}

TEST_CASE("convert merges the whole batch") {
  SECTION("empty input") {
    const ConvertResult result = convert(std::vector<Rule>{});
    CHECK(result.graph.empty());
    CHECK(result.diagnostics.empty());
  }

  SECTION("the vehicles corpus, administrative mode") {
    const ConvertResult result = convert(testing::parse_vehicle_rules());
    CHECK(result.diagnostics.empty());

    OntologyGraph expected;
    for (const char* c :
         {"Bicycle", "Bike", "Car", "Driver", "Plane", "Wings"}) {
      expected.add_class(c);
    }
    expected.add_property({"Engine", "Plane"});
    expected.add_property({"Rudder", "Bicycle"});
    expected.add_property({"Rudder", "Bike"});
    expected.add_property({"Wheel", "Bicycle"});
    expected.add_property({"Wheel", "Bike"});
    expected.add_property({"Wings", "Plane"});
    expected.add_link(LinkDecl::object_property("hasVechicle", "Driver", "Car"));
    expected.add_link(LinkDecl::equivalent_class("Bike", "Bicycle"));
    expected.add_link(LinkDecl::sub_class_of("Wings", "Plane"));
    expected.add_link(LinkDecl::complement_of("Car", "Plane"));

    CHECK(graph_isomorphic(result.graph, expected));
  }

  SECTION("bad rules are skipped, good ones kept") {
    ParsedRules parsed_batch = parse_rules(
        "IF Car THEN Car\n"
        "IF Wings THEN part_of Plane\n");
    const ConvertResult result = convert(parsed_batch.rules);
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics.front().code == DiagCode::Unmappable);
    CHECK(result.diagnostics.front().line == 1);
    CHECK(result.graph.classes == std::set<std::string>{"Plane", "Wings"});
  }

  SECTION("conflicting rule excluded with one error") {
    ParsedRules parsed_batch = parse_rules(
        "IF Car THEN not Plane\n"
        "IF (Car equivalent Plane) and (Wheel in Car) THEN (Wheel in Plane)\n");
    const ConvertResult result = convert(parsed_batch.rules);
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics.front().code == DiagCode::Conflict);
    CHECK(result.diagnostics.front().line == 2);
    CHECK(result.graph.links.size() == 1);
    CHECK(result.graph.links.begin()->kind == LinkKind::ComplementOf);
  }
}

TEST_CASE("refine promotes properties that double as classes") {
  ParsedRules corpus = parse_rules(
      "IF Wheel and Engine THEN Car\n"
      "IF Tire and Rim THEN Wheel\n");
  const OntologyGraph before = convert(corpus.rules).graph;
  const OntologyGraph after = refine(before);

  OntologyGraph expected;
  expected.add_class("Car");
  expected.add_class("Wheel");
  expected.add_property({"Engine", "Car"});
  expected.add_property({"Rim", "Wheel"});
  expected.add_property({"Tire", "Wheel"});
  expected.add_link(LinkDecl::object_property("hasWheel", "Car", "Wheel"));
  CHECK(graph_isomorphic(after, expected));
}

TEST_CASE("refine shares properties across an equivalence") {
  OntologyGraph g;
  g.add_class("Bicycle");
  g.add_class("Bike");
  g.add_property({"Wheel", "Bike"});
  g.add_link(LinkDecl::equivalent_class("Bicycle", "Bike"));

  const OntologyGraph refined = refine(g);
  CHECK(refined.datatype_properties.count({"Wheel", "Bicycle"}) == 1);
  CHECK(refined.datatype_properties.count({"Wheel", "Bike"}) == 1);
}

TEST_CASE("refine removes subsumptions implied by transitivity") {
  OntologyGraph g;
  for (const char* c : {"Hub", "Wheel", "Car"}) g.add_class(c);
  g.add_link(LinkDecl::sub_class_of("Hub", "Wheel"));
  g.add_link(LinkDecl::sub_class_of("Wheel", "Car"));
  g.add_link(LinkDecl::sub_class_of("Hub", "Car"));

  const OntologyGraph refined = refine(g);
  CHECK(refined.links.size() == 2);
  CHECK(refined.links.count(LinkDecl::sub_class_of("Hub", "Car")) == 0);

  // A two-cycle is not reducible.
  OntologyGraph cycle;
  cycle.add_class("A");
  cycle.add_class("B");
  cycle.add_link(LinkDecl::sub_class_of("A", "B"));
  cycle.add_link(LinkDecl::sub_class_of("B", "A"));
  CHECK(graph_isomorphic(refine(cycle), cycle));
}

TEST_CASE("refine reaches a fixed point even on self-domain properties") {
  // A property named like its own domain cannot be promoted (that would be
  // a self link) and must not oscillate with equivalence sharing.
  OntologyGraph g;
  g.add_class("P");
  g.add_class("B");
  g.add_property({"P", "P"});
  g.add_link(LinkDecl::equivalent_class("B", "P"));

  const OntologyGraph refined = refine(g);
  CHECK(graph_isomorphic(refined, g));
  CHECK(graph_isomorphic(refine(refined), refined));
}

TEST_CASE("refine is idempotent and never deletes classes") {
  std::mt19937 rng(20260101);
  for (int i = 0; i < 60; ++i) {
    const OntologyGraph g = testing::random_graph(rng);
    const OntologyGraph once = refine(g);
    CHECK(graph_isomorphic(refine(once), once));
    CHECK(std::includes(once.classes.begin(), once.classes.end(),
                        g.classes.begin(), g.classes.end()));
    CHECK(once.validate().empty());
  }
}

TEST_CASE("evolutionary conversion refines after every merge") {
  const ConvertResult result =
      convert(testing::parse_vehicle_rules(),
              {.mode = TransformMode::Evolutionary});
  CHECK(result.diagnostics.empty());

  OntologyGraph expected;
  for (const char* c : {"Bicycle", "Bike", "Car", "Driver", "Plane", "Wings"}) {
    expected.add_class(c);
  }
  expected.add_property({"Engine", "Plane"});
  expected.add_property({"Rudder", "Bicycle"});
  expected.add_property({"Rudder", "Bike"});
  expected.add_property({"Wheel", "Bicycle"});
  expected.add_property({"Wheel", "Bike"});
  expected.add_link(LinkDecl::object_property("hasVechicle", "Driver", "Car"));
  expected.add_link(LinkDecl::object_property("hasWings", "Plane", "Wings"));
  expected.add_link(LinkDecl::equivalent_class("Bike", "Bicycle"));
  expected.add_link(LinkDecl::sub_class_of("Wings", "Plane"));
  expected.add_link(LinkDecl::complement_of("Car", "Plane"));

  CHECK(graph_isomorphic(result.graph, expected));
}
