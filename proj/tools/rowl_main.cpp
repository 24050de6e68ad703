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

// rowl command line: convert rule files to OWL ontologies, extract rules
// back out of generated ontologies, and check the round trip.
//
// Exit status: 0 success, 1 when any ERROR diagnostic was produced (or a
// round-trip check failed), 2 on usage or I/O failure. Diagnostics go to
// stderr as "LEVEL line:col message"; command output never mixes with them.
// Output is byte-identical across runs on identical input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rowl/rowl.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

struct DiagnosticSink {
  bool quiet = false;
  bool saw_error = false;

  void emit(const rowl::Diagnostic& d) {
    if (d.severity == rowl::Severity::Error) {
      saw_error = true;
    } else if (quiet) {
      return;
    }
    std::cerr << rowl::format_diagnostic(d) << '\n';
  }

  void emit_all(const std::vector<rowl::Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics) emit(d);
  }

  int exit_status() const { return saw_error ? kExitDiagnostics : kExitOk; }
};

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "ERROR 0:0 cannot read '" << path << "'\n";
    return false;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  out = buffer.str();
  return true;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "ERROR 0:0 cannot write '" << path << "'\n";
    return false;
  }
  file << content;
  return static_cast<bool>(file);
}

rowl::TransformConfig config_for(const std::string& mode) {
  rowl::TransformConfig config;
  if (mode == "evolutionary") config.mode = rowl::TransformMode::Evolutionary;
  return config;
}

std::vector<std::string> describe_graph(const rowl::OntologyGraph& g) {
  std::vector<std::string> out;
  for (const auto& id : g.classes) out.push_back("class " + id);
  for (const auto& p : g.datatype_properties) {
    out.push_back("property " + p.id + " on " + p.domain);
  }
  for (const auto& l : g.links) {
    std::string line(rowl::link_kind_name(l.kind));
    if (l.kind == rowl::LinkKind::ObjectProperty) line += " " + l.name;
    line += " " + l.source + " -> " + l.target;
    out.push_back(std::move(line));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Canonical forms of the mappable rules in a batch; unmappable ones are
// reported through the sink like convert would report them.
std::set<std::string> canonical_set(const std::vector<rowl::Rule>& rules) {
  std::set<std::string> out;
  for (const auto& rule : rules) {
    auto normalized = rowl::normalize_notation(rule);
    if (rowl::is_error(normalized)) continue;
    rowl::Rule r = rowl::take_value(std::move(normalized));
    auto kind = rowl::classify(r);
    if (rowl::is_error(kind)) continue;
    r.kind = rowl::value(kind);
    out.insert(rowl::canonical_form(r));
  }
  return out;
}

int cmd_convert(const std::string& rules_path, const std::string& out_path,
                const std::string& mode, const std::string& format,
                bool quiet) {
  std::string text;
  if (!read_input(rules_path, text)) return kExitUsage;

  DiagnosticSink sink{quiet};
  rowl::ParsedRules parsed = rowl::parse_rules(text);
  sink.emit_all(parsed.diagnostics);

  rowl::ConvertResult converted =
      rowl::convert(parsed.rules, config_for(mode));
  sink.emit_all(converted.diagnostics);

  rowl::SerializationConfig serialization;
  if (format == "turtle") serialization.format = rowl::OutputFormat::Turtle;
  if (!write_output(out_path, rowl::serialize(converted.graph, serialization))) {
    return kExitUsage;
  }
  return sink.exit_status();
}

int cmd_extract(const std::string& owl_path, const std::string& out_path,
                bool quiet) {
  std::string text;
  if (!read_input(owl_path, text)) return kExitUsage;

  DiagnosticSink sink{quiet};
  auto graph = rowl::parse_subset(text);
  if (rowl::is_error(graph)) {
    sink.emit(rowl::error(graph));
    return sink.exit_status();
  }

  std::string out;
  for (const auto& rule : rowl::extract_rules(rowl::value(graph))) {
    out += rowl::canonical_form(rule);
    out += '\n';
  }
  if (!write_output(out_path, out)) return kExitUsage;
  return sink.exit_status();
}

int cmd_roundtrip(const std::string& rules_path, const std::string& mode,
                  bool quiet) {
  std::string text;
  if (!read_input(rules_path, text)) return kExitUsage;

  DiagnosticSink sink{quiet};
  rowl::ParsedRules parsed = rowl::parse_rules(text);
  sink.emit_all(parsed.diagnostics);

  const rowl::TransformConfig config = config_for(mode);
  rowl::ConvertResult first = rowl::convert(parsed.rules, config);
  sink.emit_all(first.diagnostics);

  const std::vector<rowl::Rule> extracted = rowl::extract_rules(first.graph);
  rowl::ConvertResult second = rowl::convert(extracted, config);
  sink.emit_all(second.diagnostics);

  if (rowl::graph_isomorphic(first.graph, second.graph)) {
    std::cout << "PASS: ontology round-trip is stable (" << first.graph.classes.size()
              << " classes, " << first.graph.datatype_properties.size()
              << " datatype properties, " << first.graph.links.size()
              << " links)\n";
  } else {
    sink.saw_error = true;
    std::cout << "FAIL: round-trip changed the ontology\n";
    const auto before = describe_graph(first.graph);
    const auto after = describe_graph(second.graph);
    for (const auto& line : before) {
      if (!std::binary_search(after.begin(), after.end(), line)) {
        std::cout << "  - " << line << '\n';
      }
    }
    for (const auto& line : after) {
      if (!std::binary_search(before.begin(), before.end(), line)) {
        std::cout << "  + " << line << '\n';
      }
    }
  }

  // Rule-level differences are expected for shapes that normalize (for
  // example a bare subsumption extracts as part_of); report them as notes.
  const std::set<std::string> original = canonical_set(parsed.rules);
  std::set<std::string> recovered;
  for (const auto& rule : extracted) {
    recovered.insert(rowl::canonical_form(rule));
  }
  if (original != recovered) {
    std::cout << "note: extracted rules differ from canonicalized input:\n";
    for (const auto& line : original) {
      if (recovered.count(line) == 0) std::cout << "  - " << line << '\n';
    }
    for (const auto& line : recovered) {
      if (original.count(line) == 0) std::cout << "  + " << line << '\n';
    }
  }
  return sink.exit_status();
}

int cmd_validate(const std::string& owl_path, bool quiet) {
  std::string text;
  if (!read_input(owl_path, text)) return kExitUsage;

  DiagnosticSink sink{quiet};
  auto graph = rowl::parse_subset(text);
  if (rowl::is_error(graph)) {
    sink.emit(rowl::error(graph));
    return sink.exit_status();
  }
  const rowl::OntologyGraph& g = rowl::value(graph);
  sink.emit_all(g.validate());
  if (!sink.saw_error) {
    std::cout << "ok: " << g.classes.size() << " classes, "
              << g.datatype_properties.size() << " datatype properties, "
              << g.links.size() << " links\n";
  }
  return sink.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rule <-> OWL ontology transpiler"};
  app.require_subcommand(1);

  std::string input;
  std::string output = "-";
  std::string mode = "administrative";
  std::string format = "rdfxml";
  bool quiet = false;

  app.add_flag("--quiet,-q", quiet, "suppress WARNING diagnostics");
  app.fallthrough();  // lets --quiet appear after the subcommand name

  auto* convert = app.add_subcommand(
      "convert", "transform a rule file into an OWL ontology");
  convert->add_option("rules", input, "rule file, or '-' for stdin")
      ->required();
  convert->add_option("-o,--output", output, "output file, or '-' for stdout");
  convert->add_option("--mode", mode, "administrative|evolutionary")
      ->check(CLI::IsMember({"administrative", "evolutionary"}));
  convert->add_option("--format", format, "rdfxml|turtle")
      ->check(CLI::IsMember({"rdfxml", "turtle"}));

  auto* extract = app.add_subcommand(
      "extract", "recover canonical rules from a generated ontology");
  extract->add_option("ontology", input, "OWL file, or '-' for stdin")
      ->required();
  extract->add_option("-o,--output", output, "output file, or '-' for stdout");

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "convert, extract and re-convert, then compare the graphs");
  roundtrip->add_option("rules", input, "rule file, or '-' for stdin")
      ->required();
  roundtrip->add_option("--mode", mode, "administrative|evolutionary")
      ->check(CLI::IsMember({"administrative", "evolutionary"}));

  auto* validate = app.add_subcommand(
      "validate", "parse an ontology file and check graph invariants");
  validate->add_option("ontology", input, "OWL file, or '-' for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (convert->parsed()) return cmd_convert(input, output, mode, format, quiet);
  if (extract->parsed()) return cmd_extract(input, output, quiet);
  if (roundtrip->parsed()) return cmd_roundtrip(input, mode, quiet);
  if (validate->parsed()) return cmd_validate(input, quiet);
  return kExitUsage;
}
