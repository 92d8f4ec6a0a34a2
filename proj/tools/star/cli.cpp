// Copyright 2026 The star-engine Authors
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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "star/bk_graph.hpp"
#include "star/model_io.hpp"
#include "star/parser.hpp"

namespace star::cli {
namespace {

bool slurp(const std::string& path, std::string& text, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "star: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

void print(const std::vector<Diagnostic>& diags, std::ostream& err) {
  for (const auto& d : diags) err << format_diagnostic(d) << "\n";
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& /*out*/, std::ostream& err) {
  std::string text;
  if (!slurp(path, text, err)) return kUsage;
  ParseResult parsed = parse_domain(text);
  auto diags = std::move(parsed.diagnostics);
  for (auto& d : validate_domain(parsed.domain)) diags.push_back(std::move(d));
  print(diags, err);
  return has_errors(diags) ? kDiagnostics : kOk;
}

int cmd_read(const std::string& path, const std::string& format,
             const ReadOptions& options, std::ostream& out, std::ostream& err) {
  std::string text;
  if (!slurp(path, text, err)) return kUsage;
  const bool raw = format == "raw";
  try {
    ReadOutcome r = read_story(text, options, [&](std::string_view line) {
      if (raw) out << line << '\n' << std::flush;
    });
    print(r.diagnostics, err);
    if (!r.ok()) return kDiagnostics;
    if (!raw) out << to_json(render_model_document(r.sessions, options.visible)) << "\n";
  } catch (const UnknownSession& e) {
    err << "star: " << e.what() << "\n";
    return kUsage;
  } catch (const EngineError& e) {
    err << "star: " << e.what() << "\n";
    return kEngine;
  }
  return kOk;
}

int cmd_graph(const std::string& path, const std::string& format,
              std::ostream& out, std::ostream& err) {
  std::string text;
  if (!slurp(path, text, err)) return kUsage;
  ParseResult parsed = parse_domain(text);
  auto diags = std::move(parsed.diagnostics);
  for (auto& d : validate_domain(parsed.domain)) diags.push_back(std::move(d));
  print(diags, err);
  if (has_errors(diags)) return kDiagnostics;
  GraphDocument g = export_bk_graph(parsed.domain);
  if (format == "dot")
    out << to_dot(g);
  else
    out << to_json(g) << "\n";
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"STAR story comprehension", "star"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Report diagnostics for a domain file");
  validate->add_option("file", path, "Domain file")->required();

  std::string read_format = "raw", report = "", session = "all", visible = "";
  int slack = 2;
  auto* read = app.add_subcommand("read", "Build the comprehension model");
  read->add_option("file", path, "Domain file")->required();
  read->add_option("--format", read_format, "raw or model")
      ->check(CLI::IsMember({"raw", "model"}));
  read->add_option("--report", report,
                   "Comma-joined: universal,acceptable,retracted,elaborated,qualified, or all");
  read->add_option("--horizon-slack", slack, "Time-points past the last mention")
      ->check(CLI::NonNegativeNumber);
  read->add_option("--session", session, "Session number or 'all'");
  read->add_option("--visible", visible, "'all' or a comma-joined list of concept patterns");

  std::string graph_format = "graph";
  auto* graph = app.add_subcommand("graph", "Export the background-knowledge graph");
  graph->add_option("file", path, "Domain file")->required();
  graph->add_option("--format", graph_format, "graph or dot")
      ->check(CLI::IsMember({"graph", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "star: " << e.what() << "\n";
    return kUsage;
  }

  if (*validate) return cmd_validate(path, out, err);
  if (*graph) return cmd_graph(path, graph_format, out, err);

  ReadOptions options;
  options.slack = slack;
  if (!report.empty()) {
    auto set = TraceSet::parse(report);
    if (!set) {
      err << "star: unknown report category in '" << report << "'\n";
      return kUsage;
    }
    options.report = *set;
  }
  if (session != "all") {
    try {
      std::size_t used = 0;
      int n = std::stoi(session, &used);
      if (used != session.size() || n < 0) throw std::invalid_argument(session);
      options.session = n;
    } catch (const std::exception&) {
      err << "star: --session expects a non-negative integer or 'all'\n";
      return kUsage;
    }
  }
  if (!visible.empty()) {
    Visibility v;
    if (visible != "all") {
      std::vector<Diagnostic> diags;
      auto terms = parse_term_list(visible, &diags);
      if (!terms) {
        err << "star: --visible: cannot parse '" << visible << "'\n";
        return kUsage;
      }
      v.all = false;
      v.patterns = std::move(*terms);
    }
    options.visible = v;
  }
  return cmd_read(path, read_format, options, out, err);
}

}  // namespace star::cli
