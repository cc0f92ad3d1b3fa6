// Copyright 2026 The sqenergy Authors
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

#include "sqenergy/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "sqenergy/error.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/report_io.hpp"
#include "sqenergy/verify.hpp"

namespace sqenergy::cli {
namespace {

struct Config {
  std::string in_path;
  std::string inline_graph;
  std::string format = "edgelist";
  std::string output = "table";
  std::string out_path;
  int k_max = 51;
  int n_min = 3;
  int n_max = 0;
  std::string k = "odd";
  long trials = 100;
  std::uint64_t seed = 0;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int workers = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A library error tagged with the file (and line) it came from.
class LocatedError : public std::runtime_error {
 public:
  LocatedError(const std::string& origin, const Error& e)
      : std::runtime_error(origin + ": " + e.what()), code(e.code()) {}
  ErrorCode code;
};

CampaignOptions campaign_options(const Config& cfg) {
  CampaignOptions opts;
  opts.tolerances.quadrature.rel_tol = cfg.rel_tol;
  opts.tolerances.quadrature.abs_tol = cfg.abs_tol;
  opts.tolerances.quadrature.validate();
  opts.workers = cfg.workers;
  return opts;
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct NamedGraph {
  std::string origin;
  Graph graph;
};

std::vector<NamedGraph> load_graphs(const Config& cfg, std::istream& in) {
  if (!cfg.in_path.empty() && !cfg.inline_graph.empty()) {
    throw UsageError("--in and --graph are mutually exclusive");
  }
  std::string origin = "<stdin>";
  std::string text;
  if (!cfg.inline_graph.empty()) {
    origin = "<inline>";
    text = cfg.inline_graph;
  } else if (!cfg.in_path.empty()) {
    origin = cfg.in_path;
    std::ifstream file(cfg.in_path);
    if (!file) throw UsageError("cannot open " + cfg.in_path);
    text = slurp(file);
  } else {
    text = slurp(in);
  }

  std::vector<NamedGraph> out;
  auto wrap = [&](const std::string& where, auto&& parse) {
    try {
      out.push_back({where, parse()});
    } catch (const Error& e) {
      throw LocatedError(where, e);
    }
  };
  if (cfg.format == "graph6") {
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      wrap(origin + ":" + std::to_string(line_no), [&] { return parse_graph6(line); });
    }
    if (out.empty()) throw Error(ErrorCode::BadHeader, origin + ": no graph6 lines");
  } else {
    wrap(origin, [&] { return parse_edge_list(text); });
  }
  return out;
}

class Output {
 public:
  Output(const Config& cfg, std::ostream& fallback) {
    if (!cfg.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(cfg.out_path);
      if (!*file_) throw UsageError("cannot write " + cfg.out_path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// Streams per-graph reports as NDJSON or CSV while a campaign runs.
ReportSink report_sink(const Config& cfg, std::ostream& out) {
  if (cfg.output == "json") {
    return [&out](const AnalysisReport& r) { out << to_json(r).dump() << '\n'; };
  }
  if (cfg.output == "csv") {
    out << csv_header() << '\n';
    return [&out](const AnalysisReport& r) { out << csv_row(r) << '\n'; };
  }
  return {};
}

void finish(const Config& cfg, std::ostream& out, const CampaignSummary& s) {
  if (cfg.output == "json") {
    out << to_json(s).dump() << '\n';
  } else if (cfg.output == "table") {
    write_summary_table(out, s);
  }
}

int exit_for(bool ok) { return ok ? kExitOk : kExitFailure; }

int cmd_analyze(const Config& cfg, std::istream& in, std::ostream& out_default) {
  auto graphs = load_graphs(cfg, in);
  Output output(cfg, out_default);
  std::ostream& out = output.stream();
  Tolerances tol = campaign_options(cfg).tolerances;
  std::vector<AnalysisReport> reports;
  for (const auto& ng : graphs) {
    try {
      reports.push_back(analyze(ng.graph, tol));
    } catch (const Error& e) {
      throw LocatedError(ng.origin, e);
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && is_ok(r.verdict);
  if (cfg.output == "json") {
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
  } else if (cfg.output == "csv") {
    out << csv_header() << '\n';
    for (const auto& r : reports) out << csv_row(r) << '\n';
  } else {
    write_report_table(out, reports);
  }
  return exit_for(ok);
}

int cmd_cycles(const Config& cfg, std::ostream& out_default) {
  Output output(cfg, out_default);
  std::ostream& out = output.stream();
  auto opts = campaign_options(cfg);
  if (cfg.output == "json") {
    CycleSweep sweep = sweep_cycles(cfg.k_max, opts);
    for (const auto& row : sweep.rows) out << to_json(row).dump() << '\n';
    out << to_json(sweep.summary).dump() << '\n';
    return exit_for(sweep.summary.ok());
  }
  if (cfg.output == "csv") {
    CycleSweep sweep = sweep_cycles(cfg.k_max, opts, report_sink(cfg, out));
    return exit_for(sweep.summary.ok());
  }
  CycleSweep sweep = sweep_cycles(cfg.k_max, opts);
  write_cycle_table(out, sweep);
  fmt::print(out, "worst deviation {:.3e}; {}\n", sweep.summary.worst_closed_form_deviation,
             sweep.summary.ok() ? "PASS" : "FAIL");
  return exit_for(sweep.summary.ok());
}

int cmd_exhaustive(const Config& cfg, std::ostream& out_default) {
  Output output(cfg, out_default);
  std::ostream& out = output.stream();
  const int n_max = cfg.n_max == 0 ? 6 : cfg.n_max;
  CampaignSummary s = exhaustive_campaign(n_max, campaign_options(cfg), report_sink(cfg, out),
                                          cfg.n_min);
  finish(cfg, out, s);
  return exit_for(s.ok());
}

KPolicy parse_k_policy(const std::string& text) {
  if (text == "odd") return {KPolicyKind::RandomOdd, 0};
  if (text == "any") return {KPolicyKind::RandomAny, 0};
  try {
    std::size_t used = 0;
    int k = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return {KPolicyKind::Fixed, k};
  } catch (const std::logic_error&) {
    throw UsageError("--k expects an integer, 'odd' or 'any', got '" + text + "'");
  }
}

int cmd_random(const Config& cfg, std::ostream& out_default) {
  Output output(cfg, out_default);
  std::ostream& out = output.stream();
  RandomCampaignConfig rc;
  rc.n_min = cfg.n_min;
  rc.n_max = cfg.n_max == 0 ? 30 : cfg.n_max;
  rc.k_policy = parse_k_policy(cfg.k);
  rc.trials = cfg.trials;
  rc.seed = cfg.seed;
  CampaignSummary s = random_campaign(rc, campaign_options(cfg), report_sink(cfg, out));
  finish(cfg, out, s);
  return exit_for(s.ok());
}

Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

int cmd_selftest(const Config& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  auto opts = campaign_options(cfg);
  bool all = true;
  auto line = [&](bool ok, const std::string& what) {
    fmt::print(out, "[{}] {}\n", ok ? "PASS" : "FAIL", what);
    all = all && ok;
  };
  struct Fixture {
    std::string name;
    Graph graph;
    Verdict expected;
    double delta;
  };
  const Fixture fixtures[] = {
      {"C3", cycle_graph(3), Verdict::Case3Mod4Ok, 2.0},
      {"C5", cycle_graph(5), Verdict::Case1Mod4Ok, cycle_delta_closed_form(5)},
      {"paw", paw(), Verdict::Case3Mod4Ok, 0.0},
      {"C4", cycle_graph(4), Verdict::CaseEvenOk, 0.0},
  };
  for (const auto& f : fixtures) {
    const AnalysisReport r = analyze(f.graph, opts.tolerances);
    bool ok = r.verdict == f.expected && r.poly_identity == PolyCheck::Ok;
    if (f.name != "paw") ok = ok && std::abs(r.delta_eigen - f.delta) <= 1e-9;
    line(ok, fmt::format("{}: verdict {} delta_eigen {:.7f} delta_integral {:.7f}", f.name,
                         to_string(r.verdict), r.delta_eigen, r.delta_integral));
  }
  const CycleSweep sweep = sweep_cycles(21, opts);
  line(sweep.summary.ok(), fmt::format("cycle sweep k <= 21: worst deviation {:.3e}",
                                       sweep.summary.worst_closed_form_deviation));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  line(secs < 5.0, fmt::format("runtime {:.2f} s < 5 s", secs));
  return exit_for(all);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Positive and negative square energies of unicyclic graphs", "sqenergy"};
  app.require_subcommand(1, 1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", cfg.out_path, "Write reports to PATH instead of stdout");
    sub->add_option("--rel-tol", cfg.rel_tol, "Quadrature relative tolerance");
    sub->add_option("--abs-tol", cfg.abs_tol, "Quadrature absolute tolerance");
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one graph (or a graph6 file)");
  analyze_cmd->add_option("--in", cfg.in_path, "Input file (default: stdin)");
  analyze_cmd->add_option("--graph", cfg.inline_graph, "Inline graph text");
  analyze_cmd->add_option("--format", cfg.format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  add_output(analyze_cmd);

  auto* cycles_cmd = app.add_subcommand("cycles", "Compare cycles C_3..C_K with the closed form");
  cycles_cmd->add_option("--k-max", cfg.k_max, "Largest cycle length")
      ->check(CLI::Range(3, 2000));
  add_output(cycles_cmd);

  auto* exhaustive_cmd =
      app.add_subcommand("exhaustive", "All labeled unicyclic graphs up to order N (<= 8)");
  exhaustive_cmd->add_option("--n-max", cfg.n_max, "Largest order (default 6)");
  exhaustive_cmd->add_option("--n-min", cfg.n_min, "Smallest order (default 3)");
  add_output(exhaustive_cmd);
  add_workers(exhaustive_cmd);

  auto* random_cmd = app.add_subcommand("random", "Random unicyclic graphs");
  random_cmd->add_option("--n-min", cfg.n_min, "Smallest order (default 3)");
  random_cmd->add_option("--n-max", cfg.n_max, "Largest order (default 30)");
  random_cmd->add_option("--k", cfg.k, "Cycle length: integer, odd or any (default odd)");
  random_cmd->add_option("--trials", cfg.trials, "Number of graphs (default 100)");
  random_cmd->add_option("--seed", cfg.seed, "64-bit seed (default 0)");
  add_output(random_cmd);
  add_workers(random_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Fixture and small cycle checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "usage: sqenergy <analyze|cycles|exhaustive|random|selftest> [options]\n";
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, in, out);
    if (cycles_cmd->parsed()) return cmd_cycles(cfg, out);
    if (exhaustive_cmd->parsed()) return cmd_exhaustive(cfg, out);
    if (random_cmd->parsed()) return cmd_random(cfg, out);
    if (selftest_cmd->parsed()) return cmd_selftest(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LocatedError& e) {
    err << "error: " << e.what() << '\n';
    return e.code == ErrorCode::NoConvergence ? kExitFailure : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::NoConvergence ? kExitFailure : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sqenergy::cli
