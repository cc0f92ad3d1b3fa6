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

#ifndef SQENERGY_VERIFY_HPP
#define SQENERGY_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sqenergy/coulson.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/intpoly.hpp"

namespace sqenergy {

enum class Verdict {
  CaseEvenOk,
  Case3Mod4Ok,
  Case1Mod4Ok,
  Violation,
  // The two delta pipelines (or another identity) disagree: an artifact bug,
  // not a counterexample.
  CrossCheckFailure,
  // |delta| at or below the strict-inequality margin.
  Indeterminate,
};

std::string_view to_string(Verdict v);
bool is_ok(Verdict v);

enum class PolyCheck { Ok, Mismatch, NotRun };

struct Tolerances {
  double strict_gap = 1e-9;   // |delta| must exceed this for odd k
  double even_rel = 1e-8;     // |s+ - n| <= even_rel * n for even k
  double trace_rel = 1e-8;    // |s+ + s- - 2n| <= trace_rel * n
  double theta_rel = 1e-10;   // max |theta_closed - theta_eigen| <= theta_rel * n
  double delta_rel = 1e-6;    // |d_int - d_eig| <= delta_rel * max(1,|d|) + delta_abs
  double delta_abs = 1e-8;
  QuadratureParams quadrature;
  std::vector<double> theta_grid{0.1, 0.5, 1.0, 2.0, 10.0};
};

struct AnalysisReport {
  std::string graph_id;
  int n = 0;
  int k = 0;
  int residue = 0;
  double s_plus = 0.0;
  double s_minus = 0.0;
  double zero_threshold = 0.0;
  double delta_eigen = 0.0;
  // Exact 0 (integral_evaluated = false) for even k.
  double delta_integral = 0.0;
  bool integral_evaluated = false;
  double integral_error_estimate = 0.0;
  long integral_evaluations = 0;
  double delta_crosscheck = 0.0;  // |delta_integral - delta_eigen|
  double trace_error = 0.0;       // s+ + s- - 2n
  double residual_bound = 0.0;
  PolyCheck poly_identity = PolyCheck::NotRun;
  // For even k the closed form is identically 0 and theta_eigen is compared
  // against it.
  double theta_agreement = 0.0;
  bool crosscheck_ok = true;
  Verdict verdict = Verdict::Violation;
  std::vector<double> eigenvalues;
  IntPoly char_poly;  // mu_G - 2 mu_F
  Tolerances tolerances;
};

AnalysisReport analyze(const UnicyclicDecomposition& d, const Tolerances& tol = {});

// Trace identity, theta agreement, delta agreement and (when run) the exact
// polynomial identity, all within `tol`.
bool crosscheck_passes(const AnalysisReport& r, const Tolerances& tol);
// Verdict from the already-populated numeric fields and crosscheck_ok.
Verdict decide_verdict(const AnalysisReport& r, const Tolerances& tol);
// Classifies first; WrongEdgeCount / NotConnected propagate.
AnalysisReport analyze(const Graph& g, const Tolerances& tol = {});

struct CampaignSummary {
  std::string campaign;
  long graphs_tested = 0;
  long violations = 0;
  long crosscheck_failures = 0;
  long indeterminate = 0;
  long closed_form_failures = 0;
  long poly_checked = 0;
  long poly_mismatches = 0;
  long poly_not_run = 0;
  long case_even = 0;
  long case_3mod4 = 0;
  long case_1mod4 = 0;
  double worst_theta_agreement = 0.0;
  double worst_delta_crosscheck = 0.0;
  double worst_trace_error = 0.0;       // relative to n
  double worst_closed_form_deviation = 0.0;
  double min_abs_delta_odd = 0.0;       // smallest |delta_eigen| over odd k
  bool has_odd = false;
  double wall_time = 0.0;
  std::map<std::string, std::string> parameters;

  void add(const AnalysisReport& r);
  // No violations, cross-check failures, indeterminate verdicts or
  // closed-form deviations.
  bool ok() const;
};

using ReportSink = std::function<void(const AnalysisReport&)>;

struct CampaignOptions {
  Tolerances tolerances;
  int workers = 1;  // 0 = hardware concurrency
};

struct CycleRow {
  int k = 0;
  int residue = 0;
  double closed_form = 0.0;  // +-2(sec(pi/k) - 1), 0 for even k
  double delta_eigen = 0.0;
  double delta_integral = 0.0;
  double deviation_eigen = 0.0;
  double deviation_integral = 0.0;
  bool ok = false;
};

struct CycleSweep {
  CampaignSummary summary;
  std::vector<CycleRow> rows;
};

inline constexpr double kCycleEigenTol = 1e-9;
inline constexpr double kCycleIntegralTol = 1e-6;

// +2(sec(pi/k) - 1) for k = 3 mod 4, -2(sec(pi/k) - 1) for k = 1 mod 4,
// 0 for even k.
double cycle_delta_closed_form(int k);

// C_3 .. C_{k_max}: odd k against the closed form (eigen within 1e-9,
// integral within 1e-6); even k must give |delta| <= 1e-9.
CycleSweep sweep_cycles(int k_max, const CampaignOptions& opts = {},
                        const ReportSink& sink = {});

// Every deduplicated labeled unicyclic graph with n_min <= n <= n_max <= 8.
CampaignSummary exhaustive_campaign(int n_max, const CampaignOptions& opts = {},
                                    const ReportSink& sink = {}, int n_min = 3);

enum class KPolicyKind { Fixed, RandomOdd, RandomAny };
struct KPolicy {
  KPolicyKind kind = KPolicyKind::RandomOdd;
  int fixed_k = 0;
};

struct RandomCampaignConfig {
  int n_min = 3;
  int n_max = 30;
  KPolicy k_policy;
  long trials = 100;
  std::uint64_t seed = 0;
};

// Per-trial sub-seed from splitmix64(seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, long trial);
// The graph random_campaign analyzes for a given trial; throws BadParameters.
Graph random_campaign_graph(const RandomCampaignConfig& cfg, long trial);

CampaignSummary random_campaign(const RandomCampaignConfig& cfg, const CampaignOptions& opts = {},
                                const ReportSink& sink = {});

// Analyzes graphs across `workers` threads, delivering reports to the sink
// in input order.
std::vector<AnalysisReport> analyze_batch(const std::vector<Graph>& graphs,
                                          const Tolerances& tol, int workers);

}  // namespace sqenergy

#endif  // SQENERGY_VERIFY_HPP
