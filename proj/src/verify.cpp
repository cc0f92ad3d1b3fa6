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

#include "sqenergy/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "sqenergy/error.hpp"
#include "sqenergy/matchpoly.hpp"
#include "sqenergy/spectrum.hpp"

namespace sqenergy {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CaseEvenOk: return "CASE_EVEN_OK";
    case Verdict::Case3Mod4Ok: return "CASE_3MOD4_OK";
    case Verdict::Case1Mod4Ok: return "CASE_1MOD4_OK";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::CrossCheckFailure: return "CROSSCHECK_FAILURE";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "UNKNOWN";
}

bool is_ok(Verdict v) {
  return v == Verdict::CaseEvenOk || v == Verdict::Case3Mod4Ok || v == Verdict::Case1Mod4Ok;
}

AnalysisReport analyze(const UnicyclicDecomposition& d, const Tolerances& tol) {
  AnalysisReport r;
  const Graph& g = d.graph;
  const double n = static_cast<double>(g.order());
  r.graph_id = graph_id(g);
  r.n = g.order();
  r.k = d.k;
  r.residue = d.residue;
  r.tolerances = tol;

  const Spectrum eig = eigenvalues_symmetric(g);
  const SquareEnergies se = square_energies(eig);
  r.eigenvalues = eig.eigenvalues;
  r.residual_bound = eig.residual_bound;
  r.s_plus = se.s_plus;
  r.s_minus = se.s_minus;
  r.zero_threshold = se.zero_threshold;
  r.delta_eigen = se.delta;
  r.trace_error = se.s_plus + se.s_minus - 2.0 * n;

  r.char_poly = char_poly_unicyclic(d);
  if (g.order() <= kLeverrierMaxOrder) {
    r.poly_identity = (r.char_poly == char_poly_leverrier(g)) ? PolyCheck::Ok : PolyCheck::Mismatch;
  }

  const bool odd = d.k % 2 != 0;
  if (odd) {
    const ThetaClosedForm cf = ThetaClosedForm::from(d);
    const DeltaIntegral di = delta_integral_detailed(cf, tol.quadrature);
    r.delta_integral = di.value;
    r.integral_evaluated = true;
    r.integral_error_estimate = di.error_estimate;
    r.integral_evaluations = di.evaluations;
    for (double t : tol.theta_grid) {
      r.theta_agreement =
          std::max(r.theta_agreement, std::abs(theta_closed(cf, t) - theta_eigen(eig, t)));
    }
  } else {
    r.delta_integral = delta_even(d.k);
    for (double t : tol.theta_grid) {
      r.theta_agreement = std::max(r.theta_agreement, std::abs(theta_eigen(eig, t)));
    }
  }
  r.delta_crosscheck = std::abs(r.delta_integral - r.delta_eigen);

  r.crosscheck_ok = crosscheck_passes(r, tol);
  r.verdict = decide_verdict(r, tol);
  return r;
}

bool crosscheck_passes(const AnalysisReport& r, const Tolerances& tol) {
  const double n = static_cast<double>(r.n);
  const bool trace_ok = std::abs(r.trace_error) <= tol.trace_rel * n;
  const bool theta_ok = r.theta_agreement <= tol.theta_rel * n;
  const bool delta_ok =
      r.delta_crosscheck <= tol.delta_rel * std::max(1.0, std::abs(r.delta_eigen)) + tol.delta_abs;
  return trace_ok && theta_ok && delta_ok && r.poly_identity != PolyCheck::Mismatch;
}

Verdict decide_verdict(const AnalysisReport& r, const Tolerances& tol) {
  const double n = static_cast<double>(r.n);
  if (r.k % 2 == 0) {
    if (std::abs(r.s_plus - n) > tol.even_rel * n) return Verdict::Violation;
    return r.crosscheck_ok ? Verdict::CaseEvenOk : Verdict::CrossCheckFailure;
  }
  // k = 3 mod 4: s+ > n > s-;  k = 1 mod 4: s+ < n < s-.
  const int expected = r.residue == 3 ? 1 : -1;
  const bool eigen_side = expected > 0 ? (r.s_plus > n && r.s_minus < n && r.delta_eigen > 0)
                                       : (r.s_plus < n && r.s_minus > n && r.delta_eigen < 0);
  const bool integral_side = expected > 0 ? r.delta_integral > 0 : r.delta_integral < 0;
  if (std::abs(r.delta_eigen) <= tol.strict_gap || std::abs(r.delta_integral) <= tol.strict_gap) {
    return Verdict::Indeterminate;
  }
  if (!eigen_side && !integral_side) return Verdict::Violation;
  if (eigen_side != integral_side || !r.crosscheck_ok) return Verdict::CrossCheckFailure;
  return expected > 0 ? Verdict::Case3Mod4Ok : Verdict::Case1Mod4Ok;
}

AnalysisReport analyze(const Graph& g, const Tolerances& tol) {
  return analyze(classify_unicyclic(g), tol);
}

void CampaignSummary::add(const AnalysisReport& r) {
  ++graphs_tested;
  switch (r.verdict) {
    case Verdict::CaseEvenOk: ++case_even; break;
    case Verdict::Case3Mod4Ok: ++case_3mod4; break;
    case Verdict::Case1Mod4Ok: ++case_1mod4; break;
    case Verdict::Violation: ++violations; break;
    case Verdict::CrossCheckFailure: ++crosscheck_failures; break;
    case Verdict::Indeterminate: ++indeterminate; break;
  }
  switch (r.poly_identity) {
    case PolyCheck::Ok: ++poly_checked; break;
    case PolyCheck::Mismatch: ++poly_checked; ++poly_mismatches; break;
    case PolyCheck::NotRun: ++poly_not_run; break;
  }
  worst_theta_agreement = std::max(worst_theta_agreement, r.theta_agreement);
  worst_delta_crosscheck = std::max(worst_delta_crosscheck, r.delta_crosscheck);
  worst_trace_error = std::max(worst_trace_error, std::abs(r.trace_error) / r.n);
  if (r.k % 2 != 0) {
    const double mag = std::abs(r.delta_eigen);
    min_abs_delta_odd = has_odd ? std::min(min_abs_delta_odd, mag) : mag;
    has_odd = true;
  }
}

bool CampaignSummary::ok() const {
  return violations == 0 && crosscheck_failures == 0 && indeterminate == 0 &&
         closed_form_failures == 0;
}

std::vector<AnalysisReport> analyze_batch(const std::vector<Graph>& graphs, const Tolerances& tol,
                                          int workers) {
  std::vector<AnalysisReport> out(graphs.size());
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), graphs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = analyze(graphs[i], tol);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        out[i] = analyze(graphs[i], tol);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void deliver(std::vector<Graph>& batch, const CampaignOptions& opts, CampaignSummary& summary,
             const ReportSink& sink) {
  for (const auto& r : analyze_batch(batch, opts.tolerances, opts.workers)) {
    summary.add(r);
    if (sink) sink(r);
  }
  batch.clear();
}

constexpr std::size_t kBatchSize = 4096;

std::string fmt_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void echo_tolerances(const CampaignOptions& opts, CampaignSummary& s) {
  s.parameters["rel_tol"] = fmt_double(opts.tolerances.quadrature.rel_tol);
  s.parameters["abs_tol"] = fmt_double(opts.tolerances.quadrature.abs_tol);
}

}  // namespace

double cycle_delta_closed_form(int k) {
  if (k % 2 == 0) return 0.0;
  const double value = 2.0 * (1.0 / std::cos(std::numbers::pi / k) - 1.0);
  return k % 4 == 3 ? value : -value;
}

CycleSweep sweep_cycles(int k_max, const CampaignOptions& opts, const ReportSink& sink) {
  if (k_max < 3) throw Error(ErrorCode::BadParameters, "k_max must be >= 3");
  const auto start = Clock::now();
  CycleSweep out;
  out.summary.campaign = "cycles";
  out.summary.parameters["k_max"] = std::to_string(k_max);
  echo_tolerances(opts, out.summary);
  for (int k = 3; k <= k_max; ++k) {
    const AnalysisReport r = analyze(cycle_graph(k), opts.tolerances);
    out.summary.add(r);
    if (sink) sink(r);
    CycleRow row;
    row.k = k;
    row.residue = k % 4;
    row.closed_form = cycle_delta_closed_form(k);
    row.delta_eigen = r.delta_eigen;
    row.delta_integral = r.delta_integral;
    row.deviation_eigen = std::abs(r.delta_eigen - row.closed_form);
    row.deviation_integral = std::abs(r.delta_integral - row.closed_form);
    if (k % 2 != 0) {
      row.ok = row.deviation_eigen <= kCycleEigenTol && row.deviation_integral <= kCycleIntegralTol;
    } else {
      row.ok = std::abs(r.delta_eigen) <= kCycleEigenTol && r.delta_integral == 0.0;
    }
    if (!row.ok) ++out.summary.closed_form_failures;
    out.summary.worst_closed_form_deviation =
        std::max({out.summary.worst_closed_form_deviation, row.deviation_eigen,
                  row.deviation_integral});
    out.rows.push_back(row);
  }
  out.summary.wall_time = seconds_since(start);
  return out;
}

CampaignSummary exhaustive_campaign(int n_max, const CampaignOptions& opts,
                                    const ReportSink& sink, int n_min) {
  if (n_max > LabeledUnicyclicEnumerator::kMaxOrder) {
    throw Error(ErrorCode::TooLarge, "exhaustive campaign limited to n <= " +
                                         std::to_string(LabeledUnicyclicEnumerator::kMaxOrder));
  }
  if (n_min < 3 || n_max < n_min) {
    throw Error(ErrorCode::BadParameters, "need 3 <= n_min <= n_max");
  }
  const auto start = Clock::now();
  CampaignSummary summary;
  summary.campaign = "exhaustive";
  summary.parameters["n_min"] = std::to_string(n_min);
  summary.parameters["n_max"] = std::to_string(n_max);
  echo_tolerances(opts, summary);
  std::vector<Graph> batch;
  for (int n = n_min; n <= n_max; ++n) {
    // Labeled dedup: one bit per possible edge set of K_n.
    std::vector<bool> seen(std::size_t{1} << (n * (n - 1) / 2), false);
    LabeledUnicyclicEnumerator gen(n);
    while (auto g = gen.next()) {
      const std::uint64_t key = edge_mask(*g);
      if (seen[key]) continue;
      seen[key] = true;
      batch.push_back(std::move(*g));
      if (batch.size() == kBatchSize) deliver(batch, opts, summary, sink);
    }
    deliver(batch, opts, summary, sink);
  }
  summary.wall_time = seconds_since(start);
  return summary;
}

std::uint64_t trial_seed(std::uint64_t seed, long trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

void validate(const RandomCampaignConfig& cfg) {
  if (cfg.n_min < 3 || cfg.n_max > kSpectrumMaxOrder || cfg.n_min > cfg.n_max) {
    throw Error(ErrorCode::BadParameters, "n range must lie within [3, " +
                                              std::to_string(kSpectrumMaxOrder) + "]");
  }
  if (cfg.trials < 1) throw Error(ErrorCode::BadParameters, "trials must be >= 1");
  if (cfg.k_policy.kind == KPolicyKind::Fixed &&
      (cfg.k_policy.fixed_k < 3 || cfg.k_policy.fixed_k > cfg.n_max)) {
    throw Error(ErrorCode::BadParameters, "fixed k must satisfy 3 <= k <= n_max");
  }
}

}  // namespace

Graph random_campaign_graph(const RandomCampaignConfig& cfg, long trial) {
  validate(cfg);
  std::mt19937_64 rng(trial_seed(cfg.seed, trial));
  int lo = cfg.n_min;
  if (cfg.k_policy.kind == KPolicyKind::Fixed) lo = std::max(lo, cfg.k_policy.fixed_k);
  const int n = std::uniform_int_distribution<int>(lo, cfg.n_max)(rng);
  int k = 0;
  switch (cfg.k_policy.kind) {
    case KPolicyKind::Fixed:
      k = cfg.k_policy.fixed_k;
      break;
    case KPolicyKind::RandomOdd:
      // Odd k in [3, n]: k = 2i + 1 for i in [1, (n-1)/2].
      k = 2 * std::uniform_int_distribution<int>(1, (n - 1) / 2)(rng) + 1;
      break;
    case KPolicyKind::RandomAny:
      k = std::uniform_int_distribution<int>(3, n)(rng);
      break;
  }
  return random_unicyclic(n, k, rng());
}

CampaignSummary random_campaign(const RandomCampaignConfig& cfg, const CampaignOptions& opts,
                                const ReportSink& sink) {
  validate(cfg);
  const auto start = Clock::now();
  CampaignSummary summary;
  summary.campaign = "random";
  summary.parameters["n_min"] = std::to_string(cfg.n_min);
  summary.parameters["n_max"] = std::to_string(cfg.n_max);
  summary.parameters["trials"] = std::to_string(cfg.trials);
  summary.parameters["seed"] = std::to_string(cfg.seed);
  switch (cfg.k_policy.kind) {
    case KPolicyKind::Fixed: summary.parameters["k"] = std::to_string(cfg.k_policy.fixed_k); break;
    case KPolicyKind::RandomOdd: summary.parameters["k"] = "odd"; break;
    case KPolicyKind::RandomAny: summary.parameters["k"] = "any"; break;
  }
  echo_tolerances(opts, summary);
  std::vector<Graph> batch;
  for (long trial = 0; trial < cfg.trials; ++trial) {
    batch.push_back(random_campaign_graph(cfg, trial));
    if (batch.size() == kBatchSize) deliver(batch, opts, summary, sink);
  }
  deliver(batch, opts, summary, sink);
  summary.wall_time = seconds_since(start);
  return summary;
}

}  // namespace sqenergy
