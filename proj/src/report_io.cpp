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

#include "sqenergy/report_io.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <charconv>
#include <ostream>

namespace sqenergy {

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

namespace {

std::string_view poly_check_name(PolyCheck p) {
  switch (p) {
    case PolyCheck::Ok: return "ok";
    case PolyCheck::Mismatch: return "mismatch";
    case PolyCheck::NotRun: return "not-run";
  }
  return "unknown";
}

}  // namespace

Json to_json(const Tolerances& tol) {
  return Json{
      {"strict_gap", tol.strict_gap},
      {"even_rel", tol.even_rel},
      {"trace_rel", tol.trace_rel},
      {"theta_rel", tol.theta_rel},
      {"delta_rel", tol.delta_rel},
      {"delta_abs", tol.delta_abs},
      {"rel_tol", tol.quadrature.rel_tol},
      {"abs_tol", tol.quadrature.abs_tol},
      {"max_depth", tol.quadrature.max_depth},
      {"theta_grid", tol.theta_grid},
  };
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["k"] = r.k;
  j["residue"] = r.residue;
  j["s_plus"] = r.s_plus;
  j["s_minus"] = r.s_minus;
  j["delta_eigen"] = r.delta_eigen;
  j["delta_integral"] = r.delta_integral;
  j["delta_integral_method"] = r.integral_evaluated ? "coulson-quadrature" : "exact-even";
  j["integral_error_estimate"] = r.integral_error_estimate;
  j["delta_crosscheck"] = r.delta_crosscheck;
  j["trace_error"] = r.trace_error;
  j["zero_threshold"] = r.zero_threshold;
  j["residual_bound"] = r.residual_bound;
  if (r.poly_identity == PolyCheck::NotRun) {
    j["poly_identity_ok"] = nullptr;
  } else {
    j["poly_identity_ok"] = r.poly_identity == PolyCheck::Ok;
  }
  j["poly_identity"] = poly_check_name(r.poly_identity);
  j["theta_agreement"] = r.theta_agreement;
  j["crosscheck_ok"] = r.crosscheck_ok;
  j["verdict"] = to_string(r.verdict);
  j["eigenvalues"] = r.eigenvalues;
  j["char_poly"] = r.char_poly.to_decimal_strings();
  j["tolerances"] = to_json(r.tolerances);
  return j;
}

Json to_json(const CampaignSummary& s) {
  Json j;
  j["campaign"] = s.campaign;
  j["graphs_tested"] = s.graphs_tested;
  j["violations"] = s.violations;
  j["crosscheck_failures"] = s.crosscheck_failures;
  j["indeterminate"] = s.indeterminate;
  j["closed_form_failures"] = s.closed_form_failures;
  j["case_even"] = s.case_even;
  j["case_3mod4"] = s.case_3mod4;
  j["case_1mod4"] = s.case_1mod4;
  j["poly_checked"] = s.poly_checked;
  j["poly_mismatches"] = s.poly_mismatches;
  j["poly_not_run"] = s.poly_not_run;
  j["worst_theta_agreement"] = s.worst_theta_agreement;
  j["worst_delta_crosscheck"] = s.worst_delta_crosscheck;
  j["worst_trace_error"] = s.worst_trace_error;
  j["worst_closed_form_deviation"] = s.worst_closed_form_deviation;
  if (s.has_odd) {
    j["min_abs_delta_odd"] = s.min_abs_delta_odd;
  } else {
    j["min_abs_delta_odd"] = nullptr;
  }
  j["ok"] = s.ok();
  j["wall_time"] = s.wall_time;
  Json params = Json::object();
  for (const auto& [key, value] : s.parameters) params[key] = value;
  j["parameters"] = params;
  return j;
}

Json to_json(const CycleRow& row) {
  return Json{{"k", row.k},
              {"residue", row.residue},
              {"closed_form", row.closed_form},
              {"delta_eigen", row.delta_eigen},
              {"delta_integral", row.delta_integral},
              {"deviation_eigen", row.deviation_eigen},
              {"deviation_integral", row.deviation_integral},
              {"ok", row.ok}};
}

std::string csv_header() {
  return "graph_id,n,k,residue,s_plus,s_minus,delta_eigen,delta_integral,verdict";
}

std::string csv_row(const AnalysisReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{}", r.graph_id, r.n, r.k, r.residue,
                     format_double(r.s_plus), format_double(r.s_minus),
                     format_double(r.delta_eigen), format_double(r.delta_integral),
                     to_string(r.verdict));
}

void write_report_table(std::ostream& out, const std::vector<AnalysisReport>& reports) {
  fmt::print(out, "{:>5} {:>5} {:>3} {:>14} {:>14} {:>14} {:>14}  {}\n", "n", "k", "k%4", "s+",
             "s-", "delta_eigen", "delta_integral", "verdict");
  for (const auto& r : reports) {
    fmt::print(out, "{:>5} {:>5} {:>3} {:>14.6f} {:>14.6f} {:>14.7f} {:>14.7f}  {}\n", r.n, r.k,
               r.residue, r.s_plus, r.s_minus, r.delta_eigen, r.delta_integral,
               to_string(r.verdict));
  }
}

void write_cycle_table(std::ostream& out, const CycleSweep& sweep) {
  fmt::print(out, "{:>5} {:>3} {:>14} {:>14} {:>14} {:>10} {:>10}  {}\n", "k", "k%4",
             "closed_form", "delta_eigen", "delta_integral", "dev_eigen", "dev_integ", "status");
  for (const auto& row : sweep.rows) {
    if (row.k % 2 == 0) continue;
    fmt::print(out, "{:>5} {:>3} {:>14.7f} {:>14.7f} {:>14.7f} {:>10.2e} {:>10.2e}  {}\n", row.k,
               row.residue, row.closed_form, row.delta_eigen, row.delta_integral,
               row.deviation_eigen, row.deviation_integral, row.ok ? "ok" : "FAIL");
  }
  long even_ok = 0;
  long even_total = 0;
  for (const auto& row : sweep.rows) {
    if (row.k % 2 == 0) {
      ++even_total;
      even_ok += row.ok ? 1 : 0;
    }
  }
  fmt::print(out, "even k: {}/{} with |delta| <= 1e-9\n", even_ok, even_total);
}

void write_summary_table(std::ostream& out, const CampaignSummary& s) {
  fmt::print(out, "campaign              {}\n", s.campaign);
  for (const auto& [key, value] : s.parameters) fmt::print(out, "  {:<20}{}\n", key, value);
  fmt::print(out, "graphs_tested         {}\n", s.graphs_tested);
  fmt::print(out, "  CASE_EVEN_OK        {}\n", s.case_even);
  fmt::print(out, "  CASE_3MOD4_OK       {}\n", s.case_3mod4);
  fmt::print(out, "  CASE_1MOD4_OK       {}\n", s.case_1mod4);
  fmt::print(out, "violations            {}\n", s.violations);
  fmt::print(out, "crosscheck_failures   {}\n", s.crosscheck_failures);
  fmt::print(out, "indeterminate         {}\n", s.indeterminate);
  fmt::print(out, "poly identity         {} checked, {} mismatches, {} not run\n", s.poly_checked,
             s.poly_mismatches, s.poly_not_run);
  fmt::print(out, "worst theta agreement {:.3e}\n", s.worst_theta_agreement);
  fmt::print(out, "worst delta crosscheck {:.3e}\n", s.worst_delta_crosscheck);
  fmt::print(out, "worst trace error/n   {:.3e}\n", s.worst_trace_error);
  if (s.has_odd) fmt::print(out, "min |delta| (odd k)   {:.7e}\n", s.min_abs_delta_odd);
  fmt::print(out, "wall time             {:.2f} s\n", s.wall_time);
  fmt::print(out, "result                {}\n", s.ok() ? "PASS" : "FAIL");
}

}  // namespace sqenergy
