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

#ifndef SQENERGY_REPORT_IO_HPP
#define SQENERGY_REPORT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqenergy/verify.hpp"

namespace sqenergy {

using Json = nlohmann::ordered_json;

Json to_json(const Tolerances& tol);
Json to_json(const AnalysisReport& r);
Json to_json(const CampaignSummary& s);
Json to_json(const CycleRow& row);

// Shortest representation that parses back to the same double.
std::string format_double(double x);

// graph_id,n,k,residue,s_plus,s_minus,delta_eigen,delta_integral,verdict
std::string csv_header();
std::string csv_row(const AnalysisReport& r);

void write_report_table(std::ostream& out, const std::vector<AnalysisReport>& reports);
void write_cycle_table(std::ostream& out, const CycleSweep& sweep);
void write_summary_table(std::ostream& out, const CampaignSummary& s);

}  // namespace sqenergy

#endif  // SQENERGY_REPORT_IO_HPP
