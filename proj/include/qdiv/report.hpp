// Copyright 2026 The qdiv Authors
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

// JSON and CSV renderings with stable field names.

#ifndef QDIV_REPORT_HPP
#define QDIV_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdiv/circuit.hpp"
#include "qdiv/cost_models.hpp"
#include "qdiv/crosscheck.hpp"
#include "qdiv/divider.hpp"

namespace qdiv {

inline nlohmann::json to_json(const ResourceReport& r) {
  return {{"toffoli_depth", r.toffoli_depth},
          {"toffoli_count", r.toffoli_count},
          {"qubit_count", r.qubit_count},
          {"gate_total", r.gate_total}};
}

inline nlohmann::json to_json(const cost::Triple& t) {
  return {{"toffoli_depth", t.td},
          {"toffoli_count", t.tc},
          {"qubit_count", t.qc}};
}

inline nlohmann::json to_json(const VerificationReport& v) {
  nlohmann::json j{{"n", v.n},
                   {"cases", v.cases},
                   {"passed", v.passed},
                   {"summary", v.summary()}};
  if (v.first_failure) {
    const auto& f = *v.first_failure;
    j["first_failure"] = {{"dividend", f.dividend},
                          {"divisor", f.divisor},
                          {"expected_quotient", f.expected.quotient},
                          {"expected_remainder", f.expected.remainder},
                          {"quotient", f.got.quotient},
                          {"remainder", f.got.remainder},
                          {"detail", f.detail}};
  }
  return j;
}

inline nlohmann::json to_json(const CrossCheckReport& c) {
  return {{"n", c.n},
          {"kind", to_string(c.kind)},
          {"adder", c.adder},
          {"measured", to_json(c.measured)},
          {"adder_width", c.n + 1},
          {"td_add", c.td_add},
          {"tc_add", c.tc_add},
          {"anc_add", c.anc_add},
          {"formula", to_json(c.formula)},
          {"tc_condadd", c.tc_condadd},
          {"condadd_offset", c.condadd_offset},
          {"tc_condadd_width_n", c.tc_condadd_width_n},
          {"condadd_offset_width_n", c.condadd_offset_width_n},
          {"condadd_blocks", c.condadd_blocks},
          {"tc_matches", c.tc_matches},
          {"td_within", c.td_within},
          {"qc_matches", c.qc_matches}};
}

namespace cost {

inline constexpr const char* kCsvHeader =
    "divider,TD,TC,QC,TD_impr,TC_impr,QC_impr";

/// Comparison table as CSV; improvement cells are "94.06%" or empty.
inline std::string to_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.divider << ',' << r.cost.td << ',' << r.cost.tc << ','
        << r.cost.qc;
    for (int i = 0; i < 3; ++i) {
      out << ',';
      if (r.improvement) out << format_hundredths((*r.improvement)[i]) << '%';
    }
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const std::vector<ComparisonRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"divider", r.divider},
                     {"TD", r.cost.td},
                     {"TC", r.cost.tc},
                     {"QC", r.cost.qc},
                     {"baseline", r.is_baseline}};
    const char* keys[3] = {"TD_impr", "TC_impr", "QC_impr"};
    for (int i = 0; i < 3; ++i) {
      if (r.improvement) {
        j[keys[i]] = format_hundredths((*r.improvement)[i]);
      } else {
        j[keys[i]] = nullptr;
      }
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

inline std::string audit_csv(const std::vector<AuditEntry>& entries) {
  std::ostringstream out;
  out << "row,kind,metric,ceil_real_log,strict_floor\n";
  for (const auto& e : entries) {
    out << e.row_id << ',' << qdiv::to_string(e.kind) << ',' << e.metric
        << ',' << e.ceil_real_log << ',' << e.strict_floor << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const std::vector<AuditEntry>& entries) {
  auto arr = nlohmann::json::array();
  for (const auto& e : entries) {
    arr.push_back({{"row", e.row_id},
                   {"kind", qdiv::to_string(e.kind)},
                   {"metric", e.metric},
                   {"ceil_real_log", e.ceil_real_log},
                   {"strict_floor", e.strict_floor}});
  }
  return arr;
}

}  // namespace cost
}  // namespace qdiv

#endif  // QDIV_REPORT_HPP
