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

#ifndef QDIV_CROSSCHECK_HPP
#define QDIV_CROSSCHECK_HPP

#include <cstdint>
#include <string>

#include "qdiv/adders.hpp"
#include "qdiv/circuit.hpp"
#include "qdiv/cost_models.hpp"
#include "qdiv/divider.hpp"

namespace qdiv {

/// Measured divider metrics next to the closed-form composition evaluated
/// with the measured adder costs at width n+1.
struct CrossCheckReport {
  std::size_t n = 0;
  DividerKind kind = DividerKind::NonRestoring;
  std::string adder;

  ResourceReport measured;
  ResourceReport adder_measured;  // the plain adder at width n+1
  std::int64_t td_add = 0;
  std::int64_t tc_add = 0;
  std::int64_t anc_add = 0;

  cost::Triple formula;  // composition with the measured adder costs

  /// Toffoli count of one conditional adder, measured at width n+1 and,
  /// for the alternative reading of the correction term, at width n.
  std::int64_t tc_condadd = 0;
  std::int64_t tc_condadd_width_n = 0;
  /// tc_condadd minus 3n+1: how far the correction block is from the
  /// closed form's per-block term. The whole-circuit offset is this times
  /// the number of conditional adders.
  std::int64_t condadd_offset = 0;
  std::int64_t condadd_offset_width_n = 0;
  std::int64_t condadd_blocks = 0;

  bool tc_matches = false;  // measured TC == formula TC + blocks * offset
  bool td_within = false;   // measured TD <= formula TD
  bool qc_matches = false;  // measured QC == formula QC

  bool ok() const { return tc_matches && td_within && qc_matches; }
};

inline CrossCheckReport crosscheck_counts(const Divider& div,
                                          const AdderBuilder& adder) {
  const std::size_t n = div.layout.n;
  const std::int64_t ni = static_cast<std::int64_t>(n);
  CrossCheckReport rep;
  rep.n = n;
  rep.kind = div.layout.kind;
  rep.adder = adder.name();
  rep.measured = measure(div.circuit);

  const Fragment add = adder.build(n + 1);
  rep.adder_measured = measure(add.circuit);
  rep.td_add = static_cast<std::int64_t>(rep.adder_measured.toffoli_depth);
  rep.tc_add = static_cast<std::int64_t>(rep.adder_measured.toffoli_count);
  rep.anc_add = static_cast<std::int64_t>(add.ancilla_count());
  rep.formula = cost::compose(rep.td_add, rep.tc_add, rep.anc_add, ni,
                              div.layout.kind);

  rep.tc_condadd = static_cast<std::int64_t>(
      measure(build_cond_add(n + 1).circuit).toffoli_count);
  rep.tc_condadd_width_n = static_cast<std::int64_t>(
      measure(build_cond_add(n).circuit).toffoli_count);
  rep.condadd_offset = rep.tc_condadd - (3 * ni + 1);
  rep.condadd_offset_width_n = rep.tc_condadd_width_n - (3 * ni + 1);
  rep.condadd_blocks =
      static_cast<std::int64_t>(div.layout.count(BlockKind::CondAdd));

  const auto tc = static_cast<std::int64_t>(rep.measured.toffoli_count);
  const auto td = static_cast<std::int64_t>(rep.measured.toffoli_depth);
  const auto qc = static_cast<std::int64_t>(rep.measured.qubit_count);
  rep.tc_matches =
      tc == rep.formula.tc + rep.condadd_blocks * rep.condadd_offset;
  rep.td_within = td <= rep.formula.td;
  rep.qc_matches = qc == rep.formula.qc;
  return rep;
}

inline CrossCheckReport crosscheck_counts(const DividerParams& params) {
  return crosscheck_counts(build_divider(params), params.adder);
}

}  // namespace qdiv

#endif  // QDIV_CROSSCHECK_HPP
