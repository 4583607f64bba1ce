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


#include <gtest/gtest.h>

#include <string>

#include "qdiv/report.hpp"
#include "support.hpp"

namespace qdiv::cost {
namespace {

constexpr auto NR = DividerKind::NonRestoring;
constexpr auto R = DividerKind::Restoring;

TEST(Omega, Examples) {
  EXPECT_EQ(omega(7), 3u);
  EXPECT_EQ(omega(32), 1u);
  EXPECT_EQ(omega(0), 0u);
  static_assert(omega(255) == 8);
}

TEST(Omega, MatchesPopcountToOneMillion) {
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    ASSERT_EQ(omega(n), testing::popcount_oracle(n)) << n;
  }
}

TEST(Omega, Recurrences) {
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    ASSERT_EQ(omega(2 * n), omega(n));
    ASSERT_EQ(omega(2 * n + 1), omega(n) + 1);
  }
}

TEST(Compose, NonRestoringExample) {
  EXPECT_EQ(compose(10, 10, 3, 4, NR), (Triple{53, 53, 21}));
}

TEST(Compose, RestoringExample) {
  EXPECT_EQ(compose(10, 10, 3, 4, R), (Triple{92, 92, 20}));
}

TEST(Compose, DegenerateAdder) {
  EXPECT_EQ(compose(0, 0, 0, 1, NR).td, 4);
  EXPECT_THROW(compose(1, 1, 1, 0, NR), std::invalid_argument);
}

TEST(EvaluateRow, PublishedValues) {
  EXPECT_EQ(evaluate_row("takahashi_combination", 32),
            (Triple{3003, 7489, 152}));
  EXPECT_EQ(evaluate_row("ling", 32), (Triple{802, 12217, 416}));
  EXPECT_EQ(evaluate_row("cuccaro", 32), (Triple{2177, 2177, 134}));
  EXPECT_EQ(evaluate_row("ling", 32, std::nullopt, R),
            (Triple{3809, 15224, 415}));
  EXPECT_EQ(evaluate_row("takahashi_combination", 32, std::nullopt, R),
            (Triple{6010, 10496, 151}));
}

// Polynomial rows need no rounding, so integer arithmetic is an exact oracle.
TEST(EvaluateRow, PolynomialRowsMatchIntegerOracle) {
  for (std::int64_t n = 1; n <= 64; ++n) {
    const std::int64_t n2 = n * n;
    EXPECT_EQ(evaluate_row("vbe", n),
              (Triple{4 * n2 + 5 * n + 1, 4 * n2 + 5 * n + 1, 5 * n + 6}));
    EXPECT_EQ(evaluate_row("cuccaro", n),
              (Triple{2 * n2 + 4 * n + 1, 2 * n2 + 4 * n + 1, 4 * n + 6}));
    EXPECT_EQ(evaluate_row("takahashi_rca", n),
              (Triple{2 * n2 + 4 * n + 1, 2 * n2 + 4 * n + 1, 4 * n + 5}));
    EXPECT_EQ(evaluate_row("wang", n),
              (Triple{n2 + 4 * n + 1, n2 + 4 * n + 1, 5 * n + 6}));
    EXPECT_EQ(evaluate_row("gayathri", n), evaluate_row("wang", n));
    EXPECT_EQ(evaluate_row("gidney", n),
              (Triple{n2 + 4 * n + 1, 2 * n2 + 3 * n + 1, 5 * n + 4}));
  }
}

TEST(EvaluateRow, Errors) {
  EXPECT_THROW(evaluate_row("nope", 8), std::invalid_argument);
  EXPECT_THROW(evaluate_row("higher_radix", 32), std::invalid_argument);
  EXPECT_THROW(evaluate_row("higher_radix", 32, 2u), std::invalid_argument);
  EXPECT_THROW(evaluate_row("higher_radix", 8, 9u), std::invalid_argument);
  EXPECT_NO_THROW(evaluate_row("higher_radix", 8, 8u));
  EXPECT_NO_THROW(evaluate_row("higher_radix", 32, 3u));
  EXPECT_THROW(evaluate_row("ling", 0), std::invalid_argument);
}

TEST(EvaluateRow, StrictFloorReading) {
  // The floor-bracket reading of the Ling depth gives 769, not 802.
  EXPECT_EQ(evaluate_row("ling", 32, std::nullopt, NR, Rounding::StrictFloor)
                .td,
            769);
}

TEST(EvaluateRow, PositiveAndStrictlyMonotone) {
  for (const auto& info : kRows) {
    const unsigned radices[] = {3, 4, 5};
    for (unsigned r : radices) {
      if (!info.needs_radix && r != 3) continue;
      for (auto kind : {NR, R}) {
        Triple prev{0, 0, 0};
        const std::int64_t start = info.needs_radix ? r : 1;
        for (std::int64_t n = start; n <= 64; ++n) {
          const auto radix =
              info.needs_radix ? std::optional<unsigned>(r) : std::nullopt;
          const Triple t = evaluate_row(info.id, n, radix, kind);
          EXPECT_GT(t.td, 0);
          EXPECT_GT(t.tc, 0);
          EXPECT_GT(t.qc, 0);
          if (n > start) {
            EXPECT_GT(t.td, prev.td) << info.id << " n=" << n;
            EXPECT_GT(t.tc, prev.tc) << info.id << " n=" << n;
            EXPECT_GT(t.qc, prev.qc) << info.id << " n=" << n;
          }
          prev = t;
        }
      }
    }
  }
}

TEST(EvaluateRow, RestoringDeltas) {
  for (std::int64_t n : {4, 8, 16, 32}) {
    for (const auto& info : kRows) {
      const auto radix =
          info.needs_radix ? std::optional<unsigned>(3) : std::nullopt;
      const Triple nr = evaluate_row(info.id, n, radix, NR);
      const Triple r = evaluate_row(info.id, n, radix, R);
      EXPECT_EQ(r.tc - nr.tc, 3 * n * n + n - (3 * n + 1)) << info.id;
      EXPECT_EQ(r.td - nr.td, 3 * n * n + n - (3 * n + 1)) << info.id;
      EXPECT_EQ(r.qc - nr.qc, -1) << info.id;
    }
  }
}

TEST(EvaluateRow, AgreesWithMeasuredAdders) {
  for (std::int64_t n = 1; n <= 16; ++n) {
    for (const auto& name : gate_level_adders()) {
      const Fragment f = adder_by_name(name).build(n + 1);
      const auto m = measure(f.circuit);
      for (auto kind : {NR, R}) {
        const Triple want =
            compose(static_cast<std::int64_t>(m.toffoli_depth),
                    static_cast<std::int64_t>(m.toffoli_count),
                    static_cast<std::int64_t>(f.ancilla_count()), n, kind);
        const Triple got = evaluate_row(name, n, std::nullopt, kind);
        EXPECT_EQ(got.tc, want.tc) << name << " n=" << n;
        // The tabulated rows budget more adder ancillas than the built
        // adders use, so QC is compared separately below.
        if (name == "cuccaro") {
          EXPECT_EQ(got.td, want.td);
        }
        EXPECT_GE(got.qc, want.qc);
      }
    }
  }
}

TEST(Percentages, RoundHalfAwayFromZero) {
  EXPECT_EQ(format_hundredths(improvement_hundredths(13506, 802)), "94.06");
  EXPECT_EQ(format_hundredths(improvement_hundredths(93376, 7489)), "91.98");
  EXPECT_EQ(format_hundredths(improvement_hundredths(23996, 152)), "99.37");
  EXPECT_EQ(format_hundredths(improvement_hundredths(100, 100)), "0.00");
  EXPECT_EQ(format_hundredths(improvement_hundredths(100, 150)), "-50.00");
  EXPECT_EQ(format_hundredths(5), "0.05");
}

TEST(ComparisonTable, ThirtyTwoBit) {
  const auto rows = comparison_table(32);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].divider, "Goldschmidt");
  EXPECT_EQ(rows[1].divider, "Newton Raphson");
  EXPECT_TRUE(rows[0].is_baseline);
  auto find = [&](const std::string& label) -> const ComparisonRow& {
    for (const auto& r : rows) {
      if (r.divider == label) return r;
    }
    throw std::runtime_error("missing row " + label);
  };
  const auto& nr_ling = find("Non-restoring+Ling");
  EXPECT_EQ(format_hundredths((*nr_ling.improvement)[0]), "94.06");
  const auto& nr_tak = find("Non-restoring+Takahashi C");
  EXPECT_EQ(format_hundredths((*nr_tak.improvement)[1]), "91.98");
  EXPECT_EQ(format_hundredths((*nr_tak.improvement)[2]), "99.37");
  EXPECT_EQ(find("Restoring+Takahashi C").cost, (Triple{6010, 10496, 151}));
  EXPECT_EQ(find("Restoring+Ling").cost, (Triple{3809, 15224, 415}));
}

TEST(ComparisonTable, NoBaselinesAwayFromThirtyTwo) {
  const auto rows = comparison_table(16);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_FALSE(r.is_baseline);
    EXPECT_FALSE(r.improvement.has_value());
  }
}

TEST(ComparisonTable, CsvShape) {
  const std::string csv = to_csv(comparison_table(32));
  EXPECT_EQ(csv.rfind("divider,TD,TC,QC,TD_impr,TC_impr,QC_impr\n", 0), 0u);
  EXPECT_NE(csv.find("Non-restoring+Ling,802,12217,416,94.06%,86.92%,98.27%"),
            std::string::npos);
  EXPECT_NE(csv.find("Newton Raphson,13506,93376,23996,,,"),
            std::string::npos);
}

TEST(RoundingAudit, ListsDisagreements) {
  const auto audit = rounding_audit(32);
  bool ling_td = false;
  for (const auto& e : audit) {
    EXPECT_NE(e.ceil_real_log, e.strict_floor);
    if (e.row_id == "ling" && e.kind == NR && e.metric == "TD") {
      ling_td = true;
      EXPECT_EQ(e.ceil_real_log, 802);
      EXPECT_EQ(e.strict_floor, 769);
    }
  }
  EXPECT_TRUE(ling_td);
  // Polynomial rows never appear.
  for (const auto& e : audit) EXPECT_NE(e.row_id, "cuccaro");
}

TEST(Rounding, Names) {
  EXPECT_EQ(rounding_from_string("strict-floor"), Rounding::StrictFloor);
  EXPECT_EQ(to_string(Rounding::CeilRealLog), "ceil-real-log");
  EXPECT_THROW(rounding_from_string("round"), std::invalid_argument);
}

}  // namespace
}  // namespace qdiv::cost
