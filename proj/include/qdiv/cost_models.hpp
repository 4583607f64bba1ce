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

// Closed-form Toffoli depth / Toffoli count / qubit count of n-bit slow
// dividers built from published adders, and the 32-bit comparison against
// the Goldschmidt and Newton-Raphson dividers.
//
// Rounding conventions:
//   CeilRealLog  every log is the real base-2 log, omega() of a fractional
//                argument takes the ceiling, fractions stay real, and each
//                final metric is rounded up. This reproduces the published
//                32-bit figures.
//   StrictFloor  every log is floor(log2), omega() and fractions take the
//                floor, and each final metric is rounded down.

#ifndef QDIV_COST_MODELS_HPP
#define QDIV_COST_MODELS_HPP

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdiv/divider.hpp"

namespace qdiv::cost {

/// n - sum_{y>=1} floor(n / 2^y), i.e. the number of ones in n.
constexpr std::uint64_t omega(std::uint64_t n) {
  std::uint64_t sum = 0;
  for (std::uint64_t p = n >> 1; p > 0; p >>= 1) sum += p;
  return n - sum;
}

enum class Rounding { CeilRealLog, StrictFloor };

inline std::string_view to_string(Rounding r) {
  return r == Rounding::CeilRealLog ? "ceil-real-log" : "strict-floor";
}

inline Rounding rounding_from_string(std::string_view s) {
  if (s == "ceil-real-log") return Rounding::CeilRealLog;
  if (s == "strict-floor") return Rounding::StrictFloor;
  throw std::invalid_argument("unknown rounding mode '" + std::string(s) +
                              "'");
}

struct Triple {
  std::int64_t td = 0;
  std::int64_t tc = 0;
  std::int64_t qc = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Real-valued metrics before the final rounding step.
struct RealTriple {
  double td = 0;
  double tc = 0;
  double qc = 0;
};

/// Per-adder costs at width n+1 (TD_add, TC_add, Anc_add).
struct AdderCosts {
  double td = 0;
  double tc = 0;
  double anc = 0;
};

inline RealTriple compose_real(const AdderCosts& add, double n,
                               DividerKind kind) {
  if (kind == DividerKind::NonRestoring) {
    return {n * add.td + 3 * n + 1, n * add.tc + 3 * n + 1,
            4 * n + 2 + add.anc};
  }
  return {n * add.td + 3 * n * n + n, n * add.tc + 3 * n * n + n,
          4 * n + 1 + add.anc};
}

/// Divider cost from measured or tabulated adder costs:
///   non-restoring  (n TD_add + 3n + 1,  n TC_add + 3n + 1,  4n + 2 + Anc)
///   restoring      (n TD_add + 3n^2 + n, n TC_add + 3n^2 + n, 4n + 1 + Anc)
inline Triple compose(std::int64_t td_add, std::int64_t tc_add,
                      std::int64_t anc_add, std::int64_t n, DividerKind kind) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (kind == DividerKind::NonRestoring) {
    return {n * td_add + 3 * n + 1, n * tc_add + 3 * n + 1,
            4 * n + 2 + anc_add};
  }
  return {n * td_add + 3 * n * n + n, n * tc_add + 3 * n * n + n,
          4 * n + 1 + anc_add};
}

struct RowInfo {
  std::string_view id;
  std::string_view label;
  int year;
  bool needs_radix;
};

inline constexpr std::array<RowInfo, 11> kRows{{
    {"vbe", "VBE RCA", 1995, false},
    {"cuccaro", "Cuccaro RCA", 2004, false},
    {"draper_cla", "Draper In-place CLA", 2004, false},
    {"takahashi_low_ancilla", "Takahashi Low-ancilla Adder", 2008, false},
    {"takahashi_rca", "Takahashi RCA", 2009, false},
    {"takahashi_combination", "Takahashi Combination", 2009, false},
    {"wang", "Wang RCA", 2016, false},
    {"gidney", "Gidney RCA", 2018, false},
    {"gayathri", "Gayathri RCA", 2021, false},
    {"higher_radix", "Higher Radix Adder", 2023, true},
    {"ling", "Quantum Ling Adder", 2023, false},
}};

inline const RowInfo& row_info(std::string_view id) {
  for (const auto& r : kRows) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("unknown cost row '" + std::string(id) + "'");
}

namespace detail {

struct Ops {
  Rounding mode;

  double log(double x) const {
    const double l = std::log2(x);
    return mode == Rounding::StrictFloor ? std::floor(l) : l;
  }
  double frac(double x) const {
    return mode == Rounding::StrictFloor ? std::floor(x) : x;
  }
  double w(double x) const {
    const double k = mode == Rounding::StrictFloor ? std::floor(x)
                                                   : std::ceil(x - 1e-12);
    return static_cast<double>(omega(static_cast<std::uint64_t>(k)));
  }
  std::int64_t finish(double x) const {
    // Tolerance absorbs floating error on values that are exact integers.
    constexpr double eps = 1e-9;
    return static_cast<std::int64_t>(mode == Rounding::StrictFloor
                                         ? std::floor(x + eps)
                                         : std::ceil(x - eps));
  }
};

// Non-restoring divider cost, before rounding.
inline RealTriple nonrestoring_row(std::string_view id, double n,
                                   std::optional<unsigned> radix,
                                   const Ops& o) {
  const double n2 = n * n;
  if (id == "vbe") return {4 * n2 + 5 * n + 1, 4 * n2 + 5 * n + 1, 5 * n + 6};
  if (id == "cuccaro") {
    return {2 * n2 + 4 * n + 1, 2 * n2 + 4 * n + 1, 4 * n + 6};
  }
  if (id == "draper_cla") {
    const auto nn = static_cast<std::uint64_t>(n);
    return {11 * n + n * o.log(n) + n * o.log(n + 1) + n * o.log(n / 3) +
                n * o.log((n + 1) / 3) + 1,
            10 * n2 - 3 * n * static_cast<double>(omega(nn)) -
                3 * n * static_cast<double>(omega(nn + 1)) -
                3 * n * o.log(n) - 3 * n * o.log(n + 1) + 6 * n + 1,
            6 * n - static_cast<double>(omega(nn + 1)) - o.log(n + 1) + 6};
  }
  if (id == "takahashi_low_ancilla") {
    return {30 * n * o.log(n + 1) + 3 * n + 1, 28 * n2 + 31 * n + 1,
            4 * n + o.frac((3 * n + 3) / o.log(n + 1)) + 4};
  }
  if (id == "takahashi_rca") {
    return {2 * n2 + 4 * n + 1, 2 * n2 + 4 * n + 1, 4 * n + 5};
  }
  if (id == "takahashi_combination") {
    return {18 * n * o.log(n + 1) + 3 * n + 1, 7 * n2 + 10 * n + 1,
            4 * n + o.frac((3 * n + 3) / o.log(n + 1)) + 4};
  }
  if (id == "wang" || id == "gayathri") {
    return {n2 + 4 * n + 1, n2 + 4 * n + 1, 5 * n + 6};
  }
  if (id == "gidney") return {n2 + 4 * n + 1, 2 * n2 + 3 * n + 1, 5 * n + 4};
  if (id == "higher_radix") {
    const double r = *radix;
    const auto nn = static_cast<std::uint64_t>(n);
    const double n2_mod_r = static_cast<double>((nn * nn) % *radix);
    return {4 * n * o.log(n + 1) + 3 * r * n - 2 * n * o.log(r) -
                2 * n * o.log(3 * r) + 2 * n * o.log(r - 2) + 5 * n + 1,
            8 * n2 - o.frac(n * (n + 1) / r) - n2_mod_r -
                3 * n * o.w((n + 1) / r) - 3 * n * o.log(n + 1) +
                3 * n * o.log(r) + 8 * n + 1,
            6 * n - o.log(n + 1) + o.frac((n + 1) / r) - o.w((n + 1) / r) +
                o.log(r) + 5};
  }
  if (id == "ling") {
    const double h = (n + 1) / 2;
    return {12 * n + 2 * n * o.log(h) + 2 * n * o.log((n + 1) / 6) + 1,
            13 * n2 - 6 * n * o.w(h) - 6 * n * o.log(h) + 2 * n + 1,
            14 * n - 6 * o.w(h) - 6 * o.log(h) + 4};
  }
  throw std::invalid_argument("unknown cost row '" + std::string(id) + "'");
}

}  // namespace detail

/// Adder costs implied by a row, recovered from its non-restoring closed form.
inline AdderCosts adder_costs_real(std::string_view row_id, std::int64_t n,
                                   std::optional<unsigned> radix = std::nullopt,
                                   Rounding rounding = Rounding::CeilRealLog) {
  const auto& info = row_info(row_id);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (info.needs_radix) {
    if (!radix) throw std::invalid_argument("row '" + std::string(row_id) +
                                            "' requires a radix");
    if (*radix <= 2 || *radix > static_cast<std::uint64_t>(n)) {
      throw std::invalid_argument("radix must satisfy 2 < r <= n");
    }
  }
  const double nd = static_cast<double>(n);
  const RealTriple nr = detail::nonrestoring_row(
      row_id, nd, info.needs_radix ? radix : std::nullopt,
      detail::Ops{rounding});
  return {(nr.td - 3 * nd - 1) / nd, (nr.tc - 3 * nd - 1) / nd,
          nr.qc - 4 * nd - 2};
}

/// Divider cost for one table row. The restoring figures apply the restoring
/// composition to the adder costs the row implies.
inline Triple evaluate_row(std::string_view row_id, std::int64_t n,
                           std::optional<unsigned> radix = std::nullopt,
                           DividerKind kind = DividerKind::NonRestoring,
                           Rounding rounding = Rounding::CeilRealLog) {
  const AdderCosts add = adder_costs_real(row_id, n, radix, rounding);
  const RealTriple t = compose_real(add, static_cast<double>(n), kind);
  const detail::Ops o{rounding};
  return {o.finish(t.td), o.finish(t.tc), o.finish(t.qc)};
}

struct Baseline {
  std::string_view name;
  Triple cost;  // at n = 32
};

inline constexpr std::int64_t kBaselineWidth = 32;
inline constexpr Baseline kGoldschmidt{"Goldschmidt", {17850, 117187, 30008}};
inline constexpr Baseline kNewtonRaphson{"Newton Raphson",
                                         {13506, 93376, 23996}};
inline constexpr std::array<Baseline, 2> kBaselines{kGoldschmidt,
                                                    kNewtonRaphson};

/// 100 (baseline - ours) / baseline in hundredths of a percent, rounded half
/// away from zero.
constexpr std::int64_t improvement_hundredths(std::int64_t baseline,
                                              std::int64_t ours) {
  const std::int64_t num = 20000 * (baseline - ours);
  const std::int64_t den = 2 * baseline;
  return num >= 0 ? (num + baseline) / den : -((-num + baseline) / den);
}

/// "94.06" style rendering of improvement_hundredths.
inline std::string format_hundredths(std::int64_t h) {
  const bool neg = h < 0;
  if (neg) h = -h;
  std::string frac = std::to_string(h % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return (neg ? "-" : "") + std::to_string(h / 100) + "." + frac;
}

struct Selection {
  DividerKind kind;
  std::string_view row_id;
  std::optional<unsigned> radix;
};

inline std::string divider_label(const Selection& s) {
  std::string lead =
      s.kind == DividerKind::NonRestoring ? "Non-restoring+" : "Restoring+";
  if (s.row_id == "ling") return lead + "Ling";
  if (s.row_id == "takahashi_combination") return lead + "Takahashi C";
  return lead + std::string(row_info(s.row_id).label);
}

/// The four proposed dividers of the published 32-bit comparison.
inline std::vector<Selection> default_selections() {
  return {{DividerKind::Restoring, "ling", std::nullopt},
          {DividerKind::Restoring, "takahashi_combination", std::nullopt},
          {DividerKind::NonRestoring, "ling", std::nullopt},
          {DividerKind::NonRestoring, "takahashi_combination", std::nullopt}};
}

struct ComparisonRow {
  std::string divider;
  Triple cost;
  bool is_baseline = false;
  /// Hundredths of a percent vs. Newton-Raphson; only at n = 32.
  std::optional<std::array<std::int64_t, 3>> improvement;
};

/// Baselines (only at n = 32) followed by the selected dividers.
inline std::vector<ComparisonRow> comparison_table(
    std::int64_t n, const std::vector<Selection>& selections,
    Rounding rounding = Rounding::CeilRealLog) {
  std::vector<ComparisonRow> rows;
  const bool at_baseline = n == kBaselineWidth;
  if (at_baseline) {
    for (const auto& b : kBaselines) {
      rows.push_back({std::string(b.name), b.cost, true, std::nullopt});
    }
  }
  const Triple& ref = kNewtonRaphson.cost;
  for (const auto& s : selections) {
    ComparisonRow row{divider_label(s),
                      evaluate_row(s.row_id, n, s.radix, s.kind, rounding),
                      false, std::nullopt};
    if (at_baseline) {
      row.improvement = {{improvement_hundredths(ref.td, row.cost.td),
                          improvement_hundredths(ref.tc, row.cost.tc),
                          improvement_hundredths(ref.qc, row.cost.qc)}};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<ComparisonRow> comparison_table(std::int64_t n) {
  return comparison_table(n, default_selections());
}

/// One metric where the two rounding conventions disagree.
struct AuditEntry {
  std::string row_id;
  DividerKind kind;
  std::string metric;  // "TD" | "TC" | "QC"
  std::int64_t ceil_real_log;
  std::int64_t strict_floor;
};

/// Every (row, kind, metric) at width n whose value depends on the rounding
/// convention. The radix row is included only when `radix` is given.
inline std::vector<AuditEntry> rounding_audit(
    std::int64_t n, std::optional<unsigned> radix = std::nullopt) {
  std::vector<AuditEntry> out;
  for (const auto& info : kRows) {
    if (info.needs_radix && !radix) continue;
    for (auto kind : {DividerKind::NonRestoring, DividerKind::Restoring}) {
      const auto r = info.needs_radix ? radix : std::nullopt;
      const Triple a =
          evaluate_row(info.id, n, r, kind, Rounding::CeilRealLog);
      const Triple b =
          evaluate_row(info.id, n, r, kind, Rounding::StrictFloor);
      auto add = [&](const char* metric, std::int64_t x, std::int64_t y) {
        if (x != y) out.push_back({std::string(info.id), kind, metric, x, y});
      };
      add("TD", a.td, b.td);
      add("TC", a.tc, b.tc);
      add("QC", a.qc, b.qc);
    }
  }
  return out;
}

}  // namespace qdiv::cost

#endif  // QDIV_COST_MODELS_HPP
