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

// Slow (non-restoring / restoring) integer dividers over a pluggable adder.
//
// Wire layout for operand width n, all blocks of width m = n + 1:
//
//   rq[0..2n)    partial remainder / quotient array. rq[0..n) holds the
//                dividend on input and the remainder on output.
//   d[0..n]      divisor, plus a constant-zero top bit d[n].
//   quot[0..n)   one fresh wire per iteration. Iteration i writes its
//                block's carry-out into quot[n-i], which is exactly quotient
//                bit n-i.
//   anc          sub_cin: borrow-in of every subtractor block
//                cond_cin: carry-in of every conditional adder
//                restore_ctrl: (non-restoring only) control of the final
//                conditional adder
//                work...: the adder's internal ancillas, shared by all blocks
//
// The left shift of (R, Q) is never performed. Iteration i operates on the
// window rq[n-i .. 2n-i], one position below the previous window, so the
// bit shifted in is rq[n-i] and the bit shifted out is the previous window's
// top (sign) wire.
//
// Why carry-out equals the quotient bit: with R' the shifted remainder,
// subtraction computes R' + ~D + 1 and overflows iff R' >= D; addition of a
// negative R' (held mod 2^m) overflows iff R' + D >= 0. Either way the
// overflow bit is 1 iff the new remainder is non-negative.

#ifndef QDIV_DIVIDER_HPP
#define QDIV_DIVIDER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdiv/adders.hpp"
#include "qdiv/basis_sim.hpp"
#include "qdiv/circuit.hpp"

namespace qdiv {

enum class DividerKind { NonRestoring, Restoring };

inline std::string_view to_string(DividerKind k) {
  return k == DividerKind::NonRestoring ? "nonrestoring" : "restoring";
}

inline DividerKind divider_kind_from_string(std::string_view s) {
  if (s == "nonrestoring" || s == "non_restoring") {
    return DividerKind::NonRestoring;
  }
  if (s == "restoring") return DividerKind::Restoring;
  throw std::invalid_argument("unknown divider kind '" + std::string(s) +
                              "'");
}

struct DividerParams {
  std::size_t n = 0;
  AdderBuilder adder = cuccaro_adder();
  DividerKind kind = DividerKind::NonRestoring;
};

enum class BlockKind { Subtractor, AddSub, CondAdd };

inline std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Subtractor:
      return "sub";
    case BlockKind::AddSub:
      return "add_sub";
    case BlockKind::CondAdd:
      return "cond_add";
  }
  return "?";
}

/// One arithmetic block placed in the divider; gates [first_gate, end_gate).
struct BlockInstance {
  BlockKind kind;
  std::size_t iteration;  // 1-based
  std::size_t first_gate;
  std::size_t end_gate;
};

struct DividerLayout {
  std::size_t n = 0;
  DividerKind kind = DividerKind::NonRestoring;

  std::vector<QubitId> dividend_qubits;
  std::vector<QubitId> divisor_qubits;
  QubitId divisor_pad;
  /// Window of iteration i is iteration_windows[i-1], LSB first, width n+1.
  std::vector<std::vector<QubitId>> iteration_windows;
  /// Top (sign) wire of each window.
  std::vector<QubitId> sign_qubits;
  std::vector<QubitId> quotient_positions;
  std::vector<QubitId> remainder_positions;

  QubitId sub_carry_in;
  QubitId cond_carry_in;
  /// Non-restoring only: holds a copy of the final sign while the remainder
  /// is corrected, then cleared.
  std::optional<QubitId> restore_control;
  std::vector<QubitId> adder_work;

  /// Every wire that must read 0 after the circuit runs.
  std::vector<QubitId> zero_on_exit;

  std::vector<BlockInstance> blocks;

  /// Qubits the chosen adder uses beyond its two (n+1)-bit operands.
  std::size_t adder_ancillas = 0;

  std::size_t count(BlockKind k) const {
    std::size_t c = 0;
    for (const auto& b : blocks) c += (b.kind == k);
    return c;
  }
};

struct Divider {
  Circuit circuit;
  DividerLayout layout;
};

namespace detail {

// Relabels fragment wires onto divider wires by role; every fragment wire
// must be assigned.
class FragmentPlacer {
 public:
  explicit FragmentPlacer(const Fragment& f)
      : frag_(f), map_(f.circuit.qubit_count()),
        set_(f.circuit.qubit_count(), false) {}

  FragmentPlacer& operands(std::span<const QubitId> a,
                           std::span<const QubitId> b) {
    for (std::size_t i = 0; i < frag_.width(); ++i) {
      bind(frag_.a[i], a[i]);
      bind(frag_.b[i], b[i]);
    }
    return *this;
  }
  FragmentPlacer& bind(std::optional<QubitId> from, QubitId to) {
    if (!from) throw std::logic_error("fragment lacks the bound wire");
    map_[from->index] = to;
    set_[from->index] = true;
    return *this;
  }
  FragmentPlacer& work(std::span<const QubitId> pool) {
    if (frag_.ancillas.size() > pool.size()) {
      throw std::logic_error("not enough work ancillas for fragment");
    }
    for (std::size_t i = 0; i < frag_.ancillas.size(); ++i) {
      bind(frag_.ancillas[i], pool[i]);
    }
    return *this;
  }

  BlockInstance place(Circuit& host, BlockKind kind, std::size_t iteration) {
    for (std::size_t i = 0; i < set_.size(); ++i) {
      if (!set_[i]) {
        throw std::logic_error("fragment wire " + std::to_string(i) +
                               " left unplaced");
      }
    }
    const std::size_t first = host.size();
    host.append(frag_.circuit, map_);
    return {kind, iteration, first, host.size()};
  }

 private:
  const Fragment& frag_;
  std::vector<QubitId> map_;
  std::vector<bool> set_;
};

}  // namespace detail

/// Builds the divider circuit and its wire layout.
///
/// Non-restoring: one subtractor, n-1 controlled adder-subtractors (each
/// controlled by the previous quotient bit, which is also its carry-in),
/// then one conditional adder that corrects a negative remainder.
/// Restoring: n rounds of subtract, then add back under the complement of
/// the round's quotient bit.
inline Divider build_divider(const DividerParams& params) {
  const std::size_t n = params.n;
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  const std::size_t m = n + 1;
  const bool nonrestoring = params.kind == DividerKind::NonRestoring;

  const Fragment adder = params.adder.build(m);
  const Fragment sub = wrap_subtractor(params.adder, m);
  const Fragment add_sub = wrap_add_sub(params.adder, m);
  const Fragment cond_add = build_cond_add(m);
  if (!adder.carry_in || !adder.carry_out) {
    throw std::invalid_argument("adder '" + params.adder.name() +
                                "' must declare carry-in and carry-out");
  }
  const std::size_t work =
      std::max(sub.ancillas.size(), add_sub.ancillas.size());

  Divider out;
  Circuit& c = out.circuit;
  DividerLayout& L = out.layout;
  L.n = n;
  L.kind = params.kind;
  L.adder_ancillas = adder.ancilla_count();

  const Register rq = c.add_register("rq", 2 * n);
  const Register d = c.add_register("d", n + 1);
  const Register quot = c.add_register("quot", n);
  const Register anc =
      c.add_register("anc", (nonrestoring ? 3 : 2) + work);

  L.dividend_qubits.assign(rq.qubits.begin(), rq.qubits.begin() + n);
  L.remainder_positions = L.dividend_qubits;
  L.divisor_qubits.assign(d.qubits.begin(), d.qubits.begin() + n);
  L.divisor_pad = d[n];
  L.quotient_positions = quot.qubits;
  std::size_t k = 0;
  L.sub_carry_in = anc[k++];
  L.cond_carry_in = anc[k++];
  if (nonrestoring) L.restore_control = anc[k++];
  L.adder_work.assign(anc.qubits.begin() + k, anc.qubits.end());

  for (std::size_t i = 1; i <= n; ++i) {
    L.iteration_windows.emplace_back(rq.qubits.begin() + (n - i),
                                     rq.qubits.begin() + (2 * n - i + 1));
    L.sign_qubits.push_back(rq[2 * n - i]);
  }

  L.zero_on_exit.assign(rq.qubits.begin() + n, rq.qubits.end());
  L.zero_on_exit.push_back(L.divisor_pad);
  L.zero_on_exit.insert(L.zero_on_exit.end(), anc.qubits.begin(),
                        anc.qubits.end());

  auto window = [&](std::size_t i) -> const std::vector<QubitId>& {
    return L.iteration_windows[i - 1];
  };
  auto qbit = [&](std::size_t i) { return quot[n - i]; };  // from iteration i

  if (nonrestoring) {
    L.blocks.push_back(detail::FragmentPlacer(sub)
                           .operands(d.qubits, window(1))
                           .bind(sub.carry_in, L.sub_carry_in)
                           .bind(sub.carry_out, qbit(1))
                           .work(L.adder_work)
                           .place(c, BlockKind::Subtractor, 1));
    for (std::size_t i = 2; i <= n; ++i) {
      // The previous sign leaves the window here; it equals ~quotient bit,
      // so clear it.
      c.cx(qbit(i - 1), L.sign_qubits[i - 2]).x(L.sign_qubits[i - 2]);
      L.blocks.push_back(detail::FragmentPlacer(add_sub)
                             .operands(d.qubits, window(i))
                             .bind(add_sub.control, qbit(i - 1))
                             .bind(add_sub.carry_out, qbit(i))
                             .work(L.adder_work)
                             .place(c, BlockKind::AddSub, i));
    }
    const QubitId sign = L.sign_qubits[n - 1];
    const QubitId ctrl = *L.restore_control;
    c.cx(sign, ctrl);
    L.blocks.push_back(detail::FragmentPlacer(cond_add)
                           .operands(d.qubits, window(n))
                           .bind(cond_add.carry_in, L.cond_carry_in)
                           .bind(cond_add.control, ctrl)
                           .place(c, BlockKind::CondAdd, n + 1));
    // ctrl holds the old sign == ~q0.
    c.cx(qbit(n), ctrl).x(ctrl);
  } else {
    for (std::size_t i = 1; i <= n; ++i) {
      L.blocks.push_back(detail::FragmentPlacer(sub)
                             .operands(d.qubits, window(i))
                             .bind(sub.carry_in, L.sub_carry_in)
                             .bind(sub.carry_out, qbit(i))
                             .work(L.adder_work)
                             .place(c, BlockKind::Subtractor, i));
      c.x(qbit(i));
      L.blocks.push_back(detail::FragmentPlacer(cond_add)
                             .operands(d.qubits, window(i))
                             .bind(cond_add.carry_in, L.cond_carry_in)
                             .bind(cond_add.control, qbit(i))
                             .place(c, BlockKind::CondAdd, i));
      c.x(qbit(i));
    }
  }
  return out;
}

/// Input/output wires of a divider, recoverable from register names alone
/// (used when a circuit is loaded from text).
struct DividerIo {
  std::size_t n = 0;
  std::vector<QubitId> dividend;
  std::vector<QubitId> divisor;
  std::vector<QubitId> quotient;
  std::vector<QubitId> remainder;
};

inline DividerIo io_of(const DividerLayout& layout) {
  return {layout.n, layout.dividend_qubits, layout.divisor_qubits,
          layout.quotient_positions, layout.remainder_positions};
}

inline DividerIo io_from_registers(const Circuit& circuit) {
  const auto* quot = circuit.find_register("quot");
  const auto* rq = circuit.find_register("rq");
  const auto* d = circuit.find_register("d");
  if (quot == nullptr || rq == nullptr || d == nullptr) {
    throw std::invalid_argument(
        "not a divider circuit: registers rq, d and quot are required");
  }
  const std::size_t n = quot->size();
  if (rq->size() != 2 * n || d->size() != n + 1) {
    throw std::invalid_argument(
        "not a divider circuit: expected |rq| = 2|quot| and |d| = |quot|+1");
  }
  DividerIo io;
  io.n = n;
  io.dividend.assign(rq->qubits.begin(), rq->qubits.begin() + n);
  io.remainder = io.dividend;
  io.divisor.assign(d->qubits.begin(), d->qubits.begin() + n);
  io.quotient = quot->qubits;
  return io;
}

struct DivisionResult {
  std::uint64_t quotient = 0;
  std::uint64_t remainder = 0;

  friend bool operator==(const DivisionResult&,
                         const DivisionResult&) = default;
};

namespace detail {

inline void check_operands(std::size_t n, std::uint64_t dividend,
                           std::uint64_t divisor) {
  if (divisor == 0) throw std::domain_error("divisor must be non-zero");
  const std::uint64_t limit = std::uint64_t{1} << n;
  if (dividend >= limit || divisor >= limit) {
    throw std::out_of_range("operands must be below 2^" + std::to_string(n));
  }
}

inline BasisState initial_state(const Circuit& c, const DividerIo& io,
                                std::uint64_t dividend,
                                std::uint64_t divisor) {
  check_operands(io.n, dividend, divisor);
  BasisState s(c.qubit_count());
  encode_register(s, io.dividend, dividend);
  encode_register(s, io.divisor, divisor);
  return s;
}

}  // namespace detail

inline DivisionResult run_division(const Circuit& circuit, const DividerIo& io,
                                   std::uint64_t dividend,
                                   std::uint64_t divisor) {
  BasisState s = detail::initial_state(circuit, io, dividend, divisor);
  apply_in_place(circuit, s);
  return {decode_register(s, io.quotient), decode_register(s, io.remainder)};
}

inline DivisionResult run_division(const Circuit& circuit,
                                   const DividerLayout& layout,
                                   std::uint64_t dividend,
                                   std::uint64_t divisor) {
  return run_division(circuit, io_of(layout), dividend, divisor);
}

inline DivisionResult run_division(const Divider& div, std::uint64_t dividend,
                                   std::uint64_t divisor) {
  return run_division(div.circuit, div.layout, dividend, divisor);
}

struct CaseFailure {
  std::uint64_t dividend = 0;
  std::uint64_t divisor = 0;
  DivisionResult expected;
  DivisionResult got;
  std::string detail;
};

struct VerificationReport {
  std::size_t n = 0;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::optional<CaseFailure> first_failure;

  bool ok() const { return cases > 0 && passed == cases; }
  std::string summary() const {
    return std::to_string(passed) + "/" + std::to_string(cases) +
           (ok() ? " pass" : " FAIL");
  }
};

inline constexpr std::size_t kDefaultExhaustiveLimit = 6;

/// Runs every (dividend, divisor >= 1) pair through `circuit` and checks the
/// quotient, remainder, restored divisor and every wire in zero_on_exit.
inline VerificationReport verify_exhaustive(
    const Circuit& circuit, const DividerLayout& layout,
    std::size_t limit = kDefaultExhaustiveLimit) {
  const std::size_t n = layout.n;
  if (n > limit) {
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " exceeds exhaustive limit " +
                                std::to_string(limit));
  }
  const DividerIo io = io_of(layout);
  VerificationReport rep;
  rep.n = n;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < top; ++a) {
    for (std::uint64_t b = 1; b < top; ++b) {
      ++rep.cases;
      BasisState s = detail::initial_state(circuit, io, a, b);
      apply_in_place(circuit, s);
      const DivisionResult want{a / b, a % b};
      const DivisionResult got{decode_register(s, io.quotient),
                               decode_register(s, io.remainder)};
      std::string why;
      if (got != want) {
        why = "wrong quotient/remainder";
      } else if (decode_register(s, io.divisor) != b) {
        why = "divisor not restored";
      } else {
        for (QubitId q : layout.zero_on_exit) {
          if (s[q]) {
            why = "wire q" + std::to_string(q.index) + " not returned to 0";
            break;
          }
        }
      }
      if (why.empty()) {
        ++rep.passed;
      } else if (!rep.first_failure) {
        rep.first_failure = CaseFailure{a, b, want, got, why};
      }
    }
  }
  return rep;
}

inline VerificationReport verify_exhaustive(
    const DividerParams& params,
    std::size_t limit = kDefaultExhaustiveLimit) {
  if (params.n > limit) {
    throw std::invalid_argument("n = " + std::to_string(params.n) +
                                " exceeds exhaustive limit " +
                                std::to_string(limit));
  }
  const Divider div = build_divider(params);
  return verify_exhaustive(div.circuit, div.layout, limit);
}

}  // namespace qdiv

#endif  // QDIV_DIVIDER_HPP
