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

#ifndef QDIV_ADDERS_HPP
#define QDIV_ADDERS_HPP

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdiv/circuit.hpp"

namespace qdiv {

/// A self-contained arithmetic block over two m-bit operand registers.
///
/// `b` is the in-place operand (it receives the result) and `a` is always
/// restored. Optional wires:
///   carry_in  - added to the sum when set
///   carry_out - XORed with the overflow bit; expected 0 on input
///   control   - gates the whole operation (for add-sub, doubles as carry_in)
/// `ancillas` are internal work wires that start and end at 0.
struct Fragment {
  Circuit circuit;
  Register a;
  Register b;
  std::optional<QubitId> carry_in;
  std::optional<QubitId> carry_out;
  std::optional<QubitId> control;
  std::vector<QubitId> ancillas;

  std::size_t width() const { return a.size(); }
  /// Wires beyond the two operand registers.
  std::size_t ancilla_count() const {
    return circuit.qubit_count() - 2 * width();
  }
};

/// Plain adder: b <- a + b + carry_in (mod 2^m), carry_out ^= overflow.
using AdderFragment = Fragment;

template <class B>
concept AdderBuilderLike = requires(const B& b, std::size_t m) {
  { b.build(m) } -> std::same_as<AdderFragment>;
  { b.name() } -> std::convertible_to<std::string>;
};

namespace detail {

inline void require_width(std::size_t m) {
  if (m == 0) throw std::invalid_argument("operand width must be >= 1");
}

// Operand and carry registers shared by every adder fragment.
inline Fragment adder_skeleton(std::size_t m, std::size_t work) {
  require_width(m);
  Fragment f;
  f.a = f.circuit.add_register("a", m);
  f.b = f.circuit.add_register("b", m);
  f.carry_in = f.circuit.add_register("cin", 1)[0];
  if (work > 0) f.ancillas = f.circuit.add_register("anc", work).qubits;
  f.carry_out = f.circuit.add_register("cout", 1)[0];
  return f;
}

// Copies registers and wire roles of `f` onto an empty circuit.
inline Fragment empty_like(const Fragment& f) {
  Fragment out = f;
  out.circuit = Circuit();
  for (const auto& r : f.circuit.registers()) {
    out.circuit.add_register(r.name, r.size());
  }
  return out;
}

}  // namespace detail

/// Ripple-carry adder built from MAJ/UMA blocks with the top-bit shortcut:
/// 2m-1 Toffolis, no work ancillas beyond carry-in and carry-out.
struct CuccaroAdder {
  std::string name() const { return "cuccaro"; }

  AdderFragment build(std::size_t m) const {
    Fragment f = detail::adder_skeleton(m, 0);
    Circuit& c = f.circuit;
    const QubitId cin = *f.carry_in;
    const QubitId cout = *f.carry_out;
    const auto& a = f.a;
    const auto& b = f.b;
    // Carry into bit i lives on cin for i == 0, else on a[i-1] after MAJ.
    auto carry = [&](std::size_t i) { return i == 0 ? cin : a[i - 1]; };

    for (std::size_t i = 0; i + 1 < m; ++i) {  // MAJ
      c.cx(a[i], b[i]).cx(a[i], carry(i)).ccx(carry(i), b[i], a[i]);
    }
    // Top bit: cout ^= a ^ (a^c)(a^b) = maj(a, b, c), then b <- a^b^c.
    const std::size_t t = m - 1;
    const QubitId ct = carry(t);
    c.cx(a[t], b[t]).cx(a[t], ct).cx(a[t], cout);
    c.ccx(ct, b[t], cout);
    c.cx(a[t], ct).cx(ct, b[t]);
    for (std::size_t i = m - 1; i-- > 0;) {  // UMA
      c.ccx(carry(i), b[i], a[i]).cx(a[i], carry(i)).cx(carry(i), b[i]);
    }
    return f;
  }
};

/// Carry / sum / carry-uncompute ripple adder with m-1 carry ancillas:
/// 4m-2 Toffolis.
struct VbeAdder {
  std::string name() const { return "vbe"; }

  AdderFragment build(std::size_t m) const {
    Fragment f = detail::adder_skeleton(m, m - 1);
    Circuit& c = f.circuit;
    const auto& a = f.a;
    const auto& b = f.b;
    auto carry = [&](std::size_t i) {
      if (i == 0) return *f.carry_in;
      if (i == m) return *f.carry_out;
      return f.ancillas[i - 1];
    };
    auto carry_block = [&](std::size_t i) {
      c.ccx(a[i], b[i], carry(i + 1)).cx(a[i], b[i]);
      c.ccx(carry(i), b[i], carry(i + 1));
    };
    auto carry_undo = [&](std::size_t i) {
      c.ccx(carry(i), b[i], carry(i + 1)).cx(a[i], b[i]);
      c.ccx(a[i], b[i], carry(i + 1));
    };
    auto sum = [&](std::size_t i) { c.cx(a[i], b[i]).cx(carry(i), b[i]); };

    for (std::size_t i = 0; i < m; ++i) carry_block(i);
    c.cx(a[m - 1], b[m - 1]);
    sum(m - 1);
    for (std::size_t i = m - 1; i-- > 0;) {
      carry_undo(i);
      sum(i);
    }
    return f;
  }
};

/// Runtime-selectable adder builder.
class AdderBuilder {
 public:
  AdderBuilder(std::string name, std::function<AdderFragment(std::size_t)> fn,
               std::optional<std::string> cost_model_id = std::nullopt)
      : name_(std::move(name)),
        fn_(std::move(fn)),
        cost_model_id_(std::move(cost_model_id)) {}

  template <AdderBuilderLike B>
  static AdderBuilder from(B builder,
                           std::optional<std::string> cost_model_id) {
    std::string name = builder.name();
    return AdderBuilder(
        std::move(name),
        [b = std::move(builder)](std::size_t m) { return b.build(m); },
        std::move(cost_model_id));
  }

  const std::string& name() const { return name_; }
  AdderFragment build(std::size_t m) const {
    detail::require_width(m);
    return fn_(m);
  }
  /// Row of the analytic cost table this adder corresponds to, if any.
  const std::optional<std::string>& cost_model_id() const {
    return cost_model_id_;
  }

 private:
  std::string name_;
  std::function<AdderFragment(std::size_t)> fn_;
  std::optional<std::string> cost_model_id_;
};

inline AdderFragment build_cuccaro(std::size_t m) {
  return CuccaroAdder{}.build(m);
}
inline AdderFragment build_vbe(std::size_t m) { return VbeAdder{}.build(m); }

inline AdderBuilder cuccaro_adder() {
  return AdderBuilder::from(CuccaroAdder{}, "cuccaro");
}
inline AdderBuilder vbe_adder() {
  return AdderBuilder::from(VbeAdder{}, "vbe");
}

/// Gate-level adders by name ("cuccaro", "vbe").
inline AdderBuilder adder_by_name(std::string_view name) {
  if (name == "cuccaro") return cuccaro_adder();
  if (name == "vbe") return vbe_adder();
  throw std::invalid_argument("unknown gate-level adder '" +
                              std::string(name) + "'");
}

inline std::vector<std::string> gate_level_adders() {
  return {"cuccaro", "vbe"};
}

/// b <- b - a - carry_in (mod 2^m), i.e. b + ~a + 1 with a zero carry-in.
///
/// The divisor plays `a` (complemented, then restored) and the partial
/// remainder plays `b` (receives the difference). carry_in is a borrow-in:
/// leave it 0 for plain subtraction. carry_out ends as 1 iff no borrow.
template <AdderBuilderLike B>
Fragment wrap_subtractor(const B& adder, std::size_t m) {
  const Fragment inner = adder.build(m);
  Fragment f = detail::empty_like(inner);
  Circuit& c = f.circuit;
  const QubitId cin = *inner.carry_in;
  for (QubitId q : f.a.qubits) c.x(q);
  c.x(cin);
  c.append(inner.circuit, identity_mapping(inner.circuit.qubit_count()));
  c.x(cin);
  for (QubitId q : f.a.qubits) c.x(q);
  return f;
}

/// Controlled adder-subtractor: with control = 0, b <- b + a; with
/// control = 1, b <- b - a. The control wire is the adder's carry-in, and
/// CNOTs from it complement `a` around the adder.
template <AdderBuilderLike B>
Fragment wrap_add_sub(const B& adder, std::size_t m) {
  const Fragment inner = adder.build(m);
  Fragment f = detail::empty_like(inner);
  f.control = inner.carry_in;
  Circuit& c = f.circuit;
  const QubitId ctrl = *inner.carry_in;
  for (QubitId q : f.a.qubits) c.cx(ctrl, q);
  c.append(inner.circuit, identity_mapping(inner.circuit.qubit_count()));
  for (QubitId q : f.a.qubits) c.cx(ctrl, q);
  return f;
}

/// Controlled in-place adder without carry-out:
/// control = 1: b <- a + b + carry_in (mod 2^m); control = 0: identity.
///
/// Carries are computed with an uncontrolled MAJ chain, each sum bit is
/// written under the control, then the chain is undone. 3(m-1)+1 Toffolis.
inline Fragment build_cond_add(std::size_t m) {
  detail::require_width(m);
  Fragment f;
  Circuit& c = f.circuit;
  f.a = c.add_register("a", m);
  f.b = c.add_register("b", m);
  f.carry_in = c.add_register("cin", 1)[0];
  f.control = c.add_register("ctrl", 1)[0];
  const auto& a = f.a;
  const auto& b = f.b;
  const QubitId ctrl = *f.control;
  auto carry = [&](std::size_t i) { return i == 0 ? *f.carry_in : a[i - 1]; };

  // After MAJ(i): carry(i) = c_i^a_i, b[i] = a_i^b_i, a[i] = c_{i+1}.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    c.cx(a[i], b[i]).cx(a[i], carry(i)).ccx(carry(i), b[i], a[i]);
  }
  const std::size_t t = m - 1;
  c.cx(a[t], carry(t)).ccx(ctrl, carry(t), b[t]).cx(a[t], carry(t));
  for (std::size_t i = m - 1; i-- > 0;) {
    c.ccx(carry(i), b[i], a[i]);
    c.ccx(ctrl, carry(i), b[i]);
    c.cx(a[i], carry(i)).cx(a[i], b[i]);
  }
  return f;
}

}  // namespace qdiv

#endif  // QDIV_ADDERS_HPP
