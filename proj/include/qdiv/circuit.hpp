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

#ifndef QDIV_CIRCUIT_HPP
#define QDIV_CIRCUIT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdiv {

/// Raised on malformed gates, registers, or remappings.
class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index of one wire inside a Circuit.
struct QubitId {
  std::uint32_t index = 0;

  constexpr QubitId() = default;
  constexpr explicit QubitId(std::size_t i)
      : index(static_cast<std::uint32_t>(i)) {}

  friend constexpr auto operator<=>(QubitId, QubitId) = default;
};

enum class GateKind : std::uint8_t { Not, Cnot, Toffoli };

constexpr std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::Not:
      return 1;
    case GateKind::Cnot:
      return 2;
    case GateKind::Toffoli:
      return 3;
  }
  return 0;
}

/// A classically reversible gate. Operands are stored controls first, target
/// last; unused slots are zero.
class Gate {
 public:
  static Gate x(QubitId target) { return Gate(GateKind::Not, {target}); }
  static Gate cx(QubitId control, QubitId target) {
    return Gate(GateKind::Cnot, {control, target});
  }
  static Gate ccx(QubitId c1, QubitId c2, QubitId target) {
    return Gate(GateKind::Toffoli, {c1, c2, target});
  }

  /// Builds a gate of `kind` from exactly arity(kind) operands; throws on
  /// arity mismatch or repeated operands.
  static Gate make(GateKind kind, std::span<const QubitId> operands) {
    if (operands.size() != arity(kind)) {
      throw CircuitError("gate arity mismatch");
    }
    std::array<QubitId, 3> ops{};
    std::copy(operands.begin(), operands.end(), ops.begin());
    return Gate(kind, ops, operands.size());
  }

  GateKind kind() const { return kind_; }
  std::span<const QubitId> operands() const {
    return {ops_.data(), arity(kind_)};
  }
  QubitId target() const { return ops_[arity(kind_) - 1]; }
  std::span<const QubitId> controls() const {
    return {ops_.data(), arity(kind_) - 1};
  }
  bool is_toffoli() const { return kind_ == GateKind::Toffoli; }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::initializer_list<QubitId> ops)
      : Gate(kind, to_array(ops), ops.size()) {}

  Gate(GateKind kind, std::array<QubitId, 3> ops, std::size_t n)
      : kind_(kind), ops_(ops) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (ops_[i] == ops_[j]) {
          throw CircuitError("duplicate operand q" +
                             std::to_string(ops_[i].index) + " in gate");
        }
      }
    }
  }

  static std::array<QubitId, 3> to_array(std::initializer_list<QubitId> ops) {
    std::array<QubitId, 3> out{};
    std::copy(ops.begin(), ops.end(), out.begin());
    return out;
  }

  GateKind kind_;
  std::array<QubitId, 3> ops_;
};

/// Named, ordered group of wires. Index 0 is the least significant bit.
struct Register {
  std::string name;
  std::vector<QubitId> qubits;

  std::size_t size() const { return qubits.size(); }
  QubitId operator[](std::size_t i) const { return qubits.at(i); }

  friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered gate list over `qubit_count()` wires partitioned into registers.
///
/// Registers are allocated contiguously in declaration order, so every wire
/// belongs to exactly one register and the register list alone fixes the
/// wire numbering. Circuit(n) is shorthand for a single register "q" of n
/// wires.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t qubits) {
    if (qubits > 0) add_register("q", qubits);
  }

  /// Appends `width` fresh wires as register `name`.
  const Register& add_register(std::string name, std::size_t width) {
    if (width == 0) throw CircuitError("register '" + name + "' is empty");
    if (name.empty()) throw CircuitError("register name is empty");
    if (find_register(name) != nullptr) {
      throw CircuitError("duplicate register '" + name + "'");
    }
    Register reg{std::move(name), {}};
    reg.qubits.reserve(width);
    for (std::size_t i = 0; i < width; ++i) {
      reg.qubits.emplace_back(qubit_count_ + i);
    }
    qubit_count_ += width;
    registers_.push_back(std::move(reg));
    return registers_.back();
  }

  const Register* find_register(std::string_view name) const {
    for (const auto& r : registers_) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }

  const Register& reg(std::string_view name) const {
    if (const auto* r = find_register(name)) return *r;
    throw CircuitError("no register named '" + std::string(name) + "'");
  }

  Circuit& append(const Gate& gate) {
    for (QubitId q : gate.operands()) {
      if (q.index >= qubit_count_) {
        throw CircuitError("operand q" + std::to_string(q.index) +
                           " out of range for " +
                           std::to_string(qubit_count_) + "-qubit circuit");
      }
    }
    gates_.push_back(gate);
    return *this;
  }

  Circuit& x(QubitId t) { return append(Gate::x(t)); }
  Circuit& cx(QubitId c, QubitId t) { return append(Gate::cx(c, t)); }
  Circuit& ccx(QubitId c1, QubitId c2, QubitId t) {
    return append(Gate::ccx(c1, c2, t));
  }

  /// Appends every gate of `fragment`, relabelling fragment wire i as
  /// mapping[i]. The mapping must be injective and in range for this circuit.
  Circuit& append(const Circuit& fragment, std::span<const QubitId> mapping) {
    if (mapping.size() != fragment.qubit_count()) {
      throw CircuitError("mapping has " + std::to_string(mapping.size()) +
                         " entries, fragment has " +
                         std::to_string(fragment.qubit_count()) + " qubits");
    }
    std::vector<bool> seen(qubit_count_, false);
    for (QubitId q : mapping) {
      if (q.index >= qubit_count_) {
        throw CircuitError("mapping entry q" + std::to_string(q.index) +
                           " out of range");
      }
      if (seen[q.index]) {
        throw CircuitError("mapping entry q" + std::to_string(q.index) +
                           " repeated");
      }
      seen[q.index] = true;
    }
    gates_.reserve(gates_.size() + fragment.gates_.size());
    std::array<QubitId, 3> ops{};
    for (const Gate& g : fragment.gates_) {
      auto src = g.operands();
      for (std::size_t i = 0; i < src.size(); ++i) ops[i] = mapping[src[i].index];
      gates_.push_back(Gate::make(g.kind(), {ops.data(), src.size()}));
    }
    return *this;
  }

  std::size_t qubit_count() const { return qubit_count_; }
  const std::vector<Register>& registers() const { return registers_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t qubit_count_ = 0;
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
};

/// Free-function form of Circuit::append(gate); returns the extended copy.
inline Circuit append_gate(Circuit circuit, const Gate& gate) {
  circuit.append(gate);
  return circuit;
}

/// Free-function form of Circuit::append(fragment, mapping).
inline Circuit append_circuit(Circuit host, const Circuit& fragment,
                              std::span<const QubitId> mapping) {
  host.append(fragment, mapping);
  return host;
}

/// Same wires and registers, gates in reverse order. Every gate in the set is
/// self-inverse, so this is the inverse circuit.
inline Circuit reversed(const Circuit& circuit) {
  Circuit out;
  for (const auto& r : circuit.registers()) out.add_register(r.name, r.size());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    out.append(*it);
  }
  return out;
}

inline std::vector<QubitId> identity_mapping(std::size_t n) {
  std::vector<QubitId> m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.emplace_back(i);
  return m;
}

struct ResourceReport {
  std::size_t toffoli_depth = 0;
  std::size_t toffoli_count = 0;
  std::size_t qubit_count = 0;
  std::size_t gate_total = 0;

  friend bool operator==(const ResourceReport&,
                         const ResourceReport&) = default;
};

/// Toffoli depth, Toffoli count, qubit count and gate total.
///
/// Depth is an as-soon-as-possible schedule over the qubit-overlap DAG: each
/// gate lands one level after the latest gate it shares a wire with, and only
/// Toffoli gates advance the level. NOT/CNOT are free but still order the
/// gates around them.
inline ResourceReport measure(const Circuit& circuit) {
  ResourceReport rep;
  rep.qubit_count = circuit.qubit_count();
  rep.gate_total = circuit.size();
  std::vector<std::size_t> level(circuit.qubit_count(), 0);
  for (const Gate& g : circuit.gates()) {
    std::size_t l = 0;
    for (QubitId q : g.operands()) l = std::max(l, level[q.index]);
    if (g.is_toffoli()) {
      ++l;
      ++rep.toffoli_count;
    }
    for (QubitId q : g.operands()) level[q.index] = l;
    rep.toffoli_depth = std::max(rep.toffoli_depth, l);
  }
  return rep;
}

}  // namespace qdiv

#endif  // QDIV_CIRCUIT_HPP
