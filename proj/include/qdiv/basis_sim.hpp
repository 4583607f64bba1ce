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

#ifndef QDIV_BASIS_SIM_HPP
#define QDIV_BASIS_SIM_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdiv/circuit.hpp"

namespace qdiv {

class BasisState;
inline void apply_in_place(const Circuit& circuit, BasisState& state);

/// One computational-basis state: a bit per wire.
class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(std::size_t qubits) : bits_(qubits, 0) {}

  std::size_t size() const { return bits_.size(); }
  bool operator[](QubitId q) const { return bits_.at(q.index) != 0; }
  void set(QubitId q, bool v) { bits_.at(q.index) = v ? 1 : 0; }
  void flip(QubitId q) { bits_[q.index] ^= 1; }

  /// Packs the first min(size, 64) bits, wire 0 lowest.
  std::uint64_t to_word() const {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < bits_.size() && i < 64; ++i) {
      w |= static_cast<std::uint64_t>(bits_[i]) << i;
    }
    return w;
  }

  static BasisState from_word(std::size_t qubits, std::uint64_t w) {
    BasisState s(qubits);
    for (std::size_t i = 0; i < qubits && i < 64; ++i) s.bits_[i] = (w >> i) & 1;
    return s;
  }

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  friend void apply_in_place(const Circuit&, BasisState&);
  std::vector<std::uint8_t> bits_;
};

inline void apply_in_place(const Circuit& circuit, BasisState& state) {
  if (state.size() != circuit.qubit_count()) {
    throw std::invalid_argument(
        "state has " + std::to_string(state.size()) + " bits, circuit has " +
        std::to_string(circuit.qubit_count()) + " qubits");
  }
  auto& b = state.bits_;
  for (const Gate& g : circuit.gates()) {
    auto ops = g.operands();
    switch (g.kind()) {
      case GateKind::Not:
        b[ops[0].index] ^= 1;
        break;
      case GateKind::Cnot:
        b[ops[1].index] ^= b[ops[0].index];
        break;
      case GateKind::Toffoli:
        b[ops[2].index] ^= b[ops[0].index] & b[ops[1].index];
        break;
    }
  }
}

inline BasisState apply(const Circuit& circuit, BasisState state) {
  apply_in_place(circuit, state);
  return state;
}

/// Writes `value` little-endian onto `positions`; throws if it does not fit.
inline void encode_register(BasisState& state,
                            std::span<const QubitId> positions,
                            std::uint64_t value) {
  if (positions.size() < 64 && (value >> positions.size()) != 0) {
    throw std::out_of_range("value " + std::to_string(value) +
                            " does not fit in " +
                            std::to_string(positions.size()) + " bits");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    state.set(positions[i], i < 64 && ((value >> i) & 1));
  }
}

inline std::uint64_t decode_register(const BasisState& state,
                                     std::span<const QubitId> positions) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < positions.size() && i < 64; ++i) {
    if (state[positions[i]]) v |= std::uint64_t{1} << i;
  }
  return v;
}

inline void encode_register(BasisState& state, const Register& reg,
                            std::uint64_t value) {
  encode_register(state, reg.qubits, value);
}

inline std::uint64_t decode_register(const BasisState& state,
                                     const Register& reg) {
  return decode_register(state, reg.qubits);
}

}  // namespace qdiv

#endif  // QDIV_BASIS_SIM_HPP
