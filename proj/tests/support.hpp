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


// Helpers shared by the unit tests and the acceptance runner.

#ifndef QDIV_TESTS_SUPPORT_HPP
#define QDIV_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qdiv/qdiv.hpp"

namespace qdiv::testing {

/// Uniform random gate list over `qubits` wires (qubits >= 3).
inline Circuit random_circuit(std::mt19937_64& rng, std::size_t qubits,
                              std::size_t gates) {
  Circuit c(qubits);
  std::uniform_int_distribution<std::size_t> kind(0, 2);
  for (std::size_t g = 0; g < gates; ++g) {
    std::vector<std::size_t> idx(qubits);
    for (std::size_t i = 0; i < qubits; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    const QubitId a(idx[0]), b(idx[1]), t(idx[2]);
    switch (kind(rng)) {
      case 0:
        c.x(a);
        break;
      case 1:
        c.cx(a, b);
        break;
      default:
        c.ccx(a, b, t);
    }
  }
  return c;
}

/// A random output of one of the library builders: plain adders, wrappers,
/// the conditional adder, or a small divider, optionally truncated to a
/// random gate prefix so intermediate structure is exercised too.
inline Circuit random_builder_circuit(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<std::size_t> width(1, 6);
  const std::size_t m = width(rng);
  Circuit full;
  switch (pick(rng)) {
    case 0:
      full = build_cuccaro(m).circuit;
      break;
    case 1:
      full = build_vbe(m).circuit;
      break;
    case 2:
      full = wrap_subtractor(CuccaroAdder{}, m).circuit;
      break;
    case 3:
      full = wrap_add_sub(VbeAdder{}, m).circuit;
      break;
    case 4:
      full = build_cond_add(m).circuit;
      break;
    case 5:
      full = build_divider({(m + 1) / 2, cuccaro_adder(),
                            DividerKind::NonRestoring})
                 .circuit;
      break;
    default:
      full = build_divider({(m + 1) / 2, vbe_adder(), DividerKind::Restoring})
                 .circuit;
  }
  std::uniform_int_distribution<std::size_t> cut(0, full.size());
  const std::size_t keep = (rng() & 1) ? full.size() : cut(rng);
  Circuit out;
  for (const auto& r : full.registers()) out.add_register(r.name, r.size());
  for (std::size_t i = 0; i < keep; ++i) out.append(full.gates()[i]);
  return out;
}

/// Random basis state on `qubits` wires.
inline BasisState random_state(std::mt19937_64& rng, std::size_t qubits) {
  BasisState s(qubits);
  for (std::size_t i = 0; i < qubits; ++i) s.set(QubitId(i), rng() & 1);
  return s;
}

/// Observed wire values after running a fragment on the given inputs.
struct FragmentRun {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool carry_out = false;
  bool control = false;
  bool carry_in = false;
  bool ancillas_clean = true;
};

inline FragmentRun run_fragment(const Fragment& f, std::uint64_t a,
                                std::uint64_t b, bool cin = false,
                                bool ctrl = false) {
  BasisState s(f.circuit.qubit_count());
  encode_register(s, f.a, a);
  encode_register(s, f.b, b);
  if (f.carry_in && cin) s.set(*f.carry_in, true);
  if (f.control && ctrl) s.set(*f.control, true);
  apply_in_place(f.circuit, s);
  FragmentRun r;
  r.a = decode_register(s, f.a);
  r.b = decode_register(s, f.b);
  if (f.carry_out) r.carry_out = s[*f.carry_out];
  if (f.control) r.control = s[*f.control];
  if (f.carry_in) r.carry_in = s[*f.carry_in];
  for (QubitId q : f.ancillas) r.ancillas_clean &= !s[q];
  return r;
}

/// Bit-count oracle, written independently of the library's omega.
inline std::uint64_t popcount_oracle(std::uint64_t n) {
  std::uint64_t c = 0;
  for (; n != 0; n >>= 1) c += n & 1;
  return c;
}

}  // namespace qdiv::testing

#endif  // QDIV_TESTS_SUPPORT_HPP
