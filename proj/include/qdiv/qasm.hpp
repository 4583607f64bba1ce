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

// OpenQASM 3 subset: `qubit[N] name;` declarations followed by x / cx / ccx
// applications on `name[i]` operands.
//
//   OPENQASM 3.0;
//   include "stdgates.inc";
//   qubit[2] a;
//   qubit[1] t;
//   ccx a[0], a[1], t[0];
//
// Declaration order fixes wire numbering, which matches how Circuit allocates
// registers, so import(export(c)) == c.

#ifndef QDIV_QASM_HPP
#define QDIV_QASM_HPP

#include <cctype>
#include <charconv>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdiv/circuit.hpp"

namespace qdiv {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline constexpr std::string_view kQasmHeader = "OPENQASM 3.0;";
inline constexpr std::string_view kQasmInclude = "include \"stdgates.inc\";";

inline std::string export_text(const Circuit& circuit) {
  // wire -> (register, offset)
  std::vector<std::pair<const Register*, std::size_t>> where(
      circuit.qubit_count());
  for (const auto& r : circuit.registers()) {
    for (std::size_t i = 0; i < r.size(); ++i) where[r[i].index] = {&r, i};
  }

  std::ostringstream out;
  out << kQasmHeader << '\n' << kQasmInclude << '\n';
  for (const auto& r : circuit.registers()) {
    out << "qubit[" << r.size() << "] " << r.name << ";\n";
  }
  for (const Gate& g : circuit.gates()) {
    switch (g.kind()) {
      case GateKind::Not:
        out << "x ";
        break;
      case GateKind::Cnot:
        out << "cx ";
        break;
      case GateKind::Toffoli:
        out << "ccx ";
        break;
    }
    bool first = true;
    for (QubitId q : g.operands()) {
      if (!first) out << ", ";
      first = false;
      const auto& [reg, off] = where[q.index];
      out << reg->name << '[' << off << ']';
    }
    out << ";\n";
  }
  return out.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

inline std::size_t parse_index(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, "bad index '" + std::string(s) + "'");
  }
  return v;
}

// `name[idx]`
inline QubitId parse_operand(std::string_view tok, const Circuit& c,
                             std::size_t line) {
  tok = trim(tok);
  auto lb = tok.find('[');
  if (lb == std::string_view::npos || tok.back() != ']') {
    throw ParseError(line, "expected operand 'reg[i]', got '" +
                               std::string(tok) + "'");
  }
  auto name = trim(tok.substr(0, lb));
  auto idx = parse_index(trim(tok.substr(lb + 1, tok.size() - lb - 2)), line);
  const Register* reg = c.find_register(name);
  if (reg == nullptr) {
    throw ParseError(line, "undeclared register '" + std::string(name) + "'");
  }
  if (idx >= reg->size()) {
    throw ParseError(line, "index " + std::to_string(idx) +
                               " out of range for register '" +
                               std::string(name) + "'");
  }
  return (*reg)[idx];
}

}  // namespace detail

/// Parses the subset written by export_text. `//` comments and blank lines
/// are skipped; anything else outside the subset is rejected with its line.
inline Circuit import_text(std::string_view text) {
  using detail::trim;
  Circuit c;
  bool have_header = false;
  bool in_gates = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto cm = raw.find("//"); cm != std::string_view::npos) {
      raw = raw.substr(0, cm);
    }
    auto line = trim(raw);
    if (line.empty()) continue;

    if (!have_header) {
      if (line != kQasmHeader) {
        throw ParseError(line_no, "expected '" + std::string(kQasmHeader) +
                                      "' header");
      }
      have_header = true;
      continue;
    }
    if (line.back() != ';') throw ParseError(line_no, "missing ';'");
    line = trim(line.substr(0, line.size() - 1));

    if (line.starts_with("include")) {
      if (c.qubit_count() > 0 || in_gates ||
          std::string(line) + ";" != kQasmInclude) {
        throw ParseError(line_no, "unsupported include");
      }
      continue;
    }

    if (line.starts_with("qubit")) {
      if (in_gates) {
        throw ParseError(line_no, "declaration after first gate");
      }
      auto lb = line.find('[');
      auto rb = line.find(']');
      if (lb != 5 || rb == std::string_view::npos) {
        throw ParseError(line_no, "expected 'qubit[N] name;'");
      }
      auto width = detail::parse_index(trim(line.substr(lb + 1, rb - lb - 1)),
                                       line_no);
      auto name = trim(line.substr(rb + 1));
      if (!detail::is_identifier(name)) {
        throw ParseError(line_no, "bad register name '" + std::string(name) +
                                      "'");
      }
      try {
        c.add_register(std::string(name), width);
      } catch (const CircuitError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) {
      throw ParseError(line_no, "expected gate application");
    }
    auto name = line.substr(0, sp);
    GateKind kind;
    if (name == "x") {
      kind = GateKind::Not;
    } else if (name == "cx") {
      kind = GateKind::Cnot;
    } else if (name == "ccx") {
      kind = GateKind::Toffoli;
    } else {
      throw ParseError(line_no, "unknown gate '" + std::string(name) + "'");
    }

    std::vector<QubitId> ops;
    auto args = line.substr(sp + 1);
    std::size_t start = 0;
    while (true) {
      auto comma = args.find(',', start);
      auto tok = args.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
      ops.push_back(detail::parse_operand(tok, c, line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (ops.size() != arity(kind)) {
      throw ParseError(line_no, "gate '" + std::string(name) + "' takes " +
                                    std::to_string(arity(kind)) +
                                    " operands");
    }
    try {
      c.append(Gate::make(kind, ops));
    } catch (const CircuitError& e) {
      throw ParseError(line_no, e.what());
    }
    in_gates = true;
  }

  if (!have_header) throw ParseError(line_no, "missing declarations");
  return c;
}

}  // namespace qdiv

#endif  // QDIV_QASM_HPP
