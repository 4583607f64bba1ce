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

// Command-line front end. Data goes to `out`, diagnostics to `err`; the
// exit code is 0 only when the command's postcondition holds.
//
//   qdiv build    --n N --adder {cuccaro|vbe} --kind {nonrestoring|restoring}
//                 --out PATH
//   qdiv estimate --n N --row ROW [--radix R] [--kind K]
//                 [--rounding {ceil-real-log|strict-floor}]
//   qdiv verify   --n N --adder A --kind K [--limit L] [--json]
//   qdiv simulate --circuit PATH --dividend A --divisor B [--json]
//   qdiv table    [--n N] [--format {csv|json}] [--audit] [--radix R]
//                 [--rounding R]

#ifndef QDIV_CLI_HPP
#define QDIV_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdiv/cost_models.hpp"
#include "qdiv/crosscheck.hpp"
#include "qdiv/divider.hpp"
#include "qdiv/qasm.hpp"
#include "qdiv/report.hpp"

namespace qdiv::cli {

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_n(long long n) {
  if (n < 1) throw detail::UsageError("n must be ≥ 1");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw detail::UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Slow quantum divider synthesis and resource estimation",
               "qdiv"};
  app.require_subcommand(1);

  long long n = 0;
  std::string adder = "cuccaro";
  std::string kind = "nonrestoring";
  std::string out_path;
  std::string row;
  std::optional<unsigned> radix;
  std::string rounding = "ceil-real-log";
  std::size_t limit = kDefaultExhaustiveLimit;
  bool as_json = false;
  std::string circuit_path;
  long long dividend = 0;
  long long divisor = 0;
  std::string format = "csv";
  bool audit = false;

  const std::vector<std::string> adders = gate_level_adders();
  const std::vector<std::string> kinds = {"nonrestoring", "restoring"};
  const std::vector<std::string> roundings = {"ceil-real-log",
                                              "strict-floor"};

  auto* build = app.add_subcommand("build", "Synthesize a divider circuit");
  build->add_option("--n", n, "Operand width")->required();
  build->add_option("--adder", adder)->check(CLI::IsMember(adders));
  build->add_option("--kind", kind)->check(CLI::IsMember(kinds));
  build->add_option("--out", out_path, "OpenQASM output path")->required();

  auto* estimate = app.add_subcommand("estimate", "Evaluate a cost row");
  estimate->add_option("--n", n)->required();
  estimate->add_option("--row", row)->required();
  estimate->add_option("--radix", radix);
  estimate->add_option("--kind", kind)->check(CLI::IsMember(kinds));
  estimate->add_option("--rounding", rounding)
      ->check(CLI::IsMember(roundings));

  auto* verify = app.add_subcommand("verify", "Exhaustively simulate");
  verify->add_option("--n", n)->required();
  verify->add_option("--adder", adder)->check(CLI::IsMember(adders));
  verify->add_option("--kind", kind)->check(CLI::IsMember(kinds));
  verify->add_option("--limit", limit, "Largest n allowed");
  verify->add_flag("--json", as_json);

  auto* simulate = app.add_subcommand("simulate", "Run one division");
  simulate->add_option("--circuit", circuit_path)->required();
  simulate->add_option("--dividend", dividend)->required();
  simulate->add_option("--divisor", divisor)->required();
  simulate->add_flag("--json", as_json);

  auto* table = app.add_subcommand("table", "Comparison table");
  table->add_option("--n", n)->default_val(32);
  table->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--radix", radix, "Include the higher-radix row");
  table->add_option("--rounding", rounding)->check(CLI::IsMember(roundings));
  table->add_flag("--audit", audit, "Emit the rounding audit instead");

  std::vector<const char*> argv{"qdiv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*build) {
      detail::require_n(n);
      const DividerParams params{static_cast<std::size_t>(n),
                                 adder_by_name(adder),
                                 divider_kind_from_string(kind)};
      const Divider div = build_divider(params);
      std::ofstream f(out_path, std::ios::binary);
      f << export_text(div.circuit);
      f.close();
      if (!f) throw detail::UsageError("cannot write '" + out_path + "'");
      nlohmann::json j = to_json(measure(div.circuit));
      j["n"] = n;
      j["adder"] = adder;
      j["kind"] = kind;
      j["crosscheck"] = to_json(crosscheck_counts(div, params.adder));
      out << j.dump() << '\n';
      return 0;
    }
    if (*estimate) {
      detail::require_n(n);
      const auto mode = cost::rounding_from_string(rounding);
      const auto t = cost::evaluate_row(row, n, radix,
                                        divider_kind_from_string(kind), mode);
      nlohmann::json j = to_json(t);
      j["row"] = row;
      j["n"] = n;
      j["kind"] = kind;
      j["rounding"] = rounding;
      if (radix) j["radix"] = *radix;
      out << j.dump() << '\n';
      return 0;
    }
    if (*verify) {
      detail::require_n(n);
      const DividerParams params{static_cast<std::size_t>(n),
                                 adder_by_name(adder),
                                 divider_kind_from_string(kind)};
      const auto rep = verify_exhaustive(params, limit);
      if (as_json) {
        out << to_json(rep).dump() << '\n';
      } else {
        out << rep.summary() << '\n';
        if (rep.first_failure) {
          const auto& f = *rep.first_failure;
          out << "first failure: dividend=" << f.dividend
              << " divisor=" << f.divisor << " expected q="
              << f.expected.quotient << " r=" << f.expected.remainder
              << " got q=" << f.got.quotient << " r=" << f.got.remainder
              << " (" << f.detail << ")\n";
        }
      }
      return rep.ok() ? 0 : 1;
    }
    if (*simulate) {
      const std::string text = detail::read_file(circuit_path);
      Circuit c;
      try {
        c = import_text(text);
      } catch (const ParseError& e) {
        // "path:LINE: message", the usual compiler-style location.
        std::string msg = e.what();
        msg = msg.substr(msg.find(": ") + 2);
        throw detail::UsageError(circuit_path + ":" +
                                 std::to_string(e.line()) + ": " + msg);
      }
      if (dividend < 0 || divisor < 0) {
        throw detail::UsageError("operands must be non-negative");
      }
      const DividerIo io = io_from_registers(c);
      const auto res =
          run_division(c, io, static_cast<std::uint64_t>(dividend),
                       static_cast<std::uint64_t>(divisor));
      if (as_json) {
        out << nlohmann::json{{"dividend", dividend},
                              {"divisor", divisor},
                              {"quotient", res.quotient},
                              {"remainder", res.remainder}}
                   .dump()
            << '\n';
      } else {
        out << "q=" << res.quotient << " r=" << res.remainder << '\n';
      }
      return 0;
    }
    if (*table) {
      detail::require_n(n);
      auto sel = cost::default_selections();
      if (radix) {
        sel.push_back({DividerKind::Restoring, "higher_radix", radix});
        sel.push_back({DividerKind::NonRestoring, "higher_radix", radix});
      }
      const auto rows =
          cost::comparison_table(n, sel, cost::rounding_from_string(rounding));
      const auto aud = cost::rounding_audit(n, radix);
      if (format == "json") {
        out << nlohmann::json{{"n", n},
                              {"rounding", rounding},
                              {"omega_fractional", "ceil"},
                              {"reference", std::string(cost::kNewtonRaphson.name)},
                              {"rows", cost::to_json(rows)},
                              {"audit", cost::to_json(aud)}}
                   .dump()
            << '\n';
      } else {
        out << (audit ? cost::audit_csv(aud) : cost::to_csv(rows));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace qdiv::cli

#endif  // QDIV_CLI_HPP
