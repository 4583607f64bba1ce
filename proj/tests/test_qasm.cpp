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

#include <random>
#include <string>

#include "support.hpp"

namespace qdiv {
namespace {

TEST(Export, NotGateLine) {
  Circuit c(1);
  c.x(QubitId(0));
  EXPECT_NE(export_text(c).find("x q[0];"), std::string::npos);
}

TEST(Export, EmptyCircuitIsHeaderOnly) {
  const std::string text = export_text(Circuit());
  EXPECT_EQ(text.find("x "), std::string::npos);
  EXPECT_EQ(text.find("cx "), std::string::npos);
  EXPECT_EQ(text.rfind(std::string(kQasmHeader), 0), 0u);
}

TEST(Export, Deterministic) {
  const Divider d = build_divider({3, vbe_adder(), DividerKind::Restoring});
  EXPECT_EQ(export_text(d.circuit), export_text(d.circuit));
  const Divider again =
      build_divider({3, vbe_adder(), DividerKind::Restoring});
  EXPECT_EQ(export_text(d.circuit), export_text(again.circuit));
}

TEST(Export, UsesRegisterNames) {
  Circuit c;
  c.add_register("a", 2);
  c.add_register("b", 1);
  c.ccx(QubitId(0), QubitId(1), QubitId(2));
  const std::string text = export_text(c);
  EXPECT_NE(text.find("qubit[2] a;"), std::string::npos);
  EXPECT_NE(text.find("qubit[1] b;"), std::string::npos);
  EXPECT_NE(text.find("ccx a[0], a[1], b[0];"), std::string::npos);
}

TEST(Import, RejectsUnknownGate) {
  try {
    import_text("OPENQASM 3.0;\nqubit[1] q;\nh q[0];\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("unknown gate"), std::string::npos);
  }
}

TEST(Import, RejectsEmptyDocument) {
  try {
    import_text("");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing declarations"),
              std::string::npos);
  }
}

TEST(Import, RejectsUndeclaredRegister) {
  EXPECT_THROW(import_text("OPENQASM 3.0;\nqubit[1] q;\nx r[0];\n"),
               ParseError);
}

TEST(Import, RejectsMalformedLines) {
  const char* bad[] = {
      "OPENQASM 3.0;\nqubit[2] q;\nx q[2];\n",          // index range
      "OPENQASM 3.0;\nqubit[2] q;\ncx q[0];\n",         // arity
      "OPENQASM 3.0;\nqubit[2] q;\nx q[0]\n",           // semicolon
      "OPENQASM 3.0;\nqubit[2] q;\ncx q[0], q[0];\n",   // duplicate
      "qubit[2] q;\nx q[0];\n",                         // header
      "OPENQASM 3.0;\nqubit[2] q;\nx q[0];\nqubit[1] r;\n",
  };
  for (const char* text : bad) {
    EXPECT_THROW(import_text(text), ParseError) << text;
  }
}

TEST(Import, AcceptsCommentsAndBlankLines) {
  const Circuit c = import_text(
      "OPENQASM 3.0;\n// comment\ninclude \"stdgates.inc\";\n\n"
      "qubit[3] q;  // wires\nccx q[0], q[1], q[2];\n");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0], Gate::ccx(QubitId(0), QubitId(1), QubitId(2)));
}

TEST(RoundTrip, RandomCircuits) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit c = trial % 2 ? testing::random_circuit(rng, 3 + trial % 9,
                                                          trial % 50)
                                : testing::random_builder_circuit(rng);
    const std::string text = export_text(c);
    const Circuit back = import_text(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(export_text(back), text);
  }
}

TEST(RoundTrip, BuiltDividers) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto kind : {DividerKind::NonRestoring, DividerKind::Restoring}) {
      for (const auto& name : gate_level_adders()) {
        const Divider d = build_divider({n, adder_by_name(name), kind});
        EXPECT_EQ(import_text(export_text(d.circuit)), d.circuit);
      }
    }
  }
}

}  // namespace
}  // namespace qdiv
