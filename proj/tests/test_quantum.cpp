// Copyright 2026 The convwam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "convwam/io.hpp"
#include "convwam/pauli.hpp"
#include "convwam/quantum.hpp"
#include "support.hpp"

using namespace convwam;
using namespace convwam::testsupport;

namespace {

const std::vector<std::string> kPauli = {"I", "X", "Y", "Z"};

PolyMatrix y_matrix(const std::vector<std::vector<const char *>> &rows) {
  PolyMatrix m(kPauli);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = WeightPoly::parse(rows[i][j]);
  return m;
}

PolyMatrix in_y(const PolyMatrix &l) { return l.substituted({{Var::x, WeightPoly(1)}}); }

TEST(Pauli, ParseMultiplyAndWeights) {
  const PauliWord a = PauliWord::parse("XIZY");
  EXPECT_EQ(a.to_string(), "XIZY");
  EXPECT_EQ(a.weight(), 3u);
  EXPECT_EQ(a.letter(3), 2u);
  PauliWord b = a;
  b *= PauliWord::parse("ZIZI");
  EXPECT_EQ(b.to_string(), "YIIY");
  EXPECT_EQ(a.restricted({3, 0}).to_string(), "YX");
  EXPECT_EQ(tensor(PauliWord::parse("X"), PauliWord::parse("Z")).to_string(), "XZ");
  EXPECT_EQ(PauliWord::from_phi(a.phi()), a);
  EXPECT_THROW(PauliWord::parse("XQ"), InputError);
}

TEST(Pauli, SymplecticProductMatchesLetterCount) {
  for (unsigned x = 0; x < 16; ++x)
    for (unsigned y = 0; y < 16; ++y) {
      PauliWord a(2), b(2);
      a.set(0, x % 4);
      a.set(1, x / 4);
      b.set(0, y % 4);
      b.set(1, y / 4);
      unsigned anti = 0;
      for (std::size_t i = 0; i < 2; ++i) {
        const unsigned p = a.letter(i), q = b.letter(i);
        anti += p != 0 && q != 0 && p != q;
      }
      EXPECT_EQ(symplectic_product(a, b), anti % 2);
    }
}

TEST(Clifford, RandomSeedsAreValid) {
  std::mt19937_64 rng(3);
  for (std::size_t w = 1; w <= 6; ++w) {
    const CliffordSeed s = CliffordSeed::random(w, rng, 20);
    EXPECT_EQ(s.validate(), "");
  }
  const CliffordSeed bad({PauliWord::parse("Z")}, {PauliWord::parse("Z")});
  EXPECT_NE(bad.validate(), "");
}

TEST(QuantumExample, SeedOneMatrixAndReversedDual) {
  const EaqccSpec u1 = load_spec("u1.qcc");
  const PolyMatrix l = quantum_wam(u1);
  EXPECT_EQ(in_y(l), y_matrix({{"1", "y^2", "y", "y"},
                               {"y^2", "y^2", "y^2", "y^2"},
                               {"y^2", "y", "y", "y^2"},
                               {"y^2", "y", "y^2", "y"}}));
  const PolyMatrix t = quantum_macwilliams(l, u1.n, u1.k, u1.c, u1.m);
  EXPECT_EQ(t, l.transposed());
  EXPECT_EQ(t, quantum_wam(dual_spec(u1)));
}

TEST(QuantumExample, SeedOneStateDiagram) {
  const StateDiagram d = state_diagram(load_spec("u1.qcc"));
  std::set<std::string> edges;
  for (const auto &e : d.edges) edges.insert(d.nodes[e.from] + ">" + d.nodes[e.to] + ":" + e.logical + "," + e.physical);
  for (const char *want : {"X>Z:X,XZ", "X>X:I,XX", "X>I:Z,YZ", "X>Y:Y,YX", "Y>Z:Z,YY", "Y>Y:I,XI", "Y>I:X,XY",
                           "Y>X:Y,YI", "Z>Y:Z,ZZ", "Z>Z:I,IX", "Z>X:X,IZ", "Z>I:Y,ZX", "I>Z:Y,ZI"})
    EXPECT_TRUE(edges.count(want)) << want;
  EXPECT_EQ(d.edges.size(), 16u);
  EXPECT_NE(d.to_dot().find("digraph"), std::string::npos);
}

TEST(QuantumExample, EntanglementAssistedSeedTwo) {
  const EaqccSpec u2 = load_spec("u2-ea.qcc");
  const PolyMatrix l = quantum_wam(u2);
  EXPECT_EQ(in_y(l), y_matrix({{"1 + y^2", "0", "0", "y + y^2"},
                               {"0", "1 + y^2", "y + y^2", "0"},
                               {"0", "y + y^2", "1 + y^2", "0"},
                               {"y + y^2", "0", "0", "1 + y^2"}}));
  EXPECT_EQ(in_y(quantum_macwilliams(l, u2.n, u2.k, u2.c, u2.m)),
            y_matrix({{"1 + y + 2*y^2", "0", "0", "0"},
                      {"0", "y + 3*y^2", "0", "0"},
                      {"0", "0", "y + 3*y^2", "0"},
                      {"0", "0", "0", "1 + y + 2*y^2"}}));
}

TEST(QuantumExample, CodeRecoveredFromItsDual) {
  const EaqccSpec qcc = load_spec("u2-qcc.qcc");
  const EaqccSpec dual = dual_spec(qcc);
  const PolyMatrix ldual = quantum_wam(dual);
  EXPECT_EQ(in_y(ldual), y_matrix({{"1", "0", "0", "y"}, {"0", "y^2", "y^2", "0"}, {"0", "y^2", "y^2", "0"}, {"y", "0", "0", "y^2"}}));
  const PolyMatrix back = quantum_macwilliams(ldual, dual.n, dual.k, dual.c, dual.m);
  EXPECT_EQ(in_y(back), y_matrix({{"1 + y^2", "y + y^2", "y + y^2", "2*y"},
                                  {"y + y^2", "2*y^2", "2*y^2", "y + y^2"},
                                  {"y + y^2", "2*y^2", "2*y^2", "y + y^2"},
                                  {"2*y", "y + y^2", "y + y^2", "1 + y^2"}}));
  EXPECT_EQ(back, quantum_wam(qcc));
}

TEST(QuantumSpec, Validation) {
  EaqccSpec s = load_spec("u2-ea.qcc");
  s.out_physical = {0, 1};
  EXPECT_THROW(s.validate(), InputError);
  s = load_spec("u2-ea.qcc");
  s.in_ebit = {1};
  EXPECT_THROW(s.validate(), InputError);
  EXPECT_THROW(parse_eaqcc("n 1\nk 0\nc 0\nm 0\nIM:\nIL:\nIA: 1\nIE:\nIMout:\nIP: 1\nZ1 -> X\nX1 -> X\n"), InputError);
}

TEST(QuantumIo, FormatParseRoundTrip) {
  for (const char *name : {"u1.qcc", "u2-ea.qcc", "u2-qcc.qcc"}) {
    const EaqccSpec s = load_spec(name);
    const EaqccSpec again = parse_eaqcc(format_eaqcc(s));
    EXPECT_EQ(quantum_wam(again), quantum_wam(s)) << name;
    EXPECT_EQ(again.out_physical, s.out_physical);
  }
}

TEST(QuantumCheckMatrix, EntanglementAssistedRowsAreOrthogonal) {
  const PolyCheckMatrix pcm = poly_check_matrix(load_spec("u2-ea.qcc"), 6);
  ASSERT_TRUE(pcm.terminates);
  EXPECT_EQ(check_matrix_orthogonality(pcm), "");
  EXPECT_EQ(pcm.to_string(), "L 1 Z: ZI\nL 1 X: XX\nS^E 1 Z: ZZ\nS^E 1 X: IX\n");
}

TEST(QuantumCheckMatrix, ConstraintStabilizersCommute) {
  const EaqccSpec s = load_spec("u2-qcc.qcc");
  const auto gens = constraint_stabilizers(s);
  ASSERT_EQ(gens.size(), 2 * s.m + 2 * s.c + s.a());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) EXPECT_EQ(symplectic_product(gens[i], gens[j]), 0u);
}

struct SplitShape {
  std::size_t n, k, c, m;
};

class RandomQuantum : public ::testing::TestWithParam<SplitShape> {};

TEST_P(RandomQuantum, EnumerationMatchesSpanOracle) {
  const auto [n, k, c, m] = GetParam();
  std::mt19937_64 rng(n * 1000 + k * 100 + c * 10 + m);
  for (int t = 0; t < 3; ++t) {
    const EaqccSpec s = random_spec(n, k, c, m, rng);
    EXPECT_EQ(quantum_wam(s), brute_quantum_wam(s, true, false));
    EXPECT_EQ(stabilizer_wam(s), brute_quantum_wam(s, false, true));
  }
}

TEST_P(RandomQuantum, TransformMatchesDualAndInverts) {
  const auto [n, k, c, m] = GetParam();
  std::mt19937_64 rng(n * 1001 + k * 101 + c * 11 + m);
  for (int t = 0; t < 3; ++t) {
    const EaqccSpec s = random_spec(n, k, c, m, rng);
    const PolyMatrix l = quantum_wam(s);
    const PolyMatrix d = quantum_macwilliams(l, n, k, c, m);
    EXPECT_EQ(d, brute_quantum_wam(dual_spec(s), true, false));
    EXPECT_EQ(quantum_macwilliams(d, n, c, k, m), l);
  }
}

INSTANTIATE_TEST_SUITE_P(Splits, RandomQuantum,
                         ::testing::Values(SplitShape{1, 0, 0, 1}, SplitShape{1, 1, 0, 1}, SplitShape{2, 1, 1, 1},
                                           SplitShape{2, 0, 1, 2}, SplitShape{3, 1, 1, 1}, SplitShape{2, 1, 0, 2},
                                           SplitShape{3, 0, 0, 1}, SplitShape{2, 2, 0, 1}));

TEST(QuantumTransform, RejectsBadShapes) {
  const EaqccSpec s = load_spec("u1.qcc");
  const PolyMatrix l = quantum_wam(s);
  EXPECT_THROW(quantum_macwilliams(l, 2, 2, 1, 1), InputError);
  EXPECT_THROW(quantum_macwilliams(l, 2, 1, 1, 2), InputError);
}

}  // namespace
