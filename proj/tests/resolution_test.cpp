#include <gtest/gtest.h>

#include "levelcert/resolution.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace levelcert;
using namespace testing_support;

TEST(Resolve, ResidueFieldOfDualNumbers) {
  auto R = ring({"x"}, {"x^2"});
  auto res = resolve_module(residue_field(R), 4);
  EXPECT_EQ(res.betti, (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_FALSE(res.complete);
  EXPECT_TRUE(res.complex.is_minimal());
}

TEST(Resolve, ResidueFieldWithSquareZeroMaximalIdeal) {
  auto R = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto res = resolve_module(residue_field(R), 3);
  EXPECT_EQ(res.betti, (std::vector<int>{1, 2, 4, 8}));
  EXPECT_EQ(res.complex.twists(3), std::vector<int>(8, 3));
}

TEST(Resolve, FreeModule) {
  auto R = ring({"x"}, {"x^2"});
  auto res = resolve_module(free_module(R, {0}), 5);
  EXPECT_EQ(res.betti, std::vector<int>{1});
  EXPECT_TRUE(res.complete);
}

TEST(Resolve, KoszulResolutionOverPolynomialRing) {
  auto S = ring({"x", "y"}, {});
  auto res = resolve_module(residue_field(S), 5);
  EXPECT_EQ(res.betti, (std::vector<int>{1, 2, 1}));
  EXPECT_TRUE(res.complete);
  EXPECT_EQ(res.complex.twists(2), std::vector<int>{2});
}

TEST(Resolve, StepZero) {
  auto R = ring({"x"}, {"x^2"});
  auto res = resolve_module(residue_field(R), 0);
  EXPECT_EQ(res.betti, std::vector<int>{1});
  EXPECT_FALSE(res.complete);
}

TEST(Prune, RemovesRedundantGenerators) {
  auto S = ring({"x", "y"}, {});
  // coker of [[1, 0], [x, y]] on two generators of degree 0 and 1... the unit
  // entry eliminates the first generator; what remains is S/(y) shifted
  auto M = ModulePresentation::make(S, {0, 1}, mat(S, {{"x", "0"}, {"-1", "y"}}));
  auto P = prune(M);
  EXPECT_EQ(P.twists, std::vector<int>{0});
  ASSERT_EQ(P.presentation.cols, 1);
  EXPECT_EQ(P.presentation.at(0, 0), S->parse("x*y"));
}

TEST(IsFree, Examples) {
  auto S = ring({"x", "y"}, {});
  EXPECT_TRUE(is_free(free_module(S, {0, 0})));
  auto R = ring({"x"}, {"x^2"});
  EXPECT_FALSE(is_free(residue_field(R)));
  EXPECT_FALSE(is_free(ModulePresentation::make(S, {0}, mat(S, {{"x"}}))));
  // a unit relation kills a generator; the rest is free
  EXPECT_TRUE(is_free(ModulePresentation::make(S, {0, 0}, mat(S, {{"1"}, {"0"}}))));
}

TEST(PdProbe, Examples) {
  auto S = ring({"x", "y"}, {});
  auto e = pd_probe(residue_field(S), 5);
  EXPECT_TRUE(e.exact);
  EXPECT_EQ(e.value, 2);
  auto R = ring({"x"}, {"x^2"});
  auto a = pd_probe(residue_field(R), 5);
  EXPECT_FALSE(a.exact);
  EXPECT_EQ(a.value, 6);
  auto c = pd_probe(ModulePresentation::make(S, {0}, mat(S, {{"x"}})), 5);
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.value, 1);
}

TEST(PdProbe, FreeIffPdZero) {
  auto S = ring({"x", "y"}, {"x*y"});
  for (const auto& M : {free_module(S, {0, 2}), residue_field(S),
                        ModulePresentation::make(S, {0, -1}, mat(S, {{"1"}, {"x"}}))}) {
    auto p = pd_probe(M, 0);
    EXPECT_EQ(is_free(M), p.exact && p.value <= 0);
  }
}

TEST(ResolutionOfComplex, MinimizesAndCollapsesExact) {
  auto R = ring({"x"}, {"x^2"});
  auto F = chain_of(R, "x", 2);
  EXPECT_EQ(resolution_of_complex(F), F);
  auto C = cone(ChainMap::identity(chain_of(R, "x", 0))).complex;
  EXPECT_TRUE(resolution_of_complex(C).empty_window());
  auto D = resolution_of_complex(direct_sum(F, C));
  EXPECT_EQ(D, F);
}

TEST(Syzygy, TruncationOfThreeTermComplex) {
  auto R = ring({"x"}, {"x^2"});
  auto F = chain_of(R, "x", 2);
  auto om = syzygy(F, 1);
  EXPECT_EQ(om.complex.lo(), 0);
  EXPECT_EQ(om.complex.hi(), 1);
  EXPECT_EQ(om.h0.twists, std::vector<int>{1});
  EXPECT_FALSE(is_free(om.h0));
  auto low = syzygy(F, -2);
  EXPECT_EQ(low.complex.lo(), 2);
  EXPECT_EQ(low.h0.generators(), 0);
}

TEST(Syzygy, ExactComplexCollapses) {
  auto R = ring({"x"}, {"x^2"});
  auto C = cone(ChainMap::identity(chain_of(R, "x", 0))).complex;
  for (int n = -1; n <= 2; ++n) EXPECT_TRUE(is_free(syzygy(C, n).h0));
}

// Minimal and exact in positive degrees with H_0 = M: the ranks are the Tor dimensions.
TEST(Property, BettiNumbersAgainstOracle) {
  for (const auto& R : oracle::zoo()) {
    oracle::ExpandedRing E(*R);
    auto res = resolve_module(residue_field(R), 3);
    EXPECT_EQ(res.betti[1], R->edim()) << R->describe();
    EXPECT_TRUE(res.complex.is_minimal());
    auto h = oracle::homology_lengths(E, res.complex);
    EXPECT_EQ(h[0], 1) << R->describe();
    for (int i = 1; i < 3; ++i) EXPECT_EQ(h[i], 0) << R->describe() << " " << i;
  }
}
