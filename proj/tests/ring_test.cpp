#include <gtest/gtest.h>

#include "levelcert/error.hpp"
#include "levelcert/graded.hpp"
#include "levelcert/ring.hpp"

using namespace levelcert;

namespace {

RingHandle ring(std::vector<std::string> vars, std::vector<std::string> rels) {
  return make_ring(101, std::move(vars), MonomialOrder::grevlex, rels);
}

Ideal ideal(const RingHandle& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto t : gens) g.push_back(R->parse(t));
  return Ideal(R, g);
}

}  // namespace

TEST(MakeRing, DualNumbers) {
  auto R = ring({"x"}, {"x^2"});
  EXPECT_EQ(R->edim(), 1);
  EXPECT_EQ(R->krull_dim(), 0);
  EXPECT_TRUE(R->artinian());
  EXPECT_EQ(R->k_length(), 2);
  EXPECT_EQ(R->top_degree(), 1);
}

TEST(MakeRing, PolynomialRing) {
  auto R = ring({"x", "y"}, {});
  EXPECT_EQ(R->edim(), 2);
  EXPECT_EQ(R->krull_dim(), 2);
  EXPECT_FALSE(R->k_length().has_value());
}

TEST(MakeRing, NodeHasDimensionOne) {
  auto R = ring({"x", "y"}, {"x*y"});
  EXPECT_EQ(R->edim(), 2);
  EXPECT_EQ(R->krull_dim(), 1);
}

TEST(MakeRing, RejectsLinearAndInhomogeneousRelations) {
  EXPECT_THROW(ring({"x", "y"}, {"x"}), MalformedInput);
  EXPECT_THROW(ring({"x", "y"}, {"x^2 + y"}), MalformedInput);
  EXPECT_THROW(make_ring(100, {"x"}, MonomialOrder::grevlex, {}), MalformedInput);
}

TEST(MakeRing, CanonicalRelations) {
  auto a = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto b = ring({"x", "y"}, {"2*x^2 + x*y", "x*y", "y^2", "x^2"});
  EXPECT_EQ(a->relations(), b->relations());
  EXPECT_EQ(a->k_length(), 3);
}

TEST(Reduce, Examples) {
  auto R = ring({"x"}, {"x^2"});
  EXPECT_EQ(R->reduce(R->poly().parse("x^2 + x")), R->poly().parse("x"));
  auto N = ring({"x", "y"}, {"x*y"});
  EXPECT_TRUE(N->reduce(N->poly().parse("x^2*y + x*y^2")).is_zero());
  EXPECT_TRUE(N->reduce(Polynomial{}).is_zero());
}

TEST(Beta, Examples) {
  auto S = ring({"x", "y"}, {});
  EXPECT_EQ(beta(ideal(S, {"x", "y"})), 2);
  EXPECT_EQ(beta(ideal(S, {"x^2", "x*y", "y^2"})), 3);
  auto T = ring({"x"}, {});
  EXPECT_EQ(beta(ideal(T, {"x", "x^2"})), 1);
  EXPECT_THROW(beta(ideal(T, {"1"})), PreconditionError);
}

TEST(Beta, RedundantLinearCombination) {
  auto S = ring({"x", "y"}, {});
  EXPECT_EQ(beta(ideal(S, {"x", "y", "x + y", "x*y"})), 2);
}

TEST(DimQuotient, Examples) {
  auto S = ring({"x", "y"}, {});
  EXPECT_EQ(dim_quotient(ideal(S, {"x"})), 1);
  EXPECT_EQ(dim_quotient(ideal(S, {"x", "y"})), 0);
  auto N = ring({"x", "y"}, {"x*y"});
  EXPECT_EQ(dim_quotient(ideal(N, {"x + y"})), 0);
  EXPECT_EQ(dim_quotient(ideal(N, {"1"})), -1);
}

TEST(IdealPower, SquareOfMaximal) {
  auto S = ring({"x", "y"}, {});
  auto I2 = ideal_power(maximal_ideal(S), 2);
  EXPECT_EQ(beta(I2), 3);
  EXPECT_TRUE(I2.contains(S->parse("x*y")));
  EXPECT_FALSE(I2.contains(S->parse("x")));
}

TEST(GradedPieces, DimensionsMatchHilbertFunction) {
  auto R = ring({"x", "y", "z"}, {"x^2", "y*z"});
  GradedPieces pieces(*R);
  for (int d = 0; d < 6; ++d) EXPECT_EQ(pieces.dim(d), R->hilbert().value(d)) << d;
  EXPECT_EQ(pieces.dim(-1), 0);
}

TEST(GradedPieces, CoordinatesRoundTrip) {
  auto R = ring({"x", "y"}, {"x*y"});
  GradedPieces pieces(*R);
  auto f = R->parse("3*x^3 - y^3");
  auto c = pieces.coords(f, 3);
  EXPECT_EQ(pieces.from_coords(3, c.data()), f);
}

TEST(GradedLinearSystem, SolvesDivision) {
  // find u with x*u = x^2*y over k[x,y]/(y^3)
  auto R = ring({"x", "y"}, {"y^3"});
  GradedPieces pieces(*R);
  GradedLinearSystem sys(pieces);
  int u = sys.add_unknown(2);
  int e = sys.add_equation(3, R->parse("x^2*y"));
  sys.add_term(e, R->parse("x"), u);
  auto sol = sys.solve();
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(R->reduce(R->poly().mul((*sol)[0], R->parse("x"))), R->parse("x^2*y"));
  GradedLinearSystem bad(pieces);
  int v = bad.add_unknown(2);
  int e2 = bad.add_equation(3, R->parse("y^2*y"));
  bad.add_term(e2, R->parse("x"), v);
  EXPECT_TRUE(bad.solve().has_value());  // y^3 = 0 in R
  GradedLinearSystem bad2(pieces);
  int w = bad2.add_unknown(2);
  int e3 = bad2.add_equation(3, R->parse("y^2*x + y^2*y"));
  bad2.add_term(e3, R->parse("y"), w);
  EXPECT_TRUE(bad2.solve().has_value());
  GradedLinearSystem bad3(pieces);
  int z = bad3.add_unknown(1);
  int e4 = bad3.add_equation(2, R->parse("y^2"));
  bad3.add_term(e4, R->parse("x"), z);
  EXPECT_FALSE(bad3.solve().has_value());
}

TEST(MinimalGenerators, ModuleColumns) {
  auto R = ring({"x", "y"}, {});
  // columns (x,0), (0,x), (y,-x), (x*y, 0): the last is y*(x,0)
  std::vector<std::vector<Polynomial>> cols = {
      {R->parse("x"), R->parse("0")},
      {R->parse("0"), R->parse("x")},
      {R->parse("y"), R->parse("-x")},
      {R->parse("x*y"), R->parse("0")},
  };
  EXPECT_EQ(minimal_generator_indices(*R, {0, 0}, cols), (std::vector<int>{0, 1, 2}));
}
