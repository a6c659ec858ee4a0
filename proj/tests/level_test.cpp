#include <gtest/gtest.h>

#include <algorithm>

#include "levelcert/error.hpp"
#include "levelcert/koszul.hpp"
#include "levelcert/level.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace levelcert;
using namespace testing_support;

namespace {

std::vector<Polynomial> polys(const RingHandle& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(R->parse(t));
  return out;
}

ChainComplex koszul_on(const RingHandle& R, std::initializer_list<const char*> gens) {
  return koszul(R, polys(R, gens)).complex;
}

ChainComplex free_rank_one(const RingHandle& R) { return ChainComplex::make(R, 0, {{0}}, {}); }

ChainComplex resolution_of_k(const RingHandle& R, int steps) {
  ResolveOptions ro;
  ro.check_complete = false;
  return resolve_module(residue_field(R), steps, ro).complex;
}

const BoundCertificate* find_kind(const std::vector<BoundCertificate>& certs, BoundKind k) {
  for (const auto& c : certs) {
    if (c.kind == k) return &c;
  }
  return nullptr;
}

// Gap bound computed only from the expanded k-linear model: homology
// lengths, and freeness of coker d_b read off from its length and number of
// minimal generators.
int oracle_gap_value(const oracle::ExpandedRing& E, const ChainComplex& F) {
  auto h = oracle::homology_lengths(E, F);
  if (std::all_of(h.begin(), h.end(), [](auto& kv) { return kv.second == 0; })) return 0;
  int best = 1;
  for (int b = F.lo() + 1; b <= F.hi(); ++b) {
    int r = F.rank(b - 1);
    if (r == 0 || F.rank(b) == 0) continue;
    PolyMatrix d = F.differential(b);
    std::int64_t len = static_cast<std::int64_t>(r) * E.dim() - oracle::rank(oracle::expand(E, d), E.p());
    oracle::Mat constants(static_cast<std::size_t>(r), oracle::Vec(static_cast<std::size_t>(d.cols), 0));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < d.cols; ++j) constants[i][j] = d.at(i, j).constant_term();
    }
    std::int64_t mu = r - oracle::rank(constants, E.p());
    if (len == mu * E.dim()) continue;
    int a = b - 1;
    while (a >= F.lo() && h[a] == 0) --a;
    if (a < F.lo()) continue;
    best = std::max(best, b - a + 1);
  }
  return best;
}

}  // namespace

TEST(UpperBound, Examples) {
  auto R = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  EXPECT_EQ(upper_bound(koszul_on(R, {"x", "y"})).value, 3);
  auto N = ring({"x"}, {"x^2"});
  auto one = free_rank_one(N);
  EXPECT_EQ(upper_bound(cone(ChainMap::identity(one)).complex).value, 0);
  EXPECT_EQ(upper_bound(chain_of(N, "x", 2)).value, 3);
}

TEST(GapBound, ThreeTermComplex) {
  auto N = ring({"x"}, {"x^2"});
  auto c = lower_bound_gap(chain_of(N, "x", 2));
  EXPECT_EQ(c.value, 3);
  ASSERT_TRUE(c.ghost.has_value());
  EXPECT_EQ(c.ghost->a, 0);
  EXPECT_EQ(c.ghost->b, 2);
  EXPECT_EQ(c.ghost->ghosts.size(), 2u);
  ASSERT_TRUE(c.syzygy_h0.has_value());
  EXPECT_FALSE(is_free(*c.syzygy_h0));
  std::vector<std::string> log;
  EXPECT_TRUE(replay(c, &log));
}

TEST(GapBound, TrivialAndExact) {
  auto N = ring({"x"}, {"x^2"});
  auto one = free_rank_one(N);
  EXPECT_EQ(lower_bound_gap(one).value, 1);
  EXPECT_EQ(lower_bound_gap(cone(ChainMap::identity(one)).complex).value, 0);
}

TEST(GapBound, TruncatedResolution) {
  auto N = ring({"x"}, {"x^2"});
  auto F = resolution_of_k(N, 5);
  oracle::ExpandedRing E(*N);
  auto c = lower_bound_gap(F);
  EXPECT_EQ(c.value, 6);
  EXPECT_EQ(c.value, oracle_gap_value(E, F));
  EXPECT_TRUE(replay(c));
}

TEST(GapBound, AgreesWithOracleOnRandomComplexes) {
  std::mt19937 rng(424242);
  int checked = 0, with_witness = 0;
  for (const auto& R : oracle::zoo()) {
    oracle::ExpandedRing E(*R);
    for (int t = 0; t < 3; ++t) {
      auto F = oracle::random_complex(R, E, rng, 2, 3);
      auto c = lower_bound_gap(F);
      EXPECT_EQ(c.value, oracle_gap_value(E, F)) << R->describe();
      EXPECT_TRUE(replay(c)) << R->describe();
      ++checked;
      with_witness += c.ghost.has_value();
    }
  }
  EXPECT_GE(checked, 20);
  EXPECT_GE(with_witness, 5);
}

TEST(GapsMap, CanonicalElementInstance) {
  auto R = ring({"x", "y"}, {"x*y"});
  auto F = koszul_on(R, {"x + y"});
  auto G = resolution_of_k(R, 1);
  auto eta = lift_map(F, G, identity_matrix(R->poly(), 1));
  auto c = lower_bound_gapsmap(F, eta, ideal(R, {"x + y"}), 0, 1);
  EXPECT_EQ(c.value, 2);
  EXPECT_GE(c.witness_column, 0);
  EXPECT_TRUE(replay(c));
}

TEST(GapsMap, ZeroMapGivesNoBound) {
  auto R = ring({"x", "y"}, {"x*y"});
  auto F = koszul_on(R, {"x + y"});
  auto G = resolution_of_k(R, 1);
  auto c = lower_bound_gapsmap(F, ChainMap::zero(F, G), ideal(R, {"x + y"}), 0, 1);
  EXPECT_EQ(c.value, 0);
  EXPECT_FALSE(c.ghost.has_value());
}

TEST(GapsMap, CheckedPreconditions) {
  auto S = ring({"x", "y"}, {});
  auto F = koszul_on(S, {"x"});
  auto G = resolution_of_k(S, 1);
  auto eta = lift_map(F, G, identity_matrix(S->poly(), 1));
  EXPECT_THROW(lower_bound_gapsmap(F, eta, ideal(S, {"y"}), 0, 1), PreconditionError);
  // the truncated resolution has H_1 != 0
  EXPECT_THROW(lower_bound_gapsmap(F, eta, ideal(S, {"x"}), 0, 2), PreconditionError);
}

TEST(GapsMap, KappaSpecialCase) {
  for (const auto& R : oracle::zoo()) {
    auto I = maximal_ideal(R);
    auto F = koszul(I).complex;
    auto nonzero = kappa_nonzero_degrees(I, F.hi());
    int expected = 1;
    for (int b : nonzero) expected = std::max(expected, b + 1);
    auto c = kappa_bound(F, I);
    EXPECT_EQ(c.value, expected) << R->describe();
    EXPECT_EQ(c.value, R->edim() + 1) << R->describe();
    EXPECT_TRUE(replay(c)) << R->describe();
  }
}

TEST(MinimalGap, Examples) {
  auto S = ring({"x", "y"}, {});
  auto c = lower_bound_minimal_gap(koszul_on(S, {"x", "y"}));
  EXPECT_EQ(c.value, 3);
  EXPECT_TRUE(replay(c));
  auto c2 = lower_bound_minimal_gap(koszul_on(S, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(c2.value, 3);
  ASSERT_TRUE(c2.ghost.has_value());
  EXPECT_EQ(c2.ghost->a, 1);
  EXPECT_EQ(c2.ghost->b, 3);
  auto zero_diff = ChainComplex::make(S, 0, {{0}, {1}}, {PolyMatrix(1, 1)});
  EXPECT_EQ(lower_bound_minimal_gap(zero_diff).value, 1);
}

TEST(MinimalGap, MinimizesInput) {
  auto N = ring({"x"}, {"x^2"});
  auto one = free_rank_one(N);
  auto F = direct_sum(chain_of(N, "x", 2), cone(ChainMap::identity(one)).complex);
  auto c = lower_bound_minimal_gap(F);
  EXPECT_EQ(c.value, 3);
  EXPECT_EQ(c.transcript.at(1), "input is not minimal; minimized first");
}

TEST(ModuleLevel, Examples) {
  auto S = ring({"x", "y"}, {});
  auto k = level_of_module(residue_field(S), 10);
  EXPECT_TRUE(k.exact);
  EXPECT_EQ(k.lower, 3);
  EXPECT_EQ(k.upper, 3);
  auto free = level_of_module(free_module(S, {0, 1}), 10);
  EXPECT_TRUE(free.exact);
  EXPECT_EQ(free.lower, 1);
  auto N = ring({"x"}, {"x^2"});
  auto inf = level_of_module(residue_field(N), 5);
  EXPECT_FALSE(inf.exact);
  EXPECT_EQ(inf.lower, 6);
  EXPECT_FALSE(inf.upper.has_value());
  for (const auto& c : inf.certificates) EXPECT_TRUE(replay(c));
}

TEST(ModuleLevel, PolynomialRingInThreeVariables) {
  auto S = ring({"x", "y", "z"}, {});
  auto k = level_of_module(residue_field(S), 10);
  EXPECT_TRUE(k.exact);
  EXPECT_EQ(k.lower, 4);
  auto q = level_of_module(quotient_module(ideal(S, {"x"})), 10);
  EXPECT_TRUE(q.exact);
  EXPECT_EQ(q.lower, 2);
  auto s = level_of_module(free_module(S, {0}), 10);
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.lower, 1);
  auto zero = level_of_module(quotient_module(ideal(S, {"1"})), 10);
  EXPECT_TRUE(zero.exact);
  EXPECT_EQ(zero.lower, 0);
}

TEST(EveryN, Examples) {
  auto N = ring({"x"}, {"x^2"});
  auto e0 = everyn_example(N, 0);
  EXPECT_EQ(e0.complex.hi(), 0);
  EXPECT_EQ(e0.upper.value, 1);
  EXPECT_EQ(e0.lower.value, 1);
  auto e2 = everyn_example(N, 2);
  EXPECT_EQ(e2.complex, chain_of(N, "x", 2));
  EXPECT_EQ(e2.upper.value, 3);
  EXPECT_EQ(e2.lower.value, 3);
}

TEST(EveryN, SquareOfMaximalIdeal) {
  auto R = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto e = everyn_example(R, 3);
  std::vector<int> betti;
  for (int i = 0; i <= 3; ++i) betti.push_back(e.complex.rank(i));
  EXPECT_EQ(betti, (std::vector<int>{1, 2, 4, 8}));
  EXPECT_EQ(e.upper.value, 4);
  EXPECT_EQ(e.lower.value, 4);
  oracle::ExpandedRing E(*R);
  auto h = oracle::homology_lengths(E, e.complex);
  EXPECT_EQ(h[1], 0);
  EXPECT_EQ(h[2], 0);
  EXPECT_EQ(oracle_gap_value(E, e.complex), 4);
}

TEST(EveryN, RegularRingRejectsLargeN) {
  auto S = ring({"x"}, {});
  EXPECT_EQ(everyn_example(S, 1).lower.value, 2);
  EXPECT_THROW(everyn_example(S, 2), PreconditionError);
}

TEST(CitedIntersection, Examples) {
  auto S = ring({"x", "y"}, {});
  auto c = nit_cited_bound(koszul_on(S, {"x", "y"}), ideal(S, {"x", "y"}));
  EXPECT_EQ(c.value, 3);
  EXPECT_FALSE(c.certified());
  EXPECT_TRUE(replay(c));
  auto c2 = nit_cited_bound(koszul_on(S, {"x"}), ideal(S, {"x"}));
  EXPECT_EQ(c2.value, 2);
  auto c3 = nit_cited_bound(free_rank_one(S), ideal(S, {"x"}));
  EXPECT_EQ(c3.value, 0);
  EXPECT_NE(c3.transcript.back().find("kills no minimal generator"), std::string::npos);
}

TEST(CitedIntersection, InfiniteLengthHomologyFailsHypothesis) {
  auto S = ring({"x", "y"}, {});
  // H_1 of 0 -> S(-1) -0-> S -> 0 is S(-1)
  auto F = ChainComplex::make(S, 0, {{0}, {1}}, {PolyMatrix(1, 1)});
  auto c = nit_cited_bound(F, ideal(S, {"x", "y"}));
  EXPECT_EQ(c.value, 0);
  EXPECT_EQ(c.transcript.back(), "H_1 does not have finite length");
}

TEST(Report, KoszulOnMaximalIdeal) {
  auto R = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  ReportOptions opts;
  opts.koszul = KoszulTag{polys(R, {"x", "y"}), 1, polys(R, {"x", "y"})};
  auto rep = level_report(koszul_on(R, {"x", "y"}), opts);
  EXPECT_TRUE(rep.exact);
  EXPECT_EQ(rep.lower, 3);
  EXPECT_EQ(rep.upper, 3);
  ASSERT_NE(find_kind(rep.certificates, BoundKind::kappa), nullptr);
  EXPECT_EQ(find_kind(rep.certificates, BoundKind::kappa)->value, 3);
  ASSERT_NE(find_kind(rep.certificates, BoundKind::length_upper), nullptr);
  for (const auto& c : rep.certificates) EXPECT_TRUE(replay(c)) << to_string(c.kind);
}

TEST(Report, SystemOfParameters) {
  auto R = ring({"x", "y"}, {"x*y"});
  ReportOptions opts;
  opts.koszul = KoszulTag{polys(R, {"x + y"}), 1, polys(R, {"x + y"})};
  auto rep = level_report(koszul_on(R, {"x + y"}), opts);
  EXPECT_TRUE(rep.exact);
  EXPECT_EQ(rep.lower, 2);
  auto gm = find_kind(rep.certificates, BoundKind::gapsmap);
  ASSERT_NE(gm, nullptr);
  EXPECT_EQ(gm->value, 2);
  EXPECT_TRUE(replay(*gm));
  auto sop = find_kind(rep.cited, BoundKind::cited_dim_sop);
  ASSERT_NE(sop, nullptr);
  EXPECT_EQ(sop->value, 2);
}

TEST(Report, KoszulOnSquareOfRegularSequence) {
  auto S = ring({"x", "y"}, {});
  ReportOptions opts;
  opts.koszul = KoszulTag{polys(S, {"x", "y"}), 2, polys(S, {"x^2", "x*y", "y^2"})};
  auto rep = level_report(koszul_on(S, {"x^2", "x*y", "y^2"}), opts);
  EXPECT_EQ(rep.lower, 3);
  EXPECT_EQ(rep.upper, 4);
  EXPECT_FALSE(rep.exact);
  auto power = find_kind(rep.cited, BoundKind::cited_power);
  ASSERT_NE(power, nullptr);
  EXPECT_EQ(power->value, 3);
  EXPECT_TRUE(std::any_of(rep.notes.begin(), rep.notes.end(),
                          [](auto& n) { return n.find("regular sequence") != std::string::npos; }));
}

TEST(Report, RejectsMismatchedTag) {
  auto S = ring({"x", "y"}, {});
  ReportOptions opts;
  opts.koszul = KoszulTag{polys(S, {"x"}), 1, polys(S, {"x"})};
  EXPECT_THROW(level_report(koszul_on(S, {"x", "y"}), opts), PreconditionError);
}

TEST(Report, SequentialMatchesParallel) {
  auto N = ring({"x"}, {"x^2"});
  auto F = chain_of(N, "x", 3);
  ReportOptions seq;
  seq.parallel = false;
  auto a = level_report(F);
  auto b = level_report(F, seq);
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.upper, b.upper);
  EXPECT_EQ(a.certificates.size(), b.certificates.size());
}

TEST(LevelProperties, EveryNFamilyIsExact) {
  auto N = ring({"x"}, {"x^2"});
  for (int n = 0; n <= 5; ++n) {
    auto rep = level_report(everyn_example(N, n).complex);
    EXPECT_TRUE(rep.exact) << n;
    EXPECT_EQ(rep.lower, n + 1);
    EXPECT_EQ(rep.upper, n + 1);
  }
}

TEST(LevelProperties, CertificatesReplayAndBoundsAreOrdered) {
  std::mt19937 rng(9001);
  for (const auto& R : oracle::zoo()) {
    oracle::ExpandedRing E(*R);
    for (int t = 0; t < 2; ++t) {
      auto F = oracle::random_complex(R, E, rng, 2, 3);
      ReportOptions opts;
      opts.ideals = {maximal_ideal(R)};
      auto rep = level_report(F, opts);
      ASSERT_TRUE(rep.upper.has_value());
      EXPECT_LE(rep.lower, *rep.upper);
      for (const auto& c : rep.certificates) EXPECT_TRUE(replay(c)) << to_string(c.kind) << " " << R->describe();
      for (const auto& c : rep.cited) EXPECT_LE(c.value, *rep.upper);
    }
  }
}

TEST(LevelProperties, SplitExactSummandsChangeNothing) {
  std::mt19937 rng(31337);
  for (const auto& R : oracle::zoo()) {
    oracle::ExpandedRing E(*R);
    auto F = oracle::random_complex(R, E, rng, 2, 3);
    auto C = cone(ChainMap::identity(free_rank_one(R))).complex;
    auto a = level_report(F);
    auto b = level_report(direct_sum(F, C));
    EXPECT_EQ(a.lower, b.lower) << R->describe();
    EXPECT_EQ(a.upper, b.upper) << R->describe();
    EXPECT_EQ(a.exact, b.exact) << R->describe();
  }
}

TEST(LevelProperties, BaseChangeDoesNotRaiseUpperBound) {
  auto S = ring({"x", "y"}, {});
  std::vector<ChainComplex> sources = {koszul_on(S, {"x", "y"}), koszul_on(S, {"x^2", "x*y", "y^2"}),
                                       koszul_on(S, {"x"}), koszul_on(S, {"x + y"})};
  std::vector<RingHandle> targets = {ring({"x", "y"}, {"x^2", "x*y", "y^2"}), ring({"x", "y"}, {"x*y"}),
                                     ring({"x", "y"}, {"x^2", "y^2"})};
  for (const auto& F : sources) {
    for (const auto& R : targets) {
      auto G = tensor_base_change(F, R, polys(R, {"x", "y"}));
      EXPECT_LE(upper_bound(G).value, upper_bound(F).value) << R->describe();
    }
  }
}

TEST(Replay, RejectsTamperedCertificates) {
  auto N = ring({"x"}, {"x^2"});
  auto c = lower_bound_gap(chain_of(N, "x", 2));
  ASSERT_TRUE(replay(c));
  auto wrong_value = c;
  wrong_value.value = 4;
  EXPECT_FALSE(replay(wrong_value));
  auto free_h0 = c;
  free_h0.syzygy_h0 = free_module(N, {0});
  EXPECT_FALSE(replay(free_h0));
  auto short_sequence = c;
  short_sequence.ghost->ghosts.pop_back();
  EXPECT_FALSE(replay(short_sequence));
  // the identity of G' is not ghost: H_0(G') = k
  auto not_ghost = c;
  not_ghost.ghost->ghosts[0] = ChainMap::identity(c.ghost->to_quotient.target());
  EXPECT_FALSE(replay(not_ghost));
}
