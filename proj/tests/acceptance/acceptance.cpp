// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <tuple>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "levelcert/koszul.hpp"
#include "levelcert/level.hpp"
#include "oracle/oracle.hpp"

using namespace levelcert;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

RingHandle ring(std::vector<std::string> vars, std::vector<std::string> rels) {
  return make_ring(101, std::move(vars), MonomialOrder::grevlex, rels);
}

std::vector<Polynomial> polys(const RingHandle& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(R->parse(t));
  return out;
}

const BoundCertificate* find_kind(const std::vector<BoundCertificate>& cs, BoundKind k) {
  for (const auto& c : cs)
    if (c.kind == k) return &c;
  return nullptr;
}

bool squares_vanish(const ChainComplex& F) {
  const Ring& R = *F.ring();
  for (int i = F.lo() + 2; i <= F.hi(); ++i)
    if (!multiply(R, F.differential(i - 1), F.differential(i)).is_zero()) return false;
  return true;
}

// Every map ghost, consecutive, composite not null-homotopic.
bool ghosts_hold(const GhostWitness& w) {
  for (const auto& g : w.ghosts)
    if (!is_ghost(g)) return false;
  return !is_null_homotopic(w.composite).null_homotopic;
}

// Multiplication by variable v, from F to F with every twist lowered by one.
ChainMap times_variable(const ChainComplex& F, int v) {
  const RingHandle& R = F.ring();
  std::vector<std::vector<int>> tw;
  std::vector<PolyMatrix> ds;
  for (int i = F.lo(); i <= F.hi(); ++i) {
    auto t = F.twists(i);
    for (auto& x : t) x -= 1;
    tw.push_back(t);
    if (i > F.lo()) ds.push_back(F.differential(i));
  }
  auto G = ChainComplex::make(R, F.lo(), tw, ds);
  std::map<int, PolyMatrix> c;
  for (int i = F.lo(); i <= F.hi(); ++i) {
    PolyMatrix m(F.rank(i), F.rank(i));
    for (int j = 0; j < F.rank(i); ++j) m.at(j, j) = R->poly().variable(v);
    c[i] = m;
  }
  return ChainMap::make(F, G, c);
}

int criterion(int number, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    std::ostringstream t;
    t << "took " << secs << " s, limit " << limit_seconds << " s";
    out.require(false, t.str());
  }
  std::printf("AC%d %s (%.2f s) %s\n", number, out.pass ? "PASS" : "FAIL", secs, out.detail.str().c_str());
  std::fflush(stdout);
  return out.pass ? 0 : 1;
}

void ac1(Outcome& out) {
  std::vector<RingHandle> rings = {ring({"x"}, {"x^2"}), ring({"x", "y"}, {"x^2", "x*y", "y^2"}),
                                   ring({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"})};
  for (const auto& R : rings) {
    auto start = std::chrono::steady_clock::now();
    Ideal m = maximal_ideal(R);
    auto gens = minimal_generators(m);
    ReportOptions opts;
    opts.koszul = KoszulTag{gens, 1, gens};
    auto rep = level_report(koszul(R, gens).complex, opts);
    int want = R->edim() + 1;
    out.require(rep.exact && rep.lower == want && rep.upper == want,
                R->describe() + ": level " + std::to_string(rep.lower) + ", expected exact " + std::to_string(want));
    for (const auto& c : rep.certificates) out.require(replay(c), R->describe() + ": " + to_string(c.kind) + " replay");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < 10, R->describe() + " over 10 s");
    if (out.pass) out.detail << "edim " << R->edim() << " -> " << rep.lower << "; ";
  }
}

void ac2(Outcome& out) {
  auto N = ring({"x"}, {"x^2"});
  for (int n = 0; n <= 5; ++n) {
    auto e = everyn_example(N, n);
    std::string tag = "n=" + std::to_string(n);
    out.require(e.lower.value == n + 1 && e.upper.value == n + 1, tag + " not exact at n+1");
    out.require(replay(e.lower) && replay(e.upper), tag + " replay");
    if (n >= 1) {
      out.require(e.lower.ghost.has_value(), tag + " has no ghost witness");
      if (e.lower.ghost) {
        out.require(static_cast<int>(e.lower.ghost->ghosts.size()) == n, tag + " ghost count");
        out.require(ghosts_hold(*e.lower.ghost), tag + " ghost sequence");
      }
    }
  }
  if (out.pass) out.detail << "levels 1..6 exact, ghost sequences verified";
}

void ac3(Outcome& out) {
  auto S = ring({"x", "y", "z"}, {});
  struct Case {
    const char* name;
    ModulePresentation M;
    int level;
  };
  std::vector<Case> cases = {{"k", residue_field(S), 4},
                             {"S/(x)", quotient_module(Ideal(S, polys(S, {"x"}))), 2},
                             {"S", free_module(S, {0}), 1}};
  for (const auto& c : cases) {
    auto rep = level_of_module(c.M, 10);
    out.require(rep.exact && rep.lower == c.level && rep.upper == c.level,
                std::string(c.name) + ": got " + std::to_string(rep.lower) + ".." +
                    (rep.upper ? std::to_string(*rep.upper) : "inf"));
    if (out.pass) out.detail << c.name << " -> " << rep.lower << "; ";
  }
}

void ac4(Outcome& out) {
  auto R = ring({"x", "y"}, {"x*y"});
  auto g = polys(R, {"x + y"});
  ReportOptions opts;
  opts.koszul = KoszulTag{g, 1, g};
  auto rep = level_report(koszul(R, g).complex, opts);
  out.require(rep.exact && rep.lower == 2 && rep.upper == 2, "level " + std::to_string(rep.lower));
  auto gm = find_kind(rep.certificates, BoundKind::gapsmap);
  out.require(gm != nullptr && gm->value == 2, "no gapsmap certificate of value 2");
  if (gm) {
    out.require(replay(*gm), "gapsmap replay");
    out.require(gm->ghost && ghosts_hold(*gm->ghost), "gapsmap ghost sequence");
  }
  if (out.pass) out.detail << "exact 2 = dim R + 1, gapsmap replayed";
}

void ac5(Outcome& out) {
  auto S = ring({"x", "y"}, {});
  auto base = polys(S, {"x", "y"});
  Ideal I2 = ideal_power(Ideal(S, base), 2);
  auto gens = minimal_generators(I2);
  ReportOptions opts;
  opts.koszul = KoszulTag{base, 2, gens};
  auto rep = level_report(koszul(S, gens).complex, opts);
  out.require(rep.lower == 3, "certified lower " + std::to_string(rep.lower));
  out.require(rep.upper && *rep.upper == 4, "upper not 4");
  auto cp = find_kind(rep.cited, BoundKind::cited_power);
  out.require(cp != nullptr && cp->value == 3, "cited_power missing or not 3");
  // beta(I) + 1 for I = (x, y), which is a regular sequence
  out.require(rep.lower == static_cast<int>(base.size()) + 1, "lower differs from beta(I) + 1");
  for (const auto& c : rep.certificates) out.require(replay(c), to_string(c.kind) + " replay");
  if (out.pass) out.detail << "3 <= level <= 4, cited_power 3";
}

void ac6(Outcome& out) {
  auto N = ring({"x"}, {"x^2"});
  auto S = ring({"x", "y"}, {});
  auto D = ring({"x", "y"}, {"x*y"});
  auto M3 = ring({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"});
  std::vector<std::tuple<RingHandle, std::vector<Polynomial>, Polynomial>> cases = {
      {N, polys(N, {"x"}), N->parse("x")},
      {S, polys(S, {"x", "y"}), S->parse("x + y")},
      {D, polys(D, {"x + y"}), D->parse("x^2 + y^2")},
      {M3, polys(M3, {"x", "y", "z"}), M3->parse("x - z")},
  };
  int passed = 0;
  for (const auto& [R, gens, y] : cases) {
    auto rep = check_well_defined(R, gens, y);
    out.require(rep.pass, R->describe());
    passed += rep.pass;
  }
  out.require(passed >= 3, "fewer than 3 instances");
  if (out.pass) out.detail << passed << " instances";
}

void ac7(Outcome& out) {
  std::mt19937 rng(424242);
  int complexes = 0, verdicts = 0, homotopic = 0;
  for (const auto& R : oracle::zoo()) {
    if (R->k_length().value_or(7) > 6) continue;
    oracle::ExpandedRing E(*R);
    for (int trial = 0; trial < 7; ++trial) {
      auto F = oracle::random_complex(R, E, rng, 3, 1 + trial % 3);
      auto expect = oracle::homology_lengths(E, F);
      for (int i = F.lo(); i <= F.hi(); ++i) {
        auto got = homology(F, i).length;
        out.require(got && *got == expect[i], R->describe() + " homology length at " + std::to_string(i));
      }
      std::vector<ChainMap> maps = {ChainMap::identity(F), truncate_geq(F, 1).projection,
                                    times_variable(F, trial % R->nvars())};
      for (const auto& phi : maps) {
        bool ours = is_null_homotopic(phi).null_homotopic;
        out.require(ours == oracle::null_homotopic(E, phi), R->describe() + " null-homotopy verdict");
        homotopic += ours;
        ++verdicts;
      }
      auto C = cone(ChainMap::identity(F)).complex;
      bool ours = is_null_homotopic(ChainMap::identity(C)).null_homotopic;
      out.require(ours && oracle::null_homotopic(E, ChainMap::identity(C)), "cone of identity");
      homotopic += ours;
      ++verdicts;
      ++complexes;
    }
  }
  out.require(complexes >= 50, "only " + std::to_string(complexes) + " complexes");
  if (out.pass)
    out.detail << complexes << " complexes, " << verdicts << " homotopy verdicts (" << homotopic
               << " null-homotopic) agree";
}

void ac8(Outcome& out) {
  std::mt19937 rng(8080);
  int implications = 0;
  for (const auto& R : oracle::zoo()) {
    std::string name = R->describe();
    oracle::ExpandedRing E(*R);
    auto res = resolve_module(residue_field(R), 3);
    out.require(res.complex.is_minimal(), name + " resolution not minimal");
    out.require(res.betti.size() > 1 && res.betti[1] == R->edim(), name + " betti_1(k) != edim");
    auto K = koszul(maximal_ideal(R)).complex;
    for (int trial = 0; trial < 3; ++trial) {
      auto F = oracle::random_complex(R, E, rng, 3, 3);
      auto C = cone(truncate_geq(F, 1).projection).complex;
      for (const auto* X : {&F, &C, &K, &res.complex})
        out.require(squares_vanish(*X), name + " d^2 != 0");
      auto M = minimize(C);
      out.require(M.is_minimal(), name + " minimize");
      for (int i = C.lo(); i <= C.hi(); ++i)
        out.require(homology(C, i).hilbert == homology(M, i).hilbert, name + " minimize changed homology");
      std::vector<ChainMap> maps = {ChainMap::identity(F), truncate_geq(F, 1).projection,
                                    times_variable(F, trial % R->nvars()), ChainMap::identity(C),
                                    cone(ChainMap::identity(F)).inclusion};
      for (const auto& phi : maps) {
        if (is_null_homotopic(phi).null_homotopic) {
          out.require(is_ghost(phi), name + " null-homotopic map is not a ghost");
          ++implications;
        }
      }
    }
  }
  out.require(implications > 0, "no null-homotopic instance exercised");
  if (out.pass) out.detail << oracle::zoo().size() << " rings, " << implications << " null-homotopic maps all ghosts";
}

void ac9(Outcome& out) {
  std::mt19937 rng(9090);
  int fired = 0, instances = 0;
  for (const auto& R : oracle::zoo()) {
    oracle::ExpandedRing E(*R);
    Ideal m = maximal_ideal(R);
    std::vector<ChainComplex> Fs = {koszul(m).complex, resolve_module(residue_field(R), 2).complex};
    for (int trial = 0; trial < 3; ++trial) Fs.push_back(oracle::random_complex(R, E, rng, 3, 2));
    std::vector<Ideal> ideals = {m, Ideal(R, {R->poly().variable(0)})};
    for (const auto& F : Fs) {
      int upper = upper_bound(F).value;
      for (const auto& I : ideals) {
        auto c = nit_cited_bound(F, I);
        ++instances;
        if (c.value <= 0) continue;
        ++fired;
        out.require(c.value <= upper, R->describe() + ": cited " + std::to_string(c.value) + " > upper " +
                                          std::to_string(upper));
      }
    }
  }
  out.require(fired > 0, "the cited bound never fired");
  if (out.pass) out.detail << fired << " of " << instances << " instances fired, none above the upper bound";
}

}  // namespace

int main() {
  int failures = 0;
  failures += criterion(1, 30, ac1);
  failures += criterion(2, 30, ac2);
  failures += criterion(3, 10, ac3);
  failures += criterion(4, 10, ac4);
  failures += criterion(5, 20, ac5);
  failures += criterion(6, 10, ac6);
  failures += criterion(7, 60, ac7);
  failures += criterion(8, 120, ac8);
  failures += criterion(9, 120, ac9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
