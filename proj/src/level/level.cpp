#include "levelcert/level.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

#include "levelcert/error.hpp"
#include "levelcert/koszul.hpp"

namespace levelcert {

namespace {

std::string str(int i) { return std::to_string(i); }

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(std::max(a.rows, b.rows), 0);
  for (int c = 0; c < a.cols; ++c) out.append_column(a.column(c));
  for (int c = 0; c < b.cols; ++c) out.append_column(b.column(c));
  return out;
}

// Columns g * e_j for every generator g and basis vector e_j of a rank-n term.
PolyMatrix ideal_times_basis(const std::vector<Polynomial>& gens, int n) {
  PolyMatrix m(n, 0);
  for (int j = 0; j < n; ++j) {
    for (const auto& g : gens) {
      std::vector<Polynomial> col(static_cast<std::size_t>(n));
      col[static_cast<std::size_t>(j)] = g;
      m.append_column(col);
    }
  }
  return m;
}

std::vector<Polynomial> variables(const Ring& R) {
  std::vector<Polynomial> v;
  for (int i = 0; i < R.nvars(); ++i) v.push_back(R.poly().variable(i));
  return v;
}

int length_of(const ChainComplex& P) {
  auto s = P.support();
  return s ? s->second - s->first + 1 : 0;
}

std::map<int, bool> nonzero_homology(const ChainComplex& P, int from, int to, const CancelToken* cancel) {
  HomologyOptions ho;
  ho.cancel = cancel;
  std::map<int, bool> out;
  for (int i = from; i <= to; ++i) out[i] = !homology(P, i, ho).is_zero;
  return out;
}

// Largest i in [lo, b) with H_i != 0; lo when there is none.
int gap_start(const std::map<int, bool>& nonzero, int lo, int b) {
  for (int i = b - 1; i >= lo; --i) {
    auto it = nonzero.find(i);
    if (it != nonzero.end() && it->second) return i;
  }
  return lo;
}

void note(std::vector<std::string>* log, std::string line) {
  if (log) log->push_back(std::move(line));
}

bool same_map(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) return false;
  const auto& X = f.source();
  if (X.empty_window()) return true;
  for (int i = X.lo(); i <= X.hi(); ++i) {
    if (!(f.component(i) == g.component(i))) return false;
  }
  return true;
}

bool check_ghost_witness(const GhostWitness& w, std::vector<std::string>* log, const CancelToken* cancel) {
  bool ok = true;
  if (static_cast<int>(w.ghosts.size()) != w.b - w.a) {
    note(log, "ghost sequence has " + str(static_cast<int>(w.ghosts.size())) + " maps, expected " + str(w.b - w.a));
    ok = false;
  }
  ChainMap acc = w.to_quotient;
  for (std::size_t k = 0; k < w.ghosts.size(); ++k) {
    const auto& g = w.ghosts[k];
    if (!(g.source() == acc.target())) {
      note(log, "ghost map " + str(static_cast<int>(k)) + " does not start where the previous map ends");
      return false;
    }
    bool ghost = is_ghost(g, cancel);
    note(log, "ghost map " + str(static_cast<int>(k)) + (ghost ? " induces zero on homology" : " is not ghost"));
    ok = ok && ghost;
    acc = compose(g, acc);
  }
  if (!same_map(acc, w.composite)) {
    note(log, "recorded composite differs from the composed maps");
    return false;
  }
  LiftOptions lo;
  lo.cancel = cancel;
  bool null = is_null_homotopic(w.composite, lo).null_homotopic;
  note(log, null ? "composite is null-homotopic" : "composite is not null-homotopic");
  return ok && !null;
}

// Generators of I G_b + Z_b(G) as columns over G_b.
PolyMatrix containment_generators(const Ring& R, const ChainComplex& G, const Ideal& I, int b,
                                  const CancelToken* cancel) {
  KernelGens Z = kernel_over_ring(R, G.differential(b), G.twists(b), G.twists(b - 1), G.relations(b - 1), cancel);
  return hstack(ideal_times_basis(I.generators(), G.rank(b)), Z.generators);
}

// Index of a column of eta_b outside I G_b + Z_b(G), or -1.
int escaping_column(const ChainMap& eta, const Ideal& I, int b, const CancelToken* cancel) {
  const auto& G = eta.target();
  const auto& F = eta.source();
  if (G.rank(b) == 0 || F.rank(b) == 0) return -1;
  const Ring& R = *G.ring();
  SubmoduleTest T(R, G.twists(b), containment_generators(R, G, I, b, cancel));
  PolyMatrix e = eta.component(b);
  for (int k = 0; k < e.cols; ++k) {
    if (!T.contains(e.column(k))) return k;
  }
  return -1;
}

bool lower_kind(BoundKind k) {
  return k == BoundKind::gap || k == BoundKind::gapsmap || k == BoundKind::kappa || k == BoundKind::minimal_gap ||
         k == BoundKind::pd;
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::gap: return "gap";
    case BoundKind::gapsmap: return "gapsmap";
    case BoundKind::kappa: return "kappa";
    case BoundKind::minimal_gap: return "minimal_gap";
    case BoundKind::pd: return "pd";
    case BoundKind::length_upper: return "length_upper";
    case BoundKind::cited_nit: return "cited_nit";
    case BoundKind::cited_dim_sop: return "cited_dim_sop";
    case BoundKind::cited_power: return "cited_power";
  }
  return "unknown";
}

bool is_certified(BoundKind kind) {
  return kind != BoundKind::cited_nit && kind != BoundKind::cited_dim_sop && kind != BoundKind::cited_power;
}

BoundCertificate upper_bound(const ChainComplex& F) {
  if (!F.is_free()) throw PreconditionError("upper bound requires a complex of free modules");
  BoundCertificate c;
  c.kind = BoundKind::length_upper;
  ChainComplex P = minimize(F);
  c.value = length_of(P);
  if (auto s = P.support()) {
    c.transcript.push_back("minimized complex is supported in degrees " + str(s->first) + ".." + str(s->second));
  } else {
    c.transcript.push_back("complex minimizes to zero");
  }
  c.complex = std::move(P);
  return c;
}

GhostWitness ghost_witness(const ChainMap& eta, int a, int b, const CancelToken* cancel) {
  const auto& F = eta.source();
  const auto& G = eta.target();
  if (!G.is_free()) throw PreconditionError("ghost witness requires a free target complex");
  if (a >= b) throw PreconditionError("gap endpoints must satisfy a < b");
  if (G.empty_window() || b < G.lo() || b > G.hi()) {
    throw PreconditionError("degree " + str(b) + " is outside the target complex");
  }
  const Ring& R = *G.ring();
  KernelGens Z = kernel_over_ring(R, G.differential(b), G.twists(b), G.twists(b - 1), G.relations(b - 1), cancel);
  std::vector<std::vector<int>> tw;
  std::vector<PolyMatrix> ds, rels;
  for (int i = G.lo(); i <= b; ++i) {
    tw.push_back(G.twists(i));
    rels.push_back(i == b ? Z.generators : PolyMatrix(G.rank(i), 0));
    if (i > G.lo()) ds.push_back(G.differential(i));
  }
  ChainComplex Gq = ChainComplex::make_presented(G.ring(), G.lo(), tw, ds, rels);
  std::map<int, PolyMatrix> comps;
  if (!F.empty_window()) {
    for (int i = F.lo(); i <= std::min(F.hi(), b); ++i) {
      if (i >= G.lo()) comps[i] = eta.component(i);
    }
  }
  GhostWitness w;
  w.a = a;
  w.b = b;
  w.to_quotient = ChainMap::make(F, Gq, std::move(comps));
  ChainMap acc = w.to_quotient;
  ChainComplex cur = Gq;
  for (int j = a + 1; j <= b; ++j) {
    poll(cancel);
    Truncation T = truncate_geq(cur, j);
    w.ghosts.push_back(T.projection);
    acc = compose(T.projection, acc);
    cur = T.complex;
  }
  w.composite = acc;
  return w;
}

BoundCertificate lower_bound_gap(const ChainComplex& F, const CancelToken* cancel) {
  if (!F.is_free()) throw PreconditionError("gap bound requires a complex of free modules");
  BoundCertificate c;
  c.kind = BoundKind::gap;
  ChainComplex P = minimize(F);
  auto s = P.support();
  if (!s) {
    c.transcript.push_back("complex is exact: level 0");
    return c;
  }
  auto [lo, hi] = *s;
  auto nonzero = nonzero_homology(P, lo, hi, cancel);
  c.value = 1;
  int best_a = 0, best_b = 0;
  for (int b = lo + 1; b <= hi; ++b) {
    poll(cancel);
    auto M = ModulePresentation::make(P.ring(), P.twists(b - 1), P.differential(b));
    if (is_free(M)) continue;
    int a = gap_start(nonzero, lo, b);
    if (b - a + 1 > c.value) {
      c.value = b - a + 1;
      best_a = a;
      best_b = b;
      c.syzygy_h0 = M;
    }
  }
  if (c.value == 1) {
    c.transcript.push_back("no gap with a non-free syzygy; homology is nonzero so level >= 1");
    return c;
  }
  c.transcript.push_back("H_i = 0 for " + str(best_a) + " < i < " + str(best_b));
  c.transcript.push_back("coker(d_" + str(best_b) + ") on P_" + str(best_b - 1) + " is not free");
  GhostWitness w = ghost_witness(ChainMap::identity(P), best_a, best_b, cancel);
  std::vector<std::string> log;
  if (!check_ghost_witness(w, &log, cancel)) {
    c.value = 1;
    c.syzygy_h0.reset();
    c.transcript.push_back("witness failed replay; falling back to the trivial bound");
    c.transcript.insert(c.transcript.end(), log.begin(), log.end());
    return c;
  }
  c.transcript.insert(c.transcript.end(), log.begin(), log.end());
  c.ghost = std::move(w);
  return c;
}

BoundCertificate lower_bound_gapsmap(const ChainComplex& F, const ChainMap& eta, const Ideal& I, int a, int b,
                                     const CancelToken* cancel) {
  if (!F.is_free()) throw PreconditionError("source complex must be free");
  if (!(eta.source() == F)) throw PreconditionError("chain map does not start at the given complex");
  const auto& G = eta.target();
  if (!G.is_free()) throw PreconditionError("target complex must be free");
  if (a >= b) throw PreconditionError("gap endpoints must satisfy a < b");
  const Ring& R = *F.ring();
  BoundCertificate c;
  c.kind = BoundKind::gapsmap;
  c.eta = eta;
  c.ideal = I;
  if (!F.empty_window()) {
    for (int i = F.lo() + 1; i <= F.hi(); ++i) {
      if (F.rank(i) == 0 || F.rank(i - 1) == 0) continue;
      SubmoduleTest T(R, F.twists(i - 1), ideal_times_basis(I.generators(), F.rank(i - 1)));
      PolyMatrix d = F.differential(i);
      for (int k = 0; k < d.cols; ++k) {
        if (!T.contains(d.column(k))) {
          throw PreconditionError("image of d_" + str(i) + " is not contained in I F_" + str(i - 1));
        }
      }
    }
  }
  c.transcript.push_back("image of every differential lies in I F");
  HomologyOptions ho;
  ho.cancel = cancel;
  for (int i = a + 1; i < b; ++i) {
    if (G.empty_window() || i < G.lo() || i > G.hi()) continue;
    if (!homology(G, i, ho).is_zero) throw PreconditionError("H_" + str(i) + " of the target is nonzero");
  }
  c.transcript.push_back("target homology vanishes for " + str(a) + " < i < " + str(b));
  int k = G.empty_window() || b < G.lo() || b > G.hi() ? -1 : escaping_column(eta, I, b, cancel);
  if (k < 0) {
    c.transcript.push_back("image of eta_" + str(b) + " lies in I G_" + str(b) + " + Z_" + str(b) + "(G)");
    return c;
  }
  c.witness_column = k;
  c.transcript.push_back("column " + str(k) + " of eta_" + str(b) + " lies outside I G_" + str(b) + " + Z_" + str(b) +
                         "(G)");
  GhostWitness w = ghost_witness(eta, a, b, cancel);
  std::vector<std::string> log;
  bool ok = check_ghost_witness(w, &log, cancel);
  c.transcript.insert(c.transcript.end(), log.begin(), log.end());
  if (!ok) {
    c.witness_column = -1;
    c.transcript.push_back("witness failed replay; no bound");
    return c;
  }
  c.value = b - a + 1;
  c.ghost = std::move(w);
  return c;
}

BoundCertificate lower_bound_minimal_gap(const ChainComplex& F, const CancelToken* cancel) {
  if (!F.is_free()) throw PreconditionError("minimal gap bound requires a complex of free modules");
  BoundCertificate c;
  c.kind = BoundKind::minimal_gap;
  ChainComplex P = F;
  if (!F.is_minimal()) {
    P = minimize(F);
    c.transcript.push_back("input is not minimal; minimized first");
  }
  auto s = P.support();
  if (!s) {
    c.transcript.push_back("complex is exact: level 0");
    return c;
  }
  auto [lo, hi] = *s;
  auto nonzero = nonzero_homology(P, lo, hi, cancel);
  int best_a = 0, best_b = 0, best = 1;
  for (int b = lo + 1; b <= hi; ++b) {
    if (P.differential(b).is_zero()) continue;
    int a = gap_start(nonzero, lo, b);
    if (b - a + 1 > best) best = b - a + 1, best_a = a, best_b = b;
  }
  if (best == 1) {
    c.value = 1;
    c.transcript.push_back("no nonzero differential closes a homology gap; level >= 1");
    return c;
  }
  BoundCertificate sub =
      lower_bound_gapsmap(P, ChainMap::identity(P), maximal_ideal(P.ring()), best_a, best_b, cancel);
  sub.kind = BoundKind::minimal_gap;
  sub.transcript.insert(sub.transcript.begin(), c.transcript.begin(), c.transcript.end());
  sub.transcript.insert(sub.transcript.begin(), "d_" + str(best_b) + " is nonzero and H_i = 0 for " + str(best_a) +
                                                    " < i < " + str(best_b));
  if (sub.value == 0) sub.value = 1;
  return sub;
}

BoundCertificate kappa_bound(const ChainComplex& F, const Ideal& I, const CancelToken* cancel) {
  if (F.empty_window() || F.lo() != 0 || F.twists(0) != std::vector<int>{0}) {
    throw PreconditionError("expected a Koszul complex with F_0 = R in degree 0");
  }
  if (I.is_unit()) throw PreconditionError("unit ideal");
  const auto& R = F.ring();
  int s = F.hi();
  ResolveOptions ro;
  ro.check_complete = false;
  ro.cancel = cancel;
  ChainComplex G = resolve_module(quotient_module(I), s, ro).complex;
  LiftOptions lo;
  lo.cancel = cancel;
  ChainMap eta = lift_map(F, G, identity_matrix(R->poly(), 1), lo);
  for (int b = std::min(s, G.hi()); b >= 1; --b) {
    PolyMatrix e = eta.component(b);
    if (std::none_of(e.entries.begin(), e.entries.end(), [](const Polynomial& p) { return p.is_unit(); })) continue;
    BoundCertificate c = lower_bound_gapsmap(F, eta, I, 0, b, cancel);
    if (c.value == 0) continue;
    c.kind = BoundKind::kappa;
    c.transcript.insert(c.transcript.begin(), "eta_" + str(b) + " has a unit entry: kappa_" + str(b) + " != 0");
    return c;
  }
  BoundCertificate c;
  c.kind = BoundKind::kappa;
  c.value = 1;
  c.eta = eta;
  c.ideal = I;
  c.transcript.push_back("kappa_b = 0 for all b >= 1; H_0 = R/I != 0 so level >= 1");
  return c;
}

bool replay(const BoundCertificate& cert, std::vector<std::string>* log, const CancelToken* cancel) {
  note(log, "replaying " + to_string(cert.kind) + " bound " + str(cert.value));
  if (cert.kind == BoundKind::cited_nit && cert.complex && cert.ideal) {
    int v = nit_cited_bound(*cert.complex, *cert.ideal, cancel).value;
    note(log, v == cert.value ? "hypotheses re-checked" : "hypothesis check gives " + str(v));
    return v == cert.value && v > 0;
  }
  if (!cert.certified()) {
    for (const auto& t : cert.transcript) note(log, "hypothesis: " + t);
    return cert.value > 0 && !cert.transcript.empty();
  }
  if (cert.kind == BoundKind::length_upper) {
    if (!cert.complex) {
      note(log, "missing minimized complex");
      return false;
    }
    bool ok = cert.complex->is_minimal() && length_of(*cert.complex) == cert.value;
    note(log, ok ? "minimized complex has the recorded length" : "length mismatch");
    return ok;
  }
  if (cert.value <= 1) {
    note(log, "trivial bound; nothing to replay");
    return true;
  }
  if (!cert.ghost) {
    note(log, "missing ghost witness");
    return false;
  }
  const auto& w = *cert.ghost;
  if (cert.value != w.b - w.a + 1) {
    note(log, "value does not match the gap endpoints");
    return false;
  }
  bool ok = true;
  if (cert.kind == BoundKind::gap || cert.kind == BoundKind::pd) {
    if (!cert.syzygy_h0) {
      note(log, "missing syzygy presentation");
      return false;
    }
    bool free = is_free(*cert.syzygy_h0);
    note(log, free ? "syzygy H_0 is free" : "syzygy H_0 is not free");
    ok = !free;
  } else {
    if (!cert.eta || !cert.ideal) {
      note(log, "missing chain map or ideal");
      return false;
    }
    int k = escaping_column(*cert.eta, *cert.ideal, w.b, cancel);
    note(log, k >= 0 ? "eta_b escapes I G_b + Z_b(G)" : "eta_b lies in I G_b + Z_b(G)");
    ok = k >= 0;
  }
  return check_ghost_witness(w, log, cancel) && ok;
}

LevelReport level_of_module(const ModulePresentation& M, int bound, const CancelToken* cancel) {
  if (bound < 0) throw PreconditionError("bound must be non-negative");
  LevelReport rep;
  ResolveOptions ro;
  ro.cancel = cancel;
  Resolution res = resolve_module(M, bound, ro);
  if (res.complete) {
    int pd = -1;
    for (std::size_t i = 0; i < res.betti.size(); ++i) {
      if (res.betti[i] > 0) pd = static_cast<int>(i);
    }
    rep.notes.push_back(pd < 0 ? "zero module" : "projective dimension " + str(pd));
    BoundCertificate up = upper_bound(res.complex);
    BoundCertificate low = lower_bound_gap(res.complex, cancel);
    low.kind = BoundKind::pd;
    rep.lower = low.value;
    rep.upper = up.value;
    rep.certificates.push_back(std::move(up));
    rep.certificates.push_back(std::move(low));
  } else {
    ro.check_complete = false;
    rep.notes.push_back("resolution does not terminate within " + str(bound) + " steps: projective dimension >= " +
                        str(bound + 1));
    rep.notes.push_back("no finite upper bound; lower bound certified on the truncation P_{<=" + str(bound) + "}");
    BoundCertificate low = lower_bound_gap(res.complex, cancel);
    low.kind = BoundKind::pd;
    rep.lower = low.value;
    rep.certificates.push_back(std::move(low));
  }
  rep.exact = rep.upper && *rep.upper == rep.lower;
  return rep;
}

EveryNExample everyn_example(const RingHandle& R, int n, const CancelToken* cancel) {
  if (n < 0) throw PreconditionError("n must be non-negative");
  ResolveOptions ro;
  ro.check_complete = false;
  ro.cancel = cancel;
  Resolution res = resolve_module(residue_field(R), n, ro);
  if (res.complex.hi() < n || res.complex.rank(n) == 0) {
    throw PreconditionError("pd k = " + str(res.complex.hi()) + " < " + str(n) +
                            "; the ring is regular, choose one with relations");
  }
  EveryNExample ex;
  ex.complex = res.complex;
  ex.upper = upper_bound(ex.complex);
  ex.lower = lower_bound_gap(ex.complex, cancel);
  return ex;
}

BoundCertificate nit_cited_bound(const ChainComplex& F, const Ideal& I, const CancelToken* cancel) {
  if (!F.is_free()) throw PreconditionError("cited bound requires a complex of free modules");
  BoundCertificate c;
  c.kind = BoundKind::cited_nit;
  c.ideal = I;
  c.complex = F;
  const Ring& R = *F.ring();
  if (I.is_unit()) {
    c.transcript.push_back("I is the unit ideal");
    return c;
  }
  if (F.empty_window() || F.rank(0) == 0) {
    c.transcript.push_back("H_0 is zero");
    return c;
  }
  HomologyOptions ho;
  ho.cancel = cancel;
  for (int i = std::max(1, F.lo()); i <= F.hi(); ++i) {
    if (!homology(F, i, ho).finite_length) {
      c.transcript.push_back("H_" + str(i) + " does not have finite length");
      return c;
    }
  }
  c.transcript.push_back("H_i has finite length for every i >= 1");
  const auto& tw0 = F.twists(0);
  int r0 = F.rank(0);
  PolyMatrix d1 = F.differential(1);
  const auto& gens = I.generators();
  int t = static_cast<int>(gens.size());
  // (0 :_{H_0} I) as the kernel of v -> (g v)_g modulo im d_1 in every block
  PolyMatrix colon;
  if (t == 0) {
    colon = identity_matrix(R.poly(), r0);
  } else {
    PolyMatrix m(t * r0, r0);
    PolyMatrix rel(t * r0, t * d1.cols);
    std::vector<int> target;
    for (int j = 0; j < t; ++j) {
      for (int k = 0; k < r0; ++k) {
        m.at(j * r0 + k, k) = gens[j];
        target.push_back(tw0[k] - gens[j].degree());
      }
      for (int r = 0; r < r0; ++r) {
        for (int q = 0; q < d1.cols; ++q) rel.at(j * r0 + r, j * d1.cols + q) = d1.at(r, q);
      }
    }
    colon = kernel_over_ring(R, m, tw0, target, rel, cancel).generators;
  }
  SubmoduleTest mH0(R, tw0, hstack(ideal_times_basis(variables(R), r0), d1));
  bool found = false;
  for (int k = 0; k < colon.cols && !found; ++k) found = !mH0.contains(colon.column(k));
  if (!found) {
    c.transcript.push_back("(0 :_{H_0} I) lies in m H_0: I kills no minimal generator of H_0");
    return c;
  }
  c.transcript.push_back("(0 :_{H_0} I) is not contained in m H_0: I kills a minimal generator of H_0");
  int dq = dim_quotient(I);
  c.value = R.krull_dim() - dq + 1;
  c.transcript.push_back("dim R = " + str(R.krull_dim()) + ", dim R/I = " + str(dq));
  return c;
}

LevelReport level_report(const ChainComplex& F, const ReportOptions& opts) {
  if (!F.is_free()) throw PreconditionError("level report requires a complex of free modules");
  auto policy = opts.parallel ? std::launch::async : std::launch::deferred;
  auto fu = std::async(policy, [&] { return upper_bound(F); });
  auto fg = std::async(policy, [&] { return lower_bound_gap(F, opts.cancel); });
  auto fm = std::async(policy, [&] { return lower_bound_minimal_gap(F, opts.cancel); });
  LevelReport rep;
  BoundCertificate up = fu.get();
  rep.upper = up.value;
  rep.certificates.push_back(std::move(up));
  rep.certificates.push_back(fg.get());
  rep.certificates.push_back(fm.get());
  if (opts.koszul) {
    const auto& tag = *opts.koszul;
    const auto& R = F.ring();
    if (tag.power < 1) throw PreconditionError("Koszul power must be positive");
    KoszulData K = koszul(R, tag.generators);
    if (!(K.complex == F)) throw PreconditionError("complex does not match its Koszul tag");
    Ideal I(R, K.generators);
    Ideal base(R, tag.base);
    if (I.is_unit() || base.is_unit()) throw PreconditionError("unit ideal");
    BoundCertificate kap = kappa_bound(F, I, opts.cancel);
    if (kap.value > 1) rep.certificates.push_back(std::move(kap));
    // the canonical-element check: lift F -> k to the minimal resolution of k
    if (F.hi() >= 1) {
      ResolveOptions ro;
      ro.check_complete = false;
      ro.cancel = opts.cancel;
      ChainComplex G = resolve_module(residue_field(R), F.hi(), ro).complex;
      LiftOptions lo;
      lo.cancel = opts.cancel;
      ChainMap eta = lift_map(F, G, identity_matrix(R->poly(), 1), lo);
      for (int b = std::min(F.hi(), G.hi()); b >= 1; --b) {
        BoundCertificate c = lower_bound_gapsmap(F, eta, I, 0, b, opts.cancel);
        if (c.value > 0) {
          rep.certificates.push_back(std::move(c));
          break;
        }
      }
    }
    int depth = depth_via_koszul(I);
    int depth_cert = 0;
    for (const auto& c : rep.certificates) {
      if (c.kind == BoundKind::minimal_gap) depth_cert = c.value;
    }
    rep.notes.push_back("depth(I, R) = " + str(depth) + "; the minimal-gap certificate gives " + str(depth_cert) +
                        (depth_cert >= depth + 1 ? ", at least depth + 1" : ", below depth + 1") +
                        " (the depth bound is sometimes quoted as level >= depth without the + 1)");
    int beta_base = beta(base);
    if (tag.power == 1 && static_cast<int>(K.generators.size()) == R->krull_dim() && dim_quotient(I) == 0) {
      BoundCertificate c;
      c.kind = BoundKind::cited_dim_sop;
      c.value = R->krull_dim() + 1;
      c.ideal = I;
      c.transcript.push_back(str(R->krull_dim()) + " generators with dim R/I = 0: a system of parameters");
      c.transcript.push_back("cited level dim R + 1 = " + str(c.value));
      rep.cited.push_back(std::move(c));
    }
    Ideal power = ideal_power(base, tag.power);
    bool same = std::all_of(I.generators().begin(), I.generators().end(), [&](auto& g) { return power.contains(g); }) &&
                std::all_of(power.generators().begin(), power.generators().end(),
                            [&](auto& g) { return I.contains(g); });
    if (same) {
      BoundCertificate c;
      c.kind = BoundKind::cited_power;
      c.value = beta_base + 1;
      c.ideal = base;
      c.transcript.push_back("Koszul generators span I^" + str(tag.power) + " with beta(I) = " + str(beta_base));
      c.transcript.push_back("coefficient field GF(" + std::to_string(R->field().characteristic()) + "): equicharacteristic");
      c.transcript.push_back("cited upper bound beta(I) + 1 = " + str(c.value));
      if (depth_via_koszul(base) == beta_base) {
        c.transcript.push_back("I is generated by a regular sequence: the level equals beta(I) + 1 = " + str(c.value));
        rep.notes.push_back("base ideal generated by a regular sequence: level of K(I^" + str(tag.power) +
                            ") is beta(I) + 1 = " + str(c.value));
      }
      rep.cited.push_back(std::move(c));
    } else {
      rep.notes.push_back("Koszul generators do not span the tagged power of the base ideal");
    }
    Ideal m = maximal_ideal(R);
    if (tag.power == 1 &&
        std::all_of(m.generators().begin(), m.generators().end(), [&](auto& g) { return I.contains(g); })) {
      rep.notes.push_back("Koszul complex on the maximal ideal: level edim(R) + 1 = " + str(R->edim() + 1));
    }
  }
  for (const auto& I : opts.ideals) {
    BoundCertificate c = nit_cited_bound(F, I, opts.cancel);
    if (c.value > 0) {
      rep.cited.push_back(std::move(c));
    } else {
      rep.notes.push_back("intersection bound not applicable: " + c.transcript.back());
    }
  }
  for (const auto& c : rep.certificates) {
    if (lower_kind(c.kind)) rep.lower = std::max(rep.lower, c.value);
  }
  if (rep.upper && rep.lower > *rep.upper) {
    throw std::logic_error("certified lower bound exceeds certified upper bound");
  }
  rep.exact = rep.upper && *rep.upper == rep.lower;
  return rep;
}

}  // namespace levelcert
