#include "levelcert/complex.hpp"

#include <algorithm>
#include <numeric>

#include "levelcert/error.hpp"
#include "levelcert/graded.hpp"

namespace levelcert {

namespace {

const FreeModule kEmptyModule{};

std::vector<int> sort_permutation(const std::vector<int>& twists) {
  std::vector<int> p(twists.size());
  std::iota(p.begin(), p.end(), 0);
  std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return twists[a] < twists[b]; });
  return p;
}

PolyMatrix permute_rows(const PolyMatrix& m, const std::vector<int>& perm) {
  PolyMatrix out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(perm[r], c);
  }
  return out;
}

PolyMatrix permute_cols(const PolyMatrix& m, const std::vector<int>& perm) {
  PolyMatrix out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, perm[c]);
  }
  return out;
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows, a.cols + b.cols);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) out.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols; ++c) out.at(r, a.cols + c) = b.at(r, c);
  }
  return out;
}

PolyMatrix reduce_matrix(const Ring& R, PolyMatrix m) {
  for (auto& e : m.entries) e = R.reduce(e);
  return m;
}

void check_entry_degrees(const Ring& R, const PolyMatrix& m, const std::vector<int>& src,
                         const std::vector<int>& tgt, const std::string& what) {
  for (int j = 0; j < m.rows; ++j) {
    for (int k = 0; k < m.cols; ++k) {
      const auto& e = m.at(j, k);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) {
        throw MalformedInput("inhomogeneous entry (" + std::to_string(j) + ", " + std::to_string(k) + ") of " + what +
                             ": " + R.poly().format(e));
      }
      if (e.degree() != src[k] - tgt[j]) {
        throw MalformedInput("entry (" + std::to_string(j) + ", " + std::to_string(k) + ") of " + what +
                             " has degree " + std::to_string(e.degree()) + ", twists require " +
                             std::to_string(src[k] - tgt[j]));
      }
    }
  }
}

void check_homogeneous_columns(const Ring& R, const PolyMatrix& m, const std::vector<int>& twists,
                               const std::string& what) {
  for (int c = 0; c < m.cols; ++c) {
    auto col = m.column(c);
    auto d = vector_degree(col, twists);
    if (!d) continue;
    for (std::size_t j = 0; j < col.size(); ++j) {
      if (col[j].is_zero()) continue;
      if (!col[j].is_homogeneous() || col[j].degree() + twists[j] != *d) {
        throw MalformedInput(what + " column " + std::to_string(c) + " is not homogeneous");
      }
    }
  }
  (void)R;
}

// Every column of m lies in the span of the relations (plus J) of a term.
bool columns_in(const Ring& R, const PolyMatrix& m, const std::vector<int>& twists, const PolyMatrix& relations) {
  if (m.cols == 0 || m.rows == 0) return true;
  if (relations.cols == 0) return m.is_zero();
  SubmoduleTest test(R, twists, relations);
  for (int c = 0; c < m.cols; ++c) {
    if (!test.contains(m.column(c))) return false;
  }
  return true;
}

PolyMatrix remove_row(const PolyMatrix& m, int row) {
  PolyMatrix out(m.rows - 1, m.cols);
  for (int r = 0, o = 0; r < m.rows; ++r) {
    if (r == row) continue;
    for (int c = 0; c < m.cols; ++c) out.at(o, c) = m.at(r, c);
    ++o;
  }
  return out;
}

PolyMatrix remove_col(const PolyMatrix& m, int col) {
  PolyMatrix out(m.rows, m.cols - 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0, o = 0; c < m.cols; ++c) {
      if (c == col) continue;
      out.at(r, o++) = m.at(r, c);
    }
  }
  return out;
}

}  // namespace

PolyMatrix multiply(const Ring& R, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols != b.rows) throw MalformedInput("matrix product shape mismatch");
  const auto& S = R.poly();
  PolyMatrix out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < b.cols; ++c) {
      Polynomial acc;
      for (int k = 0; k < a.cols; ++k) {
        if (a.at(r, k).is_zero() || b.at(k, c).is_zero()) continue;
        acc = S.add(acc, S.mul(a.at(r, k), b.at(k, c)));
      }
      out.at(r, c) = R.reduce(acc);
    }
  }
  return out;
}

PolyMatrix identity_matrix(const PolyRing& S, int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = S.constant(1);
  return m;
}

// ---- ChainComplex ----

ChainComplex ChainComplex::make(RingHandle ring, int lo, std::vector<std::vector<int>> twists,
                                std::vector<PolyMatrix> differentials, std::vector<std::vector<int>>* perms) {
  const int n = static_cast<int>(twists.size());
  std::vector<PolyMatrix> rels;
  for (int k = 0; k < n; ++k) rels.emplace_back(static_cast<int>(twists[k].size()), 0);
  if (perms) {
    perms->clear();
    for (const auto& t : twists) perms->push_back(sort_permutation(t));
  }
  return make_presented(std::move(ring), lo, std::move(twists), std::move(differentials), std::move(rels));
}

ChainComplex ChainComplex::make_presented(RingHandle ring, int lo, std::vector<std::vector<int>> twists,
                                          std::vector<PolyMatrix> differentials, std::vector<PolyMatrix> relations) {
  if (!ring) throw MalformedInput("complex has no ring");
  const int n = static_cast<int>(twists.size());
  if (static_cast<int>(differentials.size()) != std::max(n - 1, 0)) {
    throw MalformedInput("complex with " + std::to_string(n) + " terms needs " + std::to_string(std::max(n - 1, 0)) +
                         " differentials, got " + std::to_string(differentials.size()));
  }
  if (!relations.empty() && static_cast<int>(relations.size()) != n) {
    throw MalformedInput("relations must be given for every term");
  }
  ChainComplex F;
  F.ring_ = std::move(ring);
  F.lo_ = lo;
  for (int k = 0; k < n; ++k) {
    int i = lo + k;
    int r = static_cast<int>(twists[k].size());
    if (k > 0) {
      const auto& d = differentials[k - 1];
      int rows = static_cast<int>(twists[k - 1].size());
      if (d.rows != rows || d.cols != r) {
        throw MalformedInput("differential d" + std::to_string(i) + " has shape " + std::to_string(d.rows) + "x" +
                             std::to_string(d.cols) + ", expected " + std::to_string(rows) + "x" + std::to_string(r));
      }
    }
    if (!relations.empty() && relations[k].cols > 0 && relations[k].rows != r) {
      throw MalformedInput("relations of term " + std::to_string(i) + " have the wrong number of rows");
    }
  }
  std::vector<std::vector<int>> perm;
  for (const auto& t : twists) perm.push_back(sort_permutation(t));
  for (int k = 0; k < n; ++k) {
    FreeModule M;
    for (int p : perm[k]) M.twists.push_back(twists[k][p]);
    F.modules_.push_back(std::move(M));
    if (k == 0) {
      F.diffs_.emplace_back(0, static_cast<int>(twists[0].size()));
    } else {
      PolyMatrix d = permute_cols(permute_rows(differentials[k - 1], perm[k - 1]), perm[k]);
      F.diffs_.push_back(reduce_matrix(*F.ring_, std::move(d)));
    }
    PolyMatrix rel = relations.empty() || relations[k].cols == 0 ? PolyMatrix(static_cast<int>(twists[k].size()), 0)
                                                                  : permute_rows(relations[k], perm[k]);
    F.relations_.push_back(reduce_matrix(*F.ring_, std::move(rel)));
  }
  F.validate();
  return F;
}

ChainComplex ChainComplex::zero(RingHandle ring) {
  ChainComplex F;
  F.ring_ = std::move(ring);
  return F;
}

void ChainComplex::validate() const {
  const Ring& R = *ring_;
  for (int i = lo(); i <= hi(); ++i) {
    const auto& d = diffs_[i - lo_];
    check_entry_degrees(R, d, twists(i), twists(i - 1), "d" + std::to_string(i));
    check_homogeneous_columns(R, relations_[i - lo_], twists(i), "relation of term " + std::to_string(i));
  }
  for (int i = lo() + 2; i <= hi(); ++i) {
    PolyMatrix dd = multiply(R, diffs_[i - 1 - lo_], diffs_[i - lo_]);
    if (!columns_in(R, dd, twists(i - 2), relations(i - 2))) {
      throw MalformedInput("d-squared nonzero at degree " + std::to_string(i));
    }
  }
  for (int i = lo() + 1; i <= hi(); ++i) {
    const auto& rel = relations_[i - lo_];
    if (rel.cols == 0) continue;
    PolyMatrix img = multiply(R, diffs_[i - lo_], rel);
    if (!columns_in(R, img, twists(i - 1), relations(i - 1))) {
      throw MalformedInput("differential d" + std::to_string(i) + " does not respect the relations");
    }
  }
}

const FreeModule& ChainComplex::module(int i) const {
  if (i < lo() || i > hi()) return kEmptyModule;
  return modules_[i - lo_];
}

PolyMatrix ChainComplex::differential(int i) const {
  if (i < lo() || i > hi()) return PolyMatrix(rank(i - 1), rank(i));
  return diffs_[i - lo_];
}

PolyMatrix ChainComplex::relations(int i) const {
  if (i < lo() || i > hi()) return PolyMatrix(0, 0);
  return relations_[i - lo_];
}

bool ChainComplex::is_free() const {
  return std::all_of(relations_.begin(), relations_.end(), [](const PolyMatrix& m) { return m.cols == 0; });
}

bool ChainComplex::is_minimal() const {
  for (const auto& d : diffs_) {
    for (const auto& e : d.entries) {
      if (e.is_unit()) return false;
    }
  }
  return true;
}

std::optional<std::pair<int, int>> ChainComplex::support() const {
  std::optional<std::pair<int, int>> s;
  for (int i = lo(); i <= hi(); ++i) {
    if (rank(i) == 0) continue;
    if (!s) s = std::make_pair(i, i);
    s->second = i;
  }
  return s;
}

bool ChainComplex::operator==(const ChainComplex& o) const {
  return ring_ == o.ring_ && lo_ == o.lo_ && modules_ == o.modules_ && diffs_ == o.diffs_ &&
         relations_ == o.relations_;
}

// ---- ChainMap ----

ChainMap ChainMap::make(ChainComplex source, ChainComplex target, std::map<int, PolyMatrix> components) {
  if (source.ring() != target.ring()) throw MalformedInput("chain map between complexes over different rings");
  const Ring& R = *source.ring();
  ChainMap f;
  for (auto& [i, m] : components) {
    if (m.rows != target.rank(i) || m.cols != source.rank(i)) {
      throw MalformedInput("map component " + std::to_string(i) + " has shape " + std::to_string(m.rows) + "x" +
                           std::to_string(m.cols) + ", expected " + std::to_string(target.rank(i)) + "x" +
                           std::to_string(source.rank(i)));
    }
    if (source.rank(i) == 0) continue;
    m = reduce_matrix(R, std::move(m));
    check_entry_degrees(R, m, source.twists(i), target.twists(i), "map component " + std::to_string(i));
    f.comps_[i] = std::move(m);
  }
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  const auto& X = f.source_;
  const auto& Y = f.target_;
  for (int i = X.lo(); i <= X.hi(); ++i) {
    PolyMatrix phi = f.component(i);
    PolyMatrix rel = X.relations(i);
    if (rel.cols > 0 && !columns_in(R, multiply(R, phi, rel), Y.twists(i), Y.relations(i))) {
      throw MalformedInput("chain map component " + std::to_string(i) + " does not respect the relations");
    }
    if (Y.rank(i - 1) == 0) continue;
    PolyMatrix lhs = multiply(R, Y.differential(i), phi);
    PolyMatrix rhs = multiply(R, f.component(i - 1), X.differential(i));
    PolyMatrix diff(lhs.rows, lhs.cols);
    for (std::size_t e = 0; e < lhs.entries.size(); ++e) diff.entries[e] = R.poly().sub(lhs.entries[e], rhs.entries[e]);
    if (!columns_in(R, diff, Y.twists(i - 1), Y.relations(i - 1))) {
      throw MalformedInput("chain map does not commute with differentials at degree " + std::to_string(i));
    }
  }
  return f;
}

ChainMap ChainMap::identity(const ChainComplex& F) {
  std::map<int, PolyMatrix> c;
  for (int i = F.lo(); i <= F.hi(); ++i) c[i] = identity_matrix(F.ring()->poly(), F.rank(i));
  return make(F, F, std::move(c));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  return make(source, target, {});
}

PolyMatrix ChainMap::component(int i) const {
  auto it = comps_.find(i);
  if (it != comps_.end()) return it->second;
  return PolyMatrix(target_.rank(i), source_.rank(i));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  const auto& M = f.target();
  const auto& N = g.source();
  bool match = M.ring() == N.ring();
  for (int i = std::min(M.lo(), N.lo()); match && i <= std::max(M.hi(), N.hi()); ++i) {
    match = M.twists(i) == N.twists(i);
  }
  if (!match) throw MalformedInput("cannot compose maps: target and source differ");
  const Ring& R = *f.source().ring();
  std::map<int, PolyMatrix> c;
  for (int i = f.source().lo(); i <= f.source().hi(); ++i) c[i] = multiply(R, g.component(i), f.component(i));
  return ChainMap::make(f.source(), g.target(), std::move(c));
}

// ---- constructions ----

ChainComplex suspend(const ChainComplex& F, int k) {
  if (F.empty_window()) return ChainComplex::zero(F.ring());
  const auto& S = F.ring()->poly();
  std::vector<std::vector<int>> tw;
  std::vector<PolyMatrix> ds, rels;
  for (int i = F.lo(); i <= F.hi(); ++i) {
    tw.push_back(F.twists(i));
    rels.push_back(F.relations(i));
    if (i > F.lo()) {
      PolyMatrix d = F.differential(i);
      if (k % 2 != 0) {
        for (auto& e : d.entries) e = S.neg(e);
      }
      ds.push_back(std::move(d));
    }
  }
  return ChainComplex::make_presented(F.ring(), F.lo() + k, tw, ds, rels);
}

namespace {

ChainComplex window(const ChainComplex& F, int from, int to) {
  from = std::max(from, F.lo());
  to = std::min(to, F.hi());
  if (from > to) return ChainComplex::zero(F.ring());
  std::vector<std::vector<int>> tw;
  std::vector<PolyMatrix> ds, rels;
  for (int i = from; i <= to; ++i) {
    tw.push_back(F.twists(i));
    rels.push_back(F.relations(i));
    if (i > from) ds.push_back(F.differential(i));
  }
  return ChainComplex::make_presented(F.ring(), from, tw, ds, rels);
}

}  // namespace

Truncation truncate_geq(const ChainComplex& F, int i) {
  ChainComplex T = window(F, i, F.hi());
  std::map<int, PolyMatrix> c;
  for (int j = T.lo(); j <= T.hi() && !T.empty_window(); ++j) c[j] = identity_matrix(F.ring()->poly(), F.rank(j));
  ChainMap tau = ChainMap::make(F, T, std::move(c));
  return {std::move(T), std::move(tau)};
}

ChainComplex truncate_leq(const ChainComplex& F, int i) { return window(F, F.lo(), i); }

Cone cone(const ChainMap& phi) {
  const auto& X = phi.source();
  const auto& Y = phi.target();
  if (!X.is_free() || !Y.is_free()) throw PreconditionError("cone requires free complexes");
  const auto& S = X.ring()->poly();
  bool xe = X.empty_window(), ye = Y.empty_window();
  if (xe && ye) {
    auto Z = ChainComplex::zero(X.ring());
    return {Z, ChainMap::zero(Y, Z), ChainMap::zero(Z, suspend(X, 1))};
  }
  int lo = xe ? Y.lo() : ye ? X.lo() + 1 : std::min(X.lo() + 1, Y.lo());
  int hi = xe ? Y.hi() : ye ? X.hi() + 1 : std::max(X.hi() + 1, Y.hi());
  std::vector<std::vector<int>> tw;
  std::vector<PolyMatrix> ds;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> t = X.twists(n - 1);
    t.insert(t.end(), Y.twists(n).begin(), Y.twists(n).end());
    tw.push_back(std::move(t));
    if (n == lo) continue;
    int xr = X.rank(n - 2), yr = Y.rank(n - 1), xc = X.rank(n - 1), yc = Y.rank(n);
    PolyMatrix d(xr + yr, xc + yc);
    PolyMatrix dx = X.differential(n - 1), dy = Y.differential(n), f = phi.component(n - 1);
    for (int r = 0; r < xr; ++r) {
      for (int c = 0; c < xc; ++c) d.at(r, c) = S.neg(dx.at(r, c));
    }
    for (int r = 0; r < yr; ++r) {
      for (int c = 0; c < xc; ++c) d.at(xr + r, c) = f.at(r, c);
      for (int c = 0; c < yc; ++c) d.at(xr + r, xc + c) = dy.at(r, c);
    }
    ds.push_back(std::move(d));
  }
  std::vector<std::vector<int>> perms;
  ChainComplex C = ChainComplex::make(X.ring(), lo, tw, ds, &perms);
  ChainComplex SX = suspend(X, 1);
  std::map<int, PolyMatrix> inc, proj;
  for (int n = lo; n <= hi; ++n) {
    const auto& perm = perms[n - lo];
    int xr = X.rank(n - 1), yr = Y.rank(n);
    if (yr > 0) {
      PolyMatrix m(xr + yr, yr);
      for (int j = 0; j < yr; ++j) m.at(xr + j, j) = S.constant(1);
      inc[n] = permute_rows(m, perm);
    }
    PolyMatrix p(xr, xr + yr);
    for (int j = 0; j < xr; ++j) p.at(j, j) = S.constant(1);
    proj[n] = permute_cols(p, perm);
  }
  ChainMap iota = ChainMap::make(Y, C, std::move(inc));
  ChainMap pi = ChainMap::make(C, SX, std::move(proj));
  return {std::move(C), std::move(iota), std::move(pi)};
}

ChainComplex direct_sum(const ChainComplex& F, const ChainComplex& G) {
  if (F.ring() != G.ring()) throw MalformedInput("direct sum of complexes over different rings");
  if (F.empty_window()) return G;
  if (G.empty_window()) return F;
  int lo = std::min(F.lo(), G.lo()), hi = std::max(F.hi(), G.hi());
  std::vector<std::vector<int>> tw;
  std::vector<PolyMatrix> ds, rels;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> t = F.twists(n);
    t.insert(t.end(), G.twists(n).begin(), G.twists(n).end());
    tw.push_back(std::move(t));
    PolyMatrix rf = F.relations(n), rg = G.relations(n);
    PolyMatrix rel(F.rank(n) + G.rank(n), rf.cols + rg.cols);
    for (int r = 0; r < rf.rows; ++r) {
      for (int c = 0; c < rf.cols; ++c) rel.at(r, c) = rf.at(r, c);
    }
    for (int r = 0; r < rg.rows; ++r) {
      for (int c = 0; c < rg.cols; ++c) rel.at(F.rank(n) + r, rf.cols + c) = rg.at(r, c);
    }
    rels.push_back(std::move(rel));
    if (n == lo) continue;
    PolyMatrix df = F.differential(n), dg = G.differential(n);
    PolyMatrix d(df.rows + dg.rows, df.cols + dg.cols);
    for (int r = 0; r < df.rows; ++r) {
      for (int c = 0; c < df.cols; ++c) d.at(r, c) = df.at(r, c);
    }
    for (int r = 0; r < dg.rows; ++r) {
      for (int c = 0; c < dg.cols; ++c) d.at(df.rows + r, df.cols + c) = dg.at(r, c);
    }
    ds.push_back(std::move(d));
  }
  return ChainComplex::make_presented(F.ring(), lo, tw, ds, rels);
}

ChainComplex tensor_base_change(const ChainComplex& F, const RingHandle& target,
                                const std::vector<Polynomial>& images) {
  const Ring& R = *F.ring();
  const Ring& T = *target;
  if (static_cast<int>(images.size()) != R.nvars()) {
    throw MalformedInput("ring map needs " + std::to_string(R.nvars()) + " images, got " +
                         std::to_string(images.size()));
  }
  std::vector<Polynomial> im;
  for (const auto& g : images) {
    Polynomial r = T.reduce(g);
    if (!r.is_zero() && (!r.is_homogeneous() || r.degree() != 1)) {
      throw PreconditionError("ring map images must be linear forms, got " + T.poly().format(r));
    }
    im.push_back(std::move(r));
  }
  for (const auto& rel : R.relations()) {
    if (!T.reduce(R.poly().substitute(rel, im, T.poly())).is_zero()) {
      throw PreconditionError("ring map does not send relation " + R.poly().format(rel) + " to zero");
    }
  }
  auto map_matrix = [&](const PolyMatrix& m) {
    PolyMatrix out(m.rows, m.cols);
    for (std::size_t e = 0; e < m.entries.size(); ++e) {
      out.entries[e] = T.reduce(R.poly().substitute(m.entries[e], im, T.poly()));
    }
    return out;
  };
  if (F.empty_window()) return ChainComplex::zero(target);
  std::vector<std::vector<int>> tw;
  std::vector<PolyMatrix> ds, rels;
  for (int i = F.lo(); i <= F.hi(); ++i) {
    tw.push_back(F.twists(i));
    rels.push_back(map_matrix(F.relations(i)));
    if (i > F.lo()) ds.push_back(map_matrix(F.differential(i)));
  }
  return ChainComplex::make_presented(target, F.lo(), tw, ds, rels);
}

// ---- kernels and membership ----

KernelGens kernel_over_ring(const Ring& R, const PolyMatrix& m, const std::vector<int>& source_twists,
                            const std::vector<int>& target_twists, const PolyMatrix& target_relations,
                            const CancelToken* cancel) {
  const auto& S = R.poly();
  KernelGens out;
  out.generators = PolyMatrix(m.cols, 0);
  if (m.cols == 0) return out;
  std::vector<std::vector<Polynomial>> cols;
  if (m.rows == 0) {
    for (int c = 0; c < m.cols; ++c) cols.push_back(identity_matrix(S, m.cols).column(c));
  } else {
    PolyMatrix extra = R.relation_block(m.rows);
    if (target_relations.cols > 0) extra = hstack(target_relations, extra);
    GbOptions opts;
    opts.cancel = cancel;
    for (auto& c : kernel_modulo(S, m, target_twists, source_twists, extra, opts)) {
      auto r = R.reduce(c);
      if (vector_degree(r, source_twists)) cols.push_back(std::move(r));
    }
  }
  auto keep = minimal_generator_indices(R, source_twists, cols);
  std::vector<std::pair<int, int>> by_degree;
  for (int k : keep) by_degree.emplace_back(*vector_degree(cols[k], source_twists), k);
  std::stable_sort(by_degree.begin(), by_degree.end(), [](auto a, auto b) { return a.first < b.first; });
  for (auto [d, k] : by_degree) {
    out.generators.append_column(cols[k]);
    out.twists.push_back(d);
  }
  return out;
}

SubmoduleTest::SubmoduleTest(const Ring& R, std::vector<int> twists, const PolyMatrix& generators)
    : R_(&R), ambient_{&R.poly(), std::move(twists)} {
  if (ambient_.rank() == 0) return;
  std::vector<ModuleVector> gens;
  for (int c = 0; c < generators.cols; ++c) {
    auto v = ambient_.from_column(generators.column(c));
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  PolyMatrix J = R.relation_block(ambient_.rank());
  for (int c = 0; c < J.cols; ++c) gens.push_back(ambient_.from_column(J.column(c)));
  gb_ = module_gb(ambient_, std::move(gens));
}

bool SubmoduleTest::contains(const std::vector<Polynomial>& v) const {
  if (ambient_.rank() == 0) return true;
  return normal_form(ambient_, ambient_.from_column(v), gb_).is_zero();
}

// ---- homology ----

HomologyData homology(const ChainComplex& F, int i, const HomologyOptions& opts) {
  const Ring& R = *F.ring();
  HomologyData h;
  h.degree = i;
  h.hilbert.nvars = R.nvars();
  h.length = 0;
  h.presentation = PolyMatrix(0, 0);
  if (F.rank(i) == 0) return h;
  KernelGens Z = kernel_over_ring(R, F.differential(i), F.twists(i), F.twists(i - 1), F.relations(i - 1),
                                  opts.cancel);
  const int t = Z.generators.cols;
  if (t == 0) return h;
  const int r = F.rank(i);
  PolyMatrix extra = hstack(hstack(F.differential(i + 1), F.relations(i)), R.relation_block(r));
  GbOptions gopts;
  gopts.cancel = opts.cancel;
  GroebnerBasis rel = kernel_modulo_gb(R.poly(), Z.generators, F.twists(i), Z.twists, extra, gopts);
  AmbientModule amb{&R.poly(), Z.twists};
  h.generator_twists = Z.twists;
  h.presentation = PolyMatrix(t, 0);
  for (const auto& g : rel.elements) h.presentation.append_column(amb.to_column(g, 0, t));
  h.hilbert = hilbert_data(R.nvars(), rel);
  h.is_zero = h.hilbert.is_zero();
  h.finite_length = h.hilbert.finite_length();
  h.length = h.hilbert.length;
  DenseMatrix constants(t, h.presentation.cols);
  for (int j = 0; j < t; ++j) {
    for (int c = 0; c < h.presentation.cols; ++c) constants.at(j, c) = h.presentation.at(j, c).constant_term();
  }
  h.min_gens = t - rank(constants, R.field());
  h.window_from = Z.twists.front();
  int top = Z.twists.back();
  if (h.finite_length) {
    // past the top generator degree the first zero is followed only by zeros
    int d = h.window_from;
    while (d <= top || h.hilbert.value(d) != 0) h.window.push_back(h.hilbert.value(d++));
    while (!h.window.empty() && h.window.back() == 0) h.window.pop_back();
  } else {
    h.window = h.hilbert.window(h.window_from, top + opts.window);
  }
  return h;
}

// ---- minimization ----

ChainComplex minimize(const ChainComplex& F) {
  if (!F.is_free()) throw PreconditionError("minimize requires a free complex");
  if (F.empty_window()) return F;
  const Ring& R = *F.ring();
  const auto& S = R.poly();
  const auto& K = R.field();
  int n = F.hi() - F.lo() + 1;
  std::vector<std::vector<int>> tw;
  std::vector<PolyMatrix> d;  // d[k] = differential of degree lo + k
  for (int i = F.lo(); i <= F.hi(); ++i) {
    tw.push_back(F.twists(i));
    d.push_back(F.differential(i));
  }
  for (;;) {
    int pk = -1, pr = -1, pc = -1;
    for (int k = 1; k < n && pk < 0; ++k) {
      for (int r = 0; r < d[k].rows && pk < 0; ++r) {
        for (int c = 0; c < d[k].cols; ++c) {
          if (d[k].at(r, c).is_unit()) {
            pk = k, pr = r, pc = c;
            break;
          }
        }
      }
    }
    if (pk < 0) break;
    PolyMatrix& D = d[pk];
    auto uinv = K.inv(D.at(pr, pc).constant_term());
    PolyMatrix E(D.rows - 1, D.cols - 1);
    for (int r = 0, orow = 0; r < D.rows; ++r) {
      if (r == pr) continue;
      for (int c = 0, ocol = 0; c < D.cols; ++c) {
        if (c == pc) continue;
        Polynomial e = D.at(r, c);
        if (!D.at(r, pc).is_zero() && !D.at(pr, c).is_zero()) {
          e = S.sub(e, S.scale(S.mul(D.at(r, pc), D.at(pr, c)), uinv));
        }
        E.at(orow, ocol++) = R.reduce(e);
      }
      ++orow;
    }
    D = std::move(E);
    if (pk + 1 < n) d[pk + 1] = remove_row(d[pk + 1], pc);
    d[pk - 1] = remove_col(d[pk - 1], pr);
    tw[pk].erase(tw[pk].begin() + pc);
    tw[pk - 1].erase(tw[pk - 1].begin() + pr);
  }
  int first = 0, last = n - 1;
  while (first < n && tw[first].empty()) ++first;
  while (last >= 0 && tw[last].empty()) --last;
  if (first > last) return ChainComplex::zero(F.ring());
  std::vector<std::vector<int>> t(tw.begin() + first, tw.begin() + last + 1);
  std::vector<PolyMatrix> ds(d.begin() + first + 1, d.begin() + last + 1);
  return ChainComplex::make(F.ring(), F.lo() + first, t, ds);
}

// ---- lifting and homotopies ----

ChainMap lift_map(const ChainComplex& F, const ChainComplex& G, const PolyMatrix& bottom, const LiftOptions& opts) {
  if (F.empty_window()) return ChainMap::zero(F, G);
  const Ring& R = *F.ring();
  const int s = F.lo();
  if (bottom.rows != G.rank(s) || bottom.cols != F.rank(s)) {
    throw MalformedInput("bottom map has shape " + std::to_string(bottom.rows) + "x" + std::to_string(bottom.cols) +
                         ", expected " + std::to_string(G.rank(s)) + "x" + std::to_string(F.rank(s)));
  }
  GradedPieces pieces(R);
  std::map<int, PolyMatrix> comps;
  comps[s] = reduce_matrix(R, bottom);
  check_entry_degrees(R, comps[s], F.twists(s), G.twists(s), "bottom map");
  for (int i = s + 1; i <= F.hi(); ++i) {
    poll(opts.cancel);
    PolyMatrix Y = multiply(R, comps[i - 1], F.differential(i));
    PolyMatrix X(G.rank(i), F.rank(i));
    PolyMatrix dG = G.differential(i);
    PolyMatrix rel = G.relations(i - 1);
    const auto& tg = G.twists(i);
    const auto& tg1 = G.twists(i - 1);
    std::vector<int> rel_deg;
    for (int c = 0; c < rel.cols; ++c) rel_deg.push_back(vector_degree(rel.column(c), tg1).value_or(0));
    for (int k = 0; k < F.rank(i); ++k) {
      const int deg = F.twists(i)[k];
      GradedLinearSystem sys(pieces);
      std::vector<int> xu(tg.size(), -1), gu(rel.cols, -1);
      for (std::size_t l = 0; l < tg.size(); ++l) {
        if (pieces.dim(deg - tg[l]) > 0) xu[l] = sys.add_unknown(deg - tg[l]);
      }
      for (int c = 0; c < rel.cols; ++c) {
        if (pieces.dim(deg - rel_deg[c]) > 0) gu[c] = sys.add_unknown(deg - rel_deg[c]);
      }
      for (std::size_t j = 0; j < tg1.size(); ++j) {
        int e = sys.add_equation(deg - tg1[j], Y.at(static_cast<int>(j), k));
        for (std::size_t l = 0; l < tg.size(); ++l) {
          if (xu[l] >= 0) sys.add_term(e, dG.at(static_cast<int>(j), static_cast<int>(l)), xu[l]);
        }
        for (int c = 0; c < rel.cols; ++c) {
          if (gu[c] >= 0) sys.add_term(e, rel.at(static_cast<int>(j), c), gu[c]);
        }
      }
      auto sol = sys.solve(opts.reverse_pivots, opts.cancel);
      if (!sol) throw ObstructionError("lift obstructed at degree " + std::to_string(i));
      for (std::size_t l = 0; l < tg.size(); ++l) {
        if (xu[l] >= 0) X.at(static_cast<int>(l), k) = (*sol)[xu[l]];
      }
    }
    comps[i] = std::move(X);
  }
  return ChainMap::make(F, G, std::move(comps));
}

HomotopyVerdict is_null_homotopic(const ChainMap& phi, const LiftOptions& opts) {
  const auto& X = phi.source();
  const auto& Y = phi.target();
  if (!X.is_free()) throw PreconditionError("null-homotopy test requires a free source");
  const Ring& R = *X.ring();
  HomotopyVerdict v;
  auto zero_homotopy = [&] {
    std::map<int, PolyMatrix> a;
    for (int n = X.lo(); n <= X.hi(); ++n) a[n] = PolyMatrix(Y.rank(n + 1), X.rank(n));
    return a;
  };
  bool all_zero = true;
  for (int n = X.lo(); n <= X.hi(); ++n) all_zero = all_zero && phi.component(n).is_zero();
  if (X.empty_window() || all_zero) {
    v.null_homotopic = true;
    v.homotopy = zero_homotopy();
    return v;
  }
  GradedPieces pieces(R);
  GradedLinearSystem sys(pieces);
  // alpha[n](j, k): X_n -> Y_{n+1}; gamma[n](c, k): slack for relations of Y_n
  std::map<int, std::vector<int>> alpha, gamma;
  std::map<int, std::vector<int>> rel_deg;
  for (int n = X.lo() - 1; n <= X.hi(); ++n) {
    const auto& tx = X.twists(n);
    const auto& ty = Y.twists(n + 1);
    auto& a = alpha[n];
    a.assign(ty.size() * tx.size(), -1);
    for (std::size_t j = 0; j < ty.size(); ++j) {
      for (std::size_t k = 0; k < tx.size(); ++k) {
        int deg = tx[k] - ty[j];
        if (pieces.dim(deg) > 0) a[j * tx.size() + k] = sys.add_unknown(deg);
      }
    }
  }
  for (int n = X.lo(); n <= X.hi(); ++n) {
    PolyMatrix rel = Y.relations(n);
    const auto& tx = X.twists(n);
    auto& rd = rel_deg[n];
    auto& g = gamma[n];
    g.assign(static_cast<std::size_t>(rel.cols) * tx.size(), -1);
    for (int c = 0; c < rel.cols; ++c) {
      rd.push_back(vector_degree(rel.column(c), Y.twists(n)).value_or(0));
      for (std::size_t k = 0; k < tx.size(); ++k) {
        int deg = tx[k] - rd[c];
        if (pieces.dim(deg) > 0) g[c * tx.size() + k] = sys.add_unknown(deg);
      }
    }
  }
  for (int n = X.lo(); n <= X.hi(); ++n) {
    const auto& tx = X.twists(n);
    const auto& ty = Y.twists(n);
    const auto& ty1 = Y.twists(n + 1);
    const auto& tx1 = X.twists(n - 1);
    PolyMatrix dY = Y.differential(n + 1);
    PolyMatrix dX = X.differential(n);
    PolyMatrix rel = Y.relations(n);
    PolyMatrix f = phi.component(n);
    const auto& a_here = alpha[n];
    const auto& a_prev = alpha[n - 1];
    const auto& g = gamma[n];
    for (std::size_t j = 0; j < ty.size(); ++j) {
      for (std::size_t k = 0; k < tx.size(); ++k) {
        int e = sys.add_equation(tx[k] - ty[j], f.at(static_cast<int>(j), static_cast<int>(k)));
        for (std::size_t l = 0; l < ty1.size(); ++l) {
          int u = a_here[l * tx.size() + k];
          if (u >= 0) sys.add_term(e, dY.at(static_cast<int>(j), static_cast<int>(l)), u);
        }
        for (std::size_t l = 0; l < tx1.size(); ++l) {
          int u = a_prev[j * tx1.size() + l];
          if (u >= 0) sys.add_term(e, dX.at(static_cast<int>(l), static_cast<int>(k)), u);
        }
        for (int c = 0; c < rel.cols; ++c) {
          int u = g[c * tx.size() + k];
          if (u >= 0) sys.add_term(e, rel.at(static_cast<int>(j), c), u);
        }
      }
    }
  }
  auto sol = sys.solve(opts.reverse_pivots, opts.cancel);
  if (!sol) return v;
  v.null_homotopic = true;
  for (int n = X.lo(); n <= X.hi(); ++n) {
    const auto& tx = X.twists(n);
    const auto& ty = Y.twists(n + 1);
    PolyMatrix a(static_cast<int>(ty.size()), static_cast<int>(tx.size()));
    for (std::size_t j = 0; j < ty.size(); ++j) {
      for (std::size_t k = 0; k < tx.size(); ++k) {
        int u = alpha[n][j * tx.size() + k];
        if (u >= 0) a.at(static_cast<int>(j), static_cast<int>(k)) = (*sol)[u];
      }
    }
    v.homotopy[n] = std::move(a);
  }
  return v;
}

bool is_ghost(const ChainMap& phi, const CancelToken* cancel) {
  const auto& X = phi.source();
  const auto& Y = phi.target();
  const Ring& R = *X.ring();
  for (int i = X.lo(); i <= X.hi(); ++i) {
    if (Y.rank(i) == 0 || X.rank(i) == 0) continue;
    poll(cancel);
    PolyMatrix f = phi.component(i);
    if (f.is_zero()) continue;
    KernelGens Z = kernel_over_ring(R, X.differential(i), X.twists(i), X.twists(i - 1), X.relations(i - 1), cancel);
    if (Z.generators.cols == 0) continue;
    PolyMatrix img = multiply(R, f, Z.generators);
    if (!columns_in(R, img, Y.twists(i), hstack(Y.differential(i + 1), Y.relations(i)))) return false;
  }
  return true;
}

}  // namespace levelcert
