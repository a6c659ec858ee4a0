#include "levelcert/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "levelcert/error.hpp"
#include "levelcert/graded.hpp"

namespace levelcert {

ModulePresentation ModulePresentation::make(RingHandle ring, std::vector<int> twists, PolyMatrix presentation) {
  if (presentation.cols > 0 && presentation.rows != static_cast<int>(twists.size())) {
    throw MalformedInput("presentation has " + std::to_string(presentation.rows) + " rows for " +
                         std::to_string(twists.size()) + " generators");
  }
  if (presentation.cols == 0) presentation = PolyMatrix(static_cast<int>(twists.size()), 0);
  std::vector<int> perm(twists.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return twists[a] < twists[b]; });
  ModulePresentation M;
  M.ring = std::move(ring);
  M.presentation = PolyMatrix(presentation.rows, presentation.cols);
  for (std::size_t r = 0; r < perm.size(); ++r) {
    M.twists.push_back(twists[perm[r]]);
    for (int c = 0; c < presentation.cols; ++c) {
      M.presentation.at(static_cast<int>(r), c) = M.ring->reduce(presentation.at(perm[r], c));
    }
  }
  for (int c = 0; c < M.presentation.cols; ++c) {
    auto col = M.presentation.column(c);
    auto d = vector_degree(col, M.twists);
    for (std::size_t j = 0; j < col.size() && d; ++j) {
      if (!col[j].is_zero() && (!col[j].is_homogeneous() || col[j].degree() + M.twists[j] != *d)) {
        throw MalformedInput("presentation column " + std::to_string(c) + " is not homogeneous");
      }
    }
  }
  return M;
}

ModulePresentation residue_field(const RingHandle& R) {
  PolyMatrix m(1, R->nvars());
  for (int i = 0; i < R->nvars(); ++i) m.at(0, i) = R->poly().variable(i);
  return ModulePresentation::make(R, {0}, m);
}

ModulePresentation quotient_module(const Ideal& I) {
  PolyMatrix m(1, 0);
  for (const auto& g : I.generators()) m.append_column({g});
  return ModulePresentation::make(I.ring(), {0}, m);
}

ModulePresentation free_module(const RingHandle& R, std::vector<int> twists) {
  int n = static_cast<int>(twists.size());
  return ModulePresentation::make(R, std::move(twists), PolyMatrix(n, 0));
}

ModulePresentation prune(const ModulePresentation& M) {
  const Ring& R = *M.ring;
  const auto& S = R.poly();
  const auto& K = R.field();
  std::vector<int> twists = M.twists;
  std::vector<std::vector<Polynomial>> cols;
  for (int c = 0; c < M.presentation.cols; ++c) cols.push_back(M.presentation.column(c));
  for (;;) {
    int pr = -1, pc = -1;
    for (std::size_t c = 0; c < cols.size() && pr < 0; ++c) {
      for (std::size_t r = 0; r < cols[c].size(); ++r) {
        if (cols[c][r].is_unit()) {
          pr = static_cast<int>(r), pc = static_cast<int>(c);
          break;
        }
      }
    }
    if (pr < 0) break;
    const auto pivot = cols[pc];
    auto uinv = K.inv(pivot[pr].constant_term());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (static_cast<int>(c) == pc || cols[c][pr].is_zero()) continue;
      Polynomial f = S.scale(cols[c][pr], uinv);
      for (std::size_t r = 0; r < pivot.size(); ++r) {
        if (!pivot[r].is_zero()) cols[c][r] = R.reduce(S.sub(cols[c][r], S.mul(f, pivot[r])));
      }
    }
    cols.erase(cols.begin() + pc);
    for (auto& col : cols) col.erase(col.begin() + pr);
    twists.erase(twists.begin() + pr);
  }
  PolyMatrix m(static_cast<int>(twists.size()), 0);
  for (const auto& col : cols) {
    if (vector_degree(col, twists)) m.append_column(col);
  }
  return ModulePresentation::make(M.ring, std::move(twists), std::move(m));
}

bool is_free(const ModulePresentation& M) { return prune(M).presentation.cols == 0; }

Resolution resolve_module(const ModulePresentation& M, int steps, const ResolveOptions& opts) {
  if (steps < 0) throw PreconditionError("resolution step bound must be non-negative");
  const Ring& R = *M.ring;
  Resolution res;
  res.target = M;
  ModulePresentation P = prune(M);
  std::vector<std::vector<int>> twists{P.twists};
  std::vector<PolyMatrix> diffs;
  // minimal generators of the relation module give the first differential
  std::vector<std::vector<Polynomial>> cols;
  for (int c = 0; c < P.presentation.cols; ++c) cols.push_back(P.presentation.column(c));
  auto keep = minimal_generator_indices(R, P.twists, cols);
  std::vector<std::pair<int, int>> by_degree;
  for (int k : keep) by_degree.emplace_back(*vector_degree(cols[k], P.twists), k);
  std::stable_sort(by_degree.begin(), by_degree.end(), [](auto a, auto b) { return a.first < b.first; });
  KernelGens next;
  next.generators = PolyMatrix(P.generators(), 0);
  for (auto [d, k] : by_degree) {
    next.generators.append_column(cols[k]);
    next.twists.push_back(d);
  }
  int s = 0;
  bool complete = next.generators.cols == 0;
  while (!complete && s < steps) {
    poll(opts.cancel);
    diffs.push_back(next.generators);
    twists.push_back(next.twists);
    ++s;
    if (s == steps && !opts.check_complete) break;
    next = kernel_over_ring(R, diffs.back(), twists[s], twists[s - 1], PolyMatrix(static_cast<int>(twists[s - 1].size()), 0),
                            opts.cancel);
    complete = next.generators.cols == 0;
  }
  res.complete = complete;
  res.complex = ChainComplex::make(M.ring, 0, twists, diffs);
  for (const auto& t : twists) res.betti.push_back(static_cast<int>(t.size()));
  return res;
}

ChainComplex resolution_of_complex(const ChainComplex& F) { return minimize(F); }

SyzygyComplex syzygy(const ChainComplex& F, int n) {
  ChainComplex P = resolution_of_complex(F);
  SyzygyComplex out;
  out.n = n;
  out.complex = suspend(truncate_geq(P, n).complex, -n);
  out.h0 = ModulePresentation::make(F.ring(), P.twists(n), P.differential(n + 1));
  return out;
}

PdResult pd_probe(const ModulePresentation& M, int bound, const CancelToken* cancel) {
  if (bound < 0) throw PreconditionError("bound must be non-negative");
  ResolveOptions opts;
  opts.cancel = cancel;
  Resolution res = resolve_module(M, bound, opts);
  if (!res.complete) return {false, bound + 1};
  int pd = -1;
  for (std::size_t i = 0; i < res.betti.size(); ++i) {
    if (res.betti[i] > 0) pd = static_cast<int>(i);
  }
  return {true, pd};
}

}  // namespace levelcert
