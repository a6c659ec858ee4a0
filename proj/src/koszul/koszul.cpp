#include "levelcert/koszul.hpp"

#include <algorithm>
#include <map>

#include "levelcert/error.hpp"
#include "levelcert/graded.hpp"

namespace levelcert {

namespace {

// All i-element subsets of {0..s-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int s, int i) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == i) {
      out.push_back(cur);
      return;
    }
    for (int j = start; j < s; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

KoszulData koszul(const RingHandle& R, const std::vector<Polynomial>& generators) {
  const auto& S = R->poly();
  KoszulData K;
  K.ring = R;
  for (const auto& g : generators) {
    Polynomial r = R->reduce(g);
    if (r.is_zero()) throw PreconditionError("Koszul generator " + S.format(g) + " is zero in the ring");
    if (!r.is_homogeneous()) throw MalformedInput("Koszul generator " + S.format(g) + " is not homogeneous");
    K.generators.push_back(std::move(r));
  }
  const int s = K.length();
  std::vector<std::vector<std::vector<int>>> basis;
  std::vector<std::vector<int>> twists;
  for (int i = 0; i <= s; ++i) {
    basis.push_back(subsets(s, i));
    std::vector<int> t;
    for (const auto& J : basis.back()) {
      int d = 0;
      for (int j : J) d += K.generators[j].degree();
      t.push_back(d);
    }
    twists.push_back(std::move(t));
  }
  std::vector<PolyMatrix> diffs;
  for (int i = 1; i <= s; ++i) {
    std::map<std::vector<int>, int> row_of;
    for (std::size_t r = 0; r < basis[i - 1].size(); ++r) row_of[basis[i - 1][r]] = static_cast<int>(r);
    PolyMatrix d(static_cast<int>(basis[i - 1].size()), static_cast<int>(basis[i].size()));
    for (std::size_t c = 0; c < basis[i].size(); ++c) {
      const auto& J = basis[i][c];
      for (std::size_t t = 0; t < J.size(); ++t) {
        std::vector<int> rest = J;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        const auto& g = K.generators[J[t]];
        d.at(row_of.at(rest), static_cast<int>(c)) = t % 2 == 0 ? g : S.neg(g);
      }
    }
    diffs.push_back(std::move(d));
  }
  K.complex = ChainComplex::make(R, 0, twists, diffs);
  return K;
}

KoszulData koszul(const Ideal& I) {
  if (I.is_unit()) throw PreconditionError("unit ideal");
  return koszul(I.ring(), minimal_generators(I));
}

int depth_via_koszul(const Ideal& I, const std::vector<Polynomial>& generators) {
  if (I.is_unit()) throw PreconditionError("unit ideal");
  KoszulData K = koszul(I.ring(), generators);
  const int s = K.length();
  for (int i = s; i >= 0; --i) {
    if (!homology(K.complex, i).is_zero) return s - i;
  }
  return s;  // unreachable for a proper ideal: H_0 = R/I != 0
}

int depth_via_koszul(const Ideal& I) {
  if (I.is_unit()) throw PreconditionError("unit ideal");
  return depth_via_koszul(I, minimal_generators(I));
}

KappaData kappa(const Ideal& I, int max_b, const KappaOptions& opts) {
  if (I.is_unit()) throw PreconditionError("unit ideal");
  KappaData out;
  out.koszul = koszul(I);
  max_b = std::clamp(max_b, 0, out.koszul.length());
  ResolveOptions ropts;
  ropts.check_complete = false;
  ropts.cancel = opts.cancel;
  out.resolution = resolve_module(quotient_module(Ideal(I.ring(), out.koszul.generators)), max_b, ropts);
  ChainComplex K = truncate_leq(out.koszul.complex, max_b);
  LiftOptions lopts;
  lopts.reverse_pivots = opts.reverse_pivots;
  lopts.cancel = opts.cancel;
  out.lift = lift_map(K, out.resolution.complex, identity_matrix(I.ring()->poly(), 1), lopts);
  for (int b = 0; b <= max_b; ++b) {
    PolyMatrix eta = out.lift.component(b);
    if (std::any_of(eta.entries.begin(), eta.entries.end(), [](const Polynomial& e) { return e.is_unit(); })) {
      out.nonzero.insert(b);
    }
  }
  return out;
}

std::set<int> kappa_nonzero_degrees(const Ideal& I, int max_b, const KappaOptions& opts) {
  return kappa(I, max_b, opts).nonzero;
}

HilbertData hilbert_sum(const HilbertData& a, const HilbertData& b, int shift) {
  if (a.is_zero() && b.is_zero()) return a;
  int nvars = std::max(a.nvars, b.nvars);
  int low = std::min(a.is_zero() ? b.low + shift : a.low, b.is_zero() ? a.low : b.low + shift);
  std::vector<long long> total;
  auto add = [&](const HilbertData& h, int s) {
    if (h.is_zero()) return;
    int off = h.low + s - low;
    if (total.size() < h.numerator.size() + off) total.resize(h.numerator.size() + off, 0);
    for (std::size_t i = 0; i < h.numerator.size(); ++i) total[i + off] += h.numerator[i];
  };
  add(a, 0);
  add(b, shift);
  return hilbert_from_numerator(nvars, low, std::move(total));
}

WellDefinedReport check_well_defined(const RingHandle& R, const std::vector<Polynomial>& generators,
                                     const Polynomial& y) {
  Ideal I(R, generators);
  Polynomial yr = R->reduce(y);
  if (!I.contains(yr)) {
    throw PreconditionError(R->poly().format(y) + " is not in the ideal generated by the given elements");
  }
  if (yr.is_zero()) throw PreconditionError("the added element is zero in the ring");
  KoszulData K = koszul(R, generators);
  std::vector<Polynomial> ext = K.generators;
  ext.push_back(yr);
  KoszulData KY = koszul(R, ext);
  WellDefinedReport rep;
  rep.pass = true;
  std::vector<HilbertData> base;
  for (int i = 0; i <= K.length(); ++i) base.push_back(homology(K.complex, i).hilbert);
  HilbertData zero;
  zero.nvars = R->nvars();
  zero.length = 0;
  for (int i = 0; i <= KY.length(); ++i) {
    rep.extended.push_back(homology(KY.complex, i).hilbert);
    const HilbertData& hi = i <= K.length() ? base[i] : zero;
    const HilbertData& hprev = i >= 1 ? base[i - 1] : zero;
    rep.expected.push_back(hilbert_sum(hi, hprev, yr.degree()));
    if (!(rep.extended.back() == rep.expected.back())) rep.pass = false;
  }
  return rep;
}

bool cycles_in_mK(const RingHandle& R, const std::vector<Polynomial>& generators) {
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : generators) cols.push_back({R->reduce(g)});
  auto keep = minimal_generator_indices(*R, {0}, cols);
  if (keep.size() != generators.size()) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      if (std::find(keep.begin(), keep.end(), static_cast<int>(k)) == keep.end()) {
        throw PreconditionError("generating set is not minimal: " + R->poly().format(generators[k]) +
                                " lies in the ideal of the others plus m times the ideal");
      }
    }
  }
  KoszulData K = koszul(R, generators);
  const auto& F = K.complex;
  for (int i = 1; i <= K.length(); ++i) {
    KernelGens Z = kernel_over_ring(*R, F.differential(i), F.twists(i), F.twists(i - 1), PolyMatrix(0, 0));
    for (const auto& e : Z.generators.entries) {
      if (e.constant_term() != 0) return false;
    }
  }
  return true;
}

}  // namespace levelcert
