#include "levelcert/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "levelcert/error.hpp"

namespace levelcert {

ModuleVector AmbientModule::from_column(const std::vector<Polynomial>& col, int offset) const {
  ModuleVector v;
  for (std::size_t r = 0; r < col.size(); ++r) {
    for (const auto& t : col[r].terms) {
      v.terms.push_back({t.mono, static_cast<std::uint32_t>(offset + static_cast<int>(r)), t.coef});
    }
  }
  // components ascending and each polynomial already descending: POT order holds
  return v;
}

std::vector<Polynomial> AmbientModule::to_column(const ModuleVector& v, int offset, int length) const {
  std::vector<Polynomial> col(length);
  for (const auto& t : v.terms) {
    int c = static_cast<int>(t.comp) - offset;
    if (c >= 0 && c < length) col[c].terms.push_back({t.mono, t.coef});
  }
  return col;
}

ModuleVector AmbientModule::sub_mul_term(const ModuleVector& a, const ModuleVector& b, const Monomial& m,
                                         PrimeField::Elem c) const {
  if (c == 0 || b.is_zero()) return a;
  const auto& f = ring->field();
  const auto nc = f.neg(c);
  ModuleVector r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    VecTerm bt{b.terms[j].mono * m, b.terms[j].comp, 0};
    int s = i == a.terms.size() ? -1 : cmp(a.terms[i], bt);
    if (s > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (s < 0) {
      bt.coef = f.mul(b.terms[j].coef, nc);
      r.terms.push_back(bt);
      ++j;
    } else {
      auto v = f.add(a.terms[i].coef, f.mul(b.terms[j].coef, nc));
      if (v) {
        bt.coef = v;
        r.terms.push_back(bt);
      }
      ++i;
      ++j;
    }
  }
  return r;
}

ModuleVector AmbientModule::monic(const ModuleVector& a) const {
  if (a.is_zero() || a.lead().coef == 1) return a;
  const auto& f = ring->field();
  auto inv = f.inv(a.lead().coef);
  ModuleVector r = a;
  for (auto& t : r.terms) t.coef = f.mul(t.coef, inv);
  return r;
}

bool AmbientModule::is_homogeneous(const ModuleVector& v) const {
  for (const auto& t : v.terms) {
    if (degree(t) != degree(v.lead())) return false;
  }
  return true;
}

bool GroebnerBasis::is_whole_module() const {
  std::vector<bool> unit(twists.size(), false);
  for (const auto& g : elements) {
    if (g.lead().mono.is_one()) unit[g.lead().comp] = true;
  }
  return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& g : elements) {
    Polynomial f;
    for (const auto& t : g.terms) f.terms.push_back({t.mono, t.coef});
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

/// Full reduction against monic elements; with lead_only, stops once the lead
/// term is irreducible.
ModuleVector reduce(const AmbientModule& amb, ModuleVector f, const std::vector<ModuleVector>& elems,
                    const std::vector<std::vector<int>>& by_comp, bool lead_only, int skip = -1) {
  ModuleVector out;
  std::size_t start = 0;
  while (start < f.terms.size()) {
    const VecTerm t = f.terms[start];
    int d = -1;
    for (int idx : by_comp[t.comp]) {
      if (idx != skip && elems[idx].lead().mono.divides(t.mono)) {
        d = idx;
        break;
      }
    }
    if (d < 0) {
      if (lead_only) {
        out.terms.insert(out.terms.end(), f.terms.begin() + static_cast<std::ptrdiff_t>(start), f.terms.end());
        return out;
      }
      out.terms.push_back(t);
      ++start;
      continue;
    }
    ModuleVector rest;
    rest.terms.assign(f.terms.begin() + static_cast<std::ptrdiff_t>(start), f.terms.end());
    f = amb.sub_mul_term(rest, elems[d], elems[d].lead().mono.quotient_of(t.mono), t.coef);
    start = 0;
  }
  return out;
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
  int deg;
};

class Builder {
 public:
  Builder(const AmbientModule& amb, const GbOptions& opts)
      : amb_(amb), opts_(opts), by_comp_(amb.twists.size()), ideal_(amb.twists.size() == 1) {}

  GroebnerBasis run(std::vector<ModuleVector> inputs) {
    std::vector<ModuleVector> pending;
    for (auto& g : inputs) {
      if (!g.is_zero()) pending.push_back(std::move(g));
    }
    std::stable_sort(pending.begin(), pending.end(), [this](const ModuleVector& a, const ModuleVector& b) {
      return amb_.degree(a.lead()) < amb_.degree(b.lead());
    });
    std::size_t next = 0;
    while (next < pending.size() || !pairs_.empty()) {
      poll(opts_.cancel);
      int pair_deg = INT32_MAX;
      std::size_t best = 0;
      for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (pairs_[k].deg < pair_deg) {
          pair_deg = pairs_[k].deg;
          best = k;
        }
      }
      ModuleVector h;
      if (next < pending.size() && amb_.degree(pending[next].lead()) <= pair_deg) {
        h = std::move(pending[next++]);
      } else {
        Pair p = pairs_[best];
        pairs_[best] = pairs_.back();
        pairs_.pop_back();
        h = spoly(p);
      }
      h = reduce(amb_, std::move(h), elems_, by_comp_, false);
      if (!h.is_zero()) insert(amb_.monic(h));
    }
    return finish();
  }

 private:
  ModuleVector spoly(const Pair& p) const {
    const auto& a = elems_[p.i];
    const auto& b = elems_[p.j];
    ModuleVector left;
    left.terms.reserve(a.terms.size());
    Monomial ma = a.lead().mono.quotient_of(p.lcm);
    for (const auto& t : a.terms) left.terms.push_back({t.mono * ma, t.comp, t.coef});
    return amb_.sub_mul_term(left, b, b.lead().mono.quotient_of(p.lcm), 1);
  }

  // Gebauer-Moeller installation of a new element.
  void insert(ModuleVector h) {
    const int hi = static_cast<int>(elems_.size());
    const auto& hl = h.lead();
    std::vector<Pair> fresh;
    for (int g : by_comp_[hl.comp]) {
      Monomial l = lcm(hl.mono, elems_[g].lead().mono);
      fresh.push_back({g, hi, l, l.deg + amb_.twists[hl.comp]});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& p = fresh[a];
      bool product = ideal_ && coprime(hl.mono, elems_[p.i].lead().mono);
      bool dominated = false;
      if (!product) {
        for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b) {
          dominated = fresh[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
          dominated = kept[b].lcm.divides(p.lcm);
        }
      }
      if (!dominated) kept.push_back(p);
    }
    std::vector<Pair> next_pairs;
    next_pairs.reserve(pairs_.size() + kept.size());
    for (const auto& p : pairs_) {
      bool drop = elems_[p.i].lead().comp == hl.comp && hl.mono.divides(p.lcm) &&
                  lcm(elems_[p.i].lead().mono, hl.mono) != p.lcm &&
                  lcm(elems_[p.j].lead().mono, hl.mono) != p.lcm;
      if (!drop) next_pairs.push_back(p);
    }
    for (const auto& p : kept) {
      if (!(ideal_ && coprime(hl.mono, elems_[p.i].lead().mono))) next_pairs.push_back(p);
    }
    pairs_ = std::move(next_pairs);
    by_comp_[hl.comp].push_back(hi);
    elems_.push_back(std::move(h));
  }

  GroebnerBasis finish() {
    GroebnerBasis gb;
    gb.order = amb_.ring->order();
    gb.twists = amb_.twists;
    // drop elements whose lead is divisible by another lead
    std::vector<int> minimal;
    for (int i = 0; i < static_cast<int>(elems_.size()); ++i) {
      bool redundant = false;
      for (int j : by_comp_[elems_[i].lead().comp]) {
        if (j != i && elems_[j].lead().mono.divides(elems_[i].lead().mono) &&
            (elems_[j].lead().mono != elems_[i].lead().mono || j < i)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(i);
    }
    std::vector<ModuleVector> basis;
    for (int i : minimal) basis.push_back(std::move(elems_[i]));
    if (opts_.reduce) {
      std::vector<std::vector<int>> idx(amb_.twists.size());
      for (int i = 0; i < static_cast<int>(basis.size()); ++i) idx[basis[i].lead().comp].push_back(i);
      for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        poll(opts_.cancel);
        ModuleVector tail;
        tail.terms.assign(basis[i].terms.begin() + 1, basis[i].terms.end());
        ModuleVector red = reduce(amb_, std::move(tail), basis, idx, false, i);
        red.terms.insert(red.terms.begin(), basis[i].lead());
        basis[i] = std::move(red);
      }
    }
    std::sort(basis.begin(), basis.end(),
              [this](const ModuleVector& a, const ModuleVector& b) { return amb_.cmp(a.lead(), b.lead()) > 0; });
    gb.elements = std::move(basis);
    gb.reduced = opts_.reduce;
    return gb;
  }

  const AmbientModule& amb_;
  const GbOptions& opts_;
  std::vector<ModuleVector> elems_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<Pair> pairs_;
  bool ideal_;
};

std::vector<std::vector<int>> index_by_comp(const GroebnerBasis& gb) {
  std::vector<std::vector<int>> idx(gb.twists.size());
  for (int i = 0; i < static_cast<int>(gb.elements.size()); ++i) idx[gb.elements[i].lead().comp].push_back(i);
  return idx;
}

}  // namespace

GroebnerBasis module_gb(const AmbientModule& ambient, std::vector<ModuleVector> gens, const GbOptions& opts) {
  for (const auto& g : gens) {
    for (const auto& t : g.terms) {
      if (static_cast<int>(t.comp) >= ambient.rank()) throw MalformedInput("module vector component out of range");
    }
  }
  Builder b(ambient, opts);
  return b.run(std::move(gens));
}

GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens, const GbOptions& opts) {
  AmbientModule amb{&ring, {0}};
  std::vector<ModuleVector> vs;
  for (const auto& g : gens) {
    if (ring.nvars() == 0 && g.degree() > 0) throw MalformedInput("nonconstant input over an empty variable set");
    vs.push_back(amb.from_column({g}));
  }
  return module_gb(amb, std::move(vs), opts);
}

GroebnerBasis module_gb(const PolyRing& ring, const PolyMatrix& m, std::vector<int> row_twists,
                        const GbOptions& opts) {
  if (row_twists.empty()) row_twists.assign(m.rows, 0);
  if (static_cast<int>(row_twists.size()) != m.rows) throw MalformedInput("row twist count does not match matrix rows");
  AmbientModule amb{&ring, row_twists};
  std::vector<ModuleVector> vs;
  for (int c = 0; c < m.cols; ++c) vs.push_back(amb.from_column(m.column(c)));
  return module_gb(amb, std::move(vs), opts);
}

ModuleVector normal_form(const AmbientModule& ambient, const ModuleVector& f, const GroebnerBasis& gb) {
  return reduce(ambient, f, gb.elements, index_by_comp(gb), false);
}

Polynomial nf(const PolyRing& ring, const Polynomial& f, const GroebnerBasis& gb) {
  AmbientModule amb{&ring, {0}};
  ModuleVector r = normal_form(amb, amb.from_column({f}), gb);
  Polynomial out;
  for (const auto& t : r.terms) out.terms.push_back({t.mono, t.coef});
  return out;
}

bool ideal_contains(const PolyRing& ring, const GroebnerBasis& gb, const Polynomial& f) {
  return nf(ring, f, gb).is_zero();
}

bool satisfies_buchberger_criterion(const AmbientModule& ambient, const GroebnerBasis& gb) {
  auto idx = index_by_comp(gb);
  const auto& e = gb.elements;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].lead().comp != e[j].lead().comp) continue;
      Monomial l = lcm(e[i].lead().mono, e[j].lead().mono);
      ModuleVector left;
      Monomial mi = e[i].lead().mono.quotient_of(l);
      auto inv_i = ambient.ring->field().inv(e[i].lead().coef);
      for (const auto& t : e[i].terms) {
        left.terms.push_back({t.mono * mi, t.comp, ambient.ring->field().mul(t.coef, inv_i)});
      }
      auto inv_j = ambient.ring->field().inv(e[j].lead().coef);
      ModuleVector s = ambient.sub_mul_term(left, e[j], e[j].lead().mono.quotient_of(l), inv_j);
      if (!reduce(ambient, s, e, idx, false).is_zero()) return false;
    }
  }
  return true;
}

std::vector<int> column_degrees(const PolyMatrix& m, const std::vector<int>& row_twists, int fallback) {
  std::vector<int> out(m.cols, fallback);
  for (int c = 0; c < m.cols; ++c) {
    for (int r = 0; r < m.rows; ++r) {
      if (!m.at(r, c).is_zero()) {
        out[c] = m.at(r, c).degree() + row_twists[r];
        break;
      }
    }
  }
  return out;
}

GroebnerBasis kernel_modulo_gb(const PolyRing& ring, const PolyMatrix& m, const std::vector<int>& row_twists,
                               const std::vector<int>& col_twists, const PolyMatrix& extra, const GbOptions& opts) {
  const int n = m.rows;
  const int k = m.cols;
  if (extra.cols > 0 && extra.rows != n) throw MalformedInput("extra generators have the wrong length");
  AmbientModule amb{&ring, row_twists};
  amb.twists.insert(amb.twists.end(), col_twists.begin(), col_twists.end());
  std::vector<ModuleVector> gens;
  for (int c = 0; c < k; ++c) {
    ModuleVector v = amb.from_column(m.column(c));
    v.terms.push_back({Monomial{}, static_cast<std::uint32_t>(n + c), 1});
    if (!amb.is_homogeneous(v)) throw MalformedInput("kernel input column " + std::to_string(c) + " is not homogeneous");
    gens.push_back(std::move(v));
  }
  for (int c = 0; c < extra.cols; ++c) {
    ModuleVector v = amb.from_column(extra.column(c));
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  GroebnerBasis gb = module_gb(amb, std::move(gens), opts);
  // Under position-over-term order the elements living in the last k
  // components form a Gröbner basis of that submodule.
  GroebnerBasis out;
  out.order = gb.order;
  out.twists = col_twists;
  out.reduced = gb.reduced;
  for (auto& g : gb.elements) {
    if (static_cast<int>(g.lead().comp) < n) continue;
    for (auto& t : g.terms) t.comp -= n;
    out.elements.push_back(std::move(g));
  }
  return out;
}

std::vector<std::vector<Polynomial>> kernel_modulo(const PolyRing& ring, const PolyMatrix& m,
                                                   const std::vector<int>& row_twists,
                                                   const std::vector<int>& col_twists, const PolyMatrix& extra,
                                                   const GbOptions& opts) {
  GroebnerBasis gb = kernel_modulo_gb(ring, m, row_twists, col_twists, extra, opts);
  AmbientModule amb{&ring, col_twists};
  std::vector<std::vector<Polynomial>> out;
  for (const auto& g : gb.elements) out.push_back(amb.to_column(g, 0, m.cols));
  return out;
}

SyzygyData syzygies(const PolyRing& ring, const PolyMatrix& m, std::vector<int> row_twists, const GbOptions& opts) {
  if (row_twists.empty()) row_twists.assign(m.rows, 0);
  SyzygyData data;
  data.matrix = m;
  auto ctw = column_degrees(m, row_twists);
  auto gens = kernel_modulo(ring, m, row_twists, ctw, PolyMatrix(m.rows, 0), opts);
  data.generators = PolyMatrix(m.cols, 0);
  AmbientModule amb{&ring, ctw};
  for (auto& g : gens) {
    data.generator_twists.push_back(amb.degree(amb.from_column(g).lead()));
    data.generators.append_column(g);
  }
  return data;
}

// ---- Hilbert series of monomial modules ----

namespace {

using IntPoly = std::vector<long long>;  // coefficient of t^k at index k

IntPoly sub(IntPoly a, const IntPoly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool red = false;
    for (const auto& o : out) {
      if (o.divides(g)) {
        red = true;
        break;
      }
    }
    if (!red) out.push_back(g);
  }
  return out;
}

// Numerator of the Hilbert series of S/(gens): HS = N(t)/(1-t)^n.
IntPoly numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {0};
  }
  // Pure-power-product case: all generators pairwise coprime gives a product formula.
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
    }
  }
  if (pairwise_coprime) {
    IntPoly r{1};
    for (const auto& g : gens) {
      IntPoly f(g.deg + 1, 0);
      f[0] = 1;
      f[g.deg] -= 1;
      IntPoly prod(r.size() + f.size() - 1, 0);
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) prod[i + j] += r[i] * f[j];
      }
      r = std::move(prod);
    }
    return r;
  }
  // N(L' + (m)) = N(L') - t^deg(m) N(L' : m), pivoting on the largest-degree generator
  Monomial last = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      q.exp[i] = g.exp[i] > last.exp[i] ? static_cast<std::uint16_t>(g.exp[i] - last.exp[i]) : 0;
      d += q.exp[i];
    }
    q.deg = d;
    colon.push_back(q);
  }
  return sub(numerator(gens), numerator(std::move(colon)), last.deg);
}

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long HilbertData::value(int d) const {
  long long v = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    int e = d - (low + static_cast<int>(k));
    if (e < 0) continue;
    v += numerator[k] * (nvars == 0 ? (e == 0 ? 1 : 0) : binom(e + nvars - 1, nvars - 1));
  }
  return v;
}

std::vector<long long> HilbertData::window(int from, int to) const {
  std::vector<long long> out;
  for (int d = from; d <= to; ++d) out.push_back(value(d));
  return out;
}

HilbertData hilbert_from_numerator(int nvars, int low, std::vector<long long> total) {
  HilbertData h;
  h.nvars = nvars;
  // trim and normalize so equal series compare equal
  while (!total.empty() && total.back() == 0) total.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < total.size() && total[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros == total.size()) {
    h.low = 0;
    h.dimension = -1;
    h.length = 0;
    return h;
  }
  h.numerator.assign(total.begin() + static_cast<std::ptrdiff_t>(lead_zeros), total.end());
  h.low = low + static_cast<int>(lead_zeros);
  // divide by (1 - t) as often as possible: dim = nvars - multiplicity of t = 1
  IntPoly q = h.numerator;
  int divisions = 0;
  while (divisions < nvars) {
    long long s = std::accumulate(q.begin(), q.end(), 0LL);
    if (s != 0) break;
    // synthetic division by (1 - t): q = (1 - t) r, r_k = sum_{i<=k} q_i
    IntPoly r(q.size() - 1);
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      acc += q[k];
      r[k] = acc;
    }
    q = std::move(r);
    ++divisions;
  }
  h.dimension = nvars - divisions;
  if (h.dimension == 0) h.length = std::accumulate(q.begin(), q.end(), 0LL);
  return h;
}

HilbertData hilbert_data(int nvars, const GroebnerBasis& gb) {
  std::vector<std::vector<Monomial>> leads(gb.twists.size());
  for (const auto& g : gb.elements) leads[g.lead().comp].push_back(g.lead().mono);
  int low = INT32_MAX;
  for (int t : gb.twists) low = std::min(low, t);
  if (gb.twists.empty()) low = 0;
  IntPoly total;
  for (std::size_t c = 0; c < gb.twists.size(); ++c) {
    IntPoly n = numerator(leads[c]);
    int shift = gb.twists[c] - low;
    if (total.size() < n.size() + shift) total.resize(n.size() + shift, 0);
    for (std::size_t i = 0; i < n.size(); ++i) total[i + shift] += n[i];
  }
  return hilbert_from_numerator(nvars, low, std::move(total));
}

std::vector<Monomial> monomials_of_degree(int nvars, int d, MonomialOrder order) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  // enumerate compositions of d into nvars parts
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      Monomial m;
      for (int i = 0; i < nvars; ++i) m.exp[i] = static_cast<std::uint16_t>(e[i]);
      m.deg = d;
      out.push_back(m);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) { return compare(a, b, order) > 0; });
  return out;
}

std::vector<long long> hilbert_by_enumeration(int nvars, const GroebnerBasis& gb, int from, int to) {
  std::vector<long long> out;
  for (int d = from; d <= to; ++d) {
    long long count = 0;
    for (std::size_t c = 0; c < gb.twists.size(); ++c) {
      for (const auto& m : monomials_of_degree(nvars, d - gb.twists[c], gb.order)) {
        bool standard = true;
        for (const auto& g : gb.elements) {
          if (static_cast<std::size_t>(g.lead().comp) == c && g.lead().mono.divides(m)) {
            standard = false;
            break;
          }
        }
        count += standard ? 1 : 0;
      }
    }
    out.push_back(count);
  }
  return out;
}

int krull_dim(const GroebnerBasis& gb, int nvars) {
  std::vector<unsigned> supports;
  for (const auto& g : gb.elements) {
    if (g.lead().mono.is_one()) return -1;
    unsigned s = 0;
    for (int v = 0; v < nvars; ++v) {
      if (g.lead().mono.exp[v]) s |= 1U << v;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned u = 0; u < (1U << nvars); ++u) {
    int size = __builtin_popcount(u);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(), [u](unsigned s) { return (s & ~u) == 0; });
    if (independent) best = size;
  }
  return best;
}

}  // namespace levelcert
