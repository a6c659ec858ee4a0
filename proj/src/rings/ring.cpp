#include "levelcert/ring.hpp"

#include <algorithm>

#include "levelcert/error.hpp"
#include "levelcert/graded.hpp"

namespace levelcert {

std::vector<Polynomial> Ring::reduce(const std::vector<Polynomial>& col) const {
  std::vector<Polynomial> out;
  out.reserve(col.size());
  for (const auto& f : col) out.push_back(reduce(f));
  return out;
}

PolyMatrix Ring::relation_block(int rows) const {
  PolyMatrix m(rows, 0);
  for (int r = 0; r < rows; ++r) {
    for (const auto& g : relations_) {
      std::vector<Polynomial> col(rows);
      col[r] = g;
      m.append_column(col);
    }
  }
  return m;
}

std::string Ring::describe() const {
  std::string s = "GF(" + std::to_string(field().characteristic()) + ")[";
  for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + S_.var_names()[i];
  s += "]";
  if (!relations_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) s += (i ? ", " : "") + S_.format(relations_[i]);
    s += ")";
  }
  return s;
}

RingHandle make_ring(const PolyRing& S, std::vector<Polynomial> relations) {
  std::shared_ptr<Ring> R(new Ring(S));
  for (auto& f : relations) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw MalformedInput("relation " + S.format(f) + " is not homogeneous");
    if (f.degree() < 2) {
      throw MalformedInput("relation " + S.format(f) + " has degree " + std::to_string(f.degree()) +
                           "; relations must lie in the square of the maximal ideal");
    }
    R->relations_.push_back(S.monic(f));
  }
  R->gb_ = buchberger(S, R->relations_);
  R->relations_ = R->gb_.polynomials();  // reduced basis: a canonical generating set of J
  R->krull_dim_ = krull_dim(R->gb_, S.nvars());
  R->hilbert_ = hilbert_data(S.nvars(), R->gb_);
  if (R->krull_dim_ == 0) {
    // R_{d+1} = 0 forces all higher pieces to vanish for a standard-graded ring
    int d = 0;
    while (R->hilbert_.value(d + 1) != 0) ++d;
    R->top_degree_ = d;
  }
  return R;
}

RingHandle make_ring(std::uint64_t p, std::vector<std::string> vars, MonomialOrder order,
                     const std::vector<std::string>& relations) {
  PolyRing S(PrimeField(p), std::move(vars), order);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(S.parse(r));
  return make_ring(S, std::move(rels));
}

Ideal::Ideal(RingHandle ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    Polynomial r = ring_->reduce(g);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw MalformedInput("ideal generator " + ring_->poly().format(r) + " is not homogeneous");
    gens_.push_back(std::move(r));
  }
  std::vector<Polynomial> all = ring_->relations();
  all.insert(all.end(), gens_.begin(), gens_.end());
  gb_ = buchberger(ring_->poly(), all);
}

bool Ideal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.degree() == 0; });
}

bool Ideal::contains(const Polynomial& f) const { return ideal_contains(ring_->poly(), gb_, f); }

Ideal maximal_ideal(const RingHandle& R) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < R->nvars(); ++i) vars.push_back(R->poly().variable(i));
  return Ideal(R, vars);
}

Ideal ideal_power(const Ideal& I, int c) {
  if (c < 1) throw PreconditionError("ideal power must be at least 1");
  const auto& S = I.ring()->poly();
  std::vector<Polynomial> cur = minimal_generators(I);
  const std::vector<Polynomial> base = cur;
  for (int k = 1; k < c; ++k) {
    std::vector<Polynomial> next;
    for (const auto& a : cur) {
      for (const auto& b : base) next.push_back(I.ring()->reduce(S.mul(a, b)));
    }
    cur = minimal_generators(Ideal(I.ring(), next));
  }
  return Ideal(I.ring(), cur);
}

std::vector<Polynomial> minimal_generators(const Ideal& I) {
  const auto& R = I.ring();
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : I.generators()) cols.push_back({g});
  auto keep = minimal_generator_indices(*R, {0}, cols);
  std::vector<Polynomial> out;
  for (int k : keep) out.push_back(I.generators()[k]);
  return out;
}

int beta(const Ideal& I) {
  if (I.is_unit()) throw PreconditionError("unit ideal");
  return static_cast<int>(minimal_generators(I).size());
}

int dim_quotient(const Ideal& I) { return krull_dim(I.gb(), I.ring()->nvars()); }

}  // namespace levelcert
