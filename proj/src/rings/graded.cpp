#include "levelcert/graded.hpp"

#include <algorithm>
#include <numeric>

#include "levelcert/error.hpp"
#include "levelcert/ring.hpp"

namespace levelcert {

GradedPieces::Piece& GradedPieces::piece(int d) {
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;
  Piece p;
  if (d >= 0) {
    const auto& gb = R_.relations_gb();
    for (const auto& m : monomials_of_degree(R_.nvars(), d, R_.poly().order())) {
      bool standard = std::none_of(gb.elements.begin(), gb.elements.end(),
                                   [&](const ModuleVector& g) { return g.lead().mono.divides(m); });
      if (standard) {
        p.index.emplace(m, static_cast<int>(p.basis.size()));
        p.basis.push_back(m);
      }
    }
  }
  return cache_.emplace(d, std::move(p)).first->second;
}

const std::vector<Monomial>& GradedPieces::basis(int d) { return piece(d).basis; }

int GradedPieces::index(int d, const Monomial& m) {
  auto& p = piece(d);
  auto it = p.index.find(m);
  return it == p.index.end() ? -1 : it->second;
}

void GradedPieces::accumulate(const Polynomial& f, int d, PrimeField::Elem scale, KVector& out, int offset) {
  const auto& F = R_.field();
  for (const auto& t : f.terms) {
    int i = t.mono.deg == d ? index(d, t.mono) : -1;
    if (i < 0) throw PreconditionError("polynomial is not a homogeneous normal form of degree " + std::to_string(d));
    out[offset + i] = F.add(out[offset + i], F.mul(t.coef, scale));
  }
}

KVector GradedPieces::coords(const Polynomial& f, int d) {
  KVector v(dim(d), 0);
  accumulate(f, d, 1, v, 0);
  return v;
}

Polynomial GradedPieces::from_coords(int d, const PrimeField::Elem* c) {
  const auto& b = basis(d);
  Polynomial f;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (c[i]) f.terms.push_back({b[i], c[i]});
  }
  return f;  // basis is sorted descending, so f is canonical
}

std::vector<int> GradedPieces::offsets(const std::vector<int>& twists, int d, int* total) {
  std::vector<int> off(twists.size());
  int acc = 0;
  for (std::size_t j = 0; j < twists.size(); ++j) {
    off[j] = acc;
    acc += dim(d - twists[j]);
  }
  if (total) *total = acc;
  return off;
}

KVector GradedPieces::vector_coords(const std::vector<int>& twists, int d, const std::vector<Polynomial>& v) {
  int total = 0;
  auto off = offsets(twists, d, &total);
  KVector out(total, 0);
  for (std::size_t j = 0; j < twists.size(); ++j) accumulate(v[j], d - twists[j], 1, out, off[j]);
  return out;
}

std::vector<Polynomial> GradedPieces::vector_from_coords(const std::vector<int>& twists, int d, const KVector& c) {
  auto off = offsets(twists, d, nullptr);
  std::vector<Polynomial> out(twists.size());
  for (std::size_t j = 0; j < twists.size(); ++j) out[j] = from_coords(d - twists[j], c.data() + off[j]);
  return out;
}

DenseMatrix GradedPieces::map_piece(const PolyMatrix& m, const std::vector<int>& source_twists,
                                    const std::vector<int>& target_twists, int d) {
  int src_dim = 0, tgt_dim = 0;
  auto soff = offsets(source_twists, d, &src_dim);
  auto toff = offsets(target_twists, d, &tgt_dim);
  DenseMatrix out(tgt_dim, src_dim);
  const auto& S = R_.poly();
  for (int k = 0; k < m.cols; ++k) {
    const auto& b = basis(d - source_twists[k]);
    for (std::size_t i = 0; i < b.size(); ++i) {
      KVector col(tgt_dim, 0);
      for (int j = 0; j < m.rows; ++j) {
        if (m.at(j, k).is_zero()) continue;
        Polynomial prod = R_.reduce(S.mul_term(m.at(j, k), b[i], 1));
        accumulate(prod, d - target_twists[j], 1, col, toff[j]);
      }
      for (int r = 0; r < tgt_dim; ++r) out.at(r, soff[k] + static_cast<int>(i)) = col[r];
    }
  }
  return out;
}

std::optional<int> vector_degree(const std::vector<Polynomial>& v, const std::vector<int>& twists) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j].is_zero()) return v[j].degree() + twists[j];
  }
  return std::nullopt;
}

std::vector<int> minimal_generator_indices(const Ring& R, const std::vector<int>& twists,
                                           const std::vector<std::vector<Polynomial>>& cols) {
  GradedPieces pieces(R);
  const auto& S = R.poly();
  std::vector<std::pair<int, int>> order;  // (degree, index)
  std::vector<std::vector<Polynomial>> reduced(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    reduced[k] = R.reduce(cols[k]);
    auto d = vector_degree(reduced[k], twists);
    if (d) order.emplace_back(*d, static_cast<int>(k));
  }
  std::stable_sort(order.begin(), order.end(), [](auto a, auto b) { return a.first < b.first; });
  std::vector<int> keep;
  if (order.empty()) return keep;
  // span of the submodule generated so far, tracked degree by degree:
  // N_d = (variables) * N_{d-1} + span of the degree-d generators
  std::vector<std::vector<Polynomial>> span_prev;
  int d = order.front().first;
  std::size_t next = 0;
  while (next < order.size()) {
    int total = 0;
    pieces.offsets(twists, d, &total);
    Echelon span(R.field(), total);
    for (const auto& v : span_prev) {
      for (int x = 0; x < R.nvars(); ++x) {
        std::vector<Polynomial> w(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) w[j] = R.reduce(S.mul_term(v[j], Monomial::variable(x), 1));
        span.insert(pieces.vector_coords(twists, d, w));
      }
    }
    while (next < order.size() && order[next].first == d) {
      int k = order[next].second;
      if (span.insert(pieces.vector_coords(twists, d, reduced[k]))) keep.push_back(k);
      ++next;
    }
    span_prev.clear();
    if (next == order.size()) break;
    for (const auto& row : span.rows()) span_prev.push_back(pieces.vector_from_coords(twists, d, row));
    ++d;
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

int GradedLinearSystem::add_unknown(int degree) {
  int dim = pieces_.dim(degree);
  unknowns_.push_back({degree, total_unknown_dim_, dim});
  total_unknown_dim_ += dim;
  return static_cast<int>(unknowns_.size()) - 1;
}

int GradedLinearSystem::add_equation(int degree, const Polynomial& rhs) {
  equations_.push_back({degree, rhs, {}});
  return static_cast<int>(equations_.size()) - 1;
}

void GradedLinearSystem::add_term(int equation, const Polynomial& coef, int unknown) {
  if (!coef.is_zero()) equations_[equation].terms.emplace_back(coef, unknown);
}

std::optional<std::vector<Polynomial>> GradedLinearSystem::solve(bool reverse_pivots, const CancelToken* cancel) {
  const Ring& R = pieces_.ring();
  const auto& S = R.poly();
  std::vector<int> eq_offset(equations_.size());
  int rows = 0;
  for (std::size_t e = 0; e < equations_.size(); ++e) {
    eq_offset[e] = rows;
    rows += pieces_.dim(equations_[e].degree);
  }
  DenseMatrix A(rows, total_unknown_dim_);
  KVector b(rows, 0);
  for (std::size_t e = 0; e < equations_.size(); ++e) {
    poll(cancel);
    const auto& eq = equations_[e];
    int ed = pieces_.dim(eq.degree);
    if (ed == 0) continue;
    KVector rhs(ed, 0);
    if (!eq.rhs.is_zero()) pieces_.accumulate(R.reduce(eq.rhs), eq.degree, 1, rhs, 0);
    for (int i = 0; i < ed; ++i) b[eq_offset[e] + i] = rhs[i];
    for (const auto& [coef, u] : eq.terms) {
      const auto& unk = unknowns_[u];
      const auto& ubasis = pieces_.basis(unk.degree);
      for (int i = 0; i < unk.dim; ++i) {
        Polynomial prod = R.reduce(S.mul_term(coef, ubasis[i], 1));
        if (prod.is_zero()) continue;
        KVector col(ed, 0);
        pieces_.accumulate(prod, eq.degree, 1, col, 0);
        for (int r = 0; r < ed; ++r) {
          auto& cell = A.at(eq_offset[e] + r, unk.offset + i);
          cell = R.field().add(cell, col[r]);
        }
      }
    }
  }
  auto x = levelcert::solve(std::move(A), std::move(b), R.field(), reverse_pivots, cancel);
  if (!x) return std::nullopt;
  std::vector<Polynomial> out;
  out.reserve(unknowns_.size());
  for (const auto& u : unknowns_) out.push_back(pieces_.from_coords(u.degree, x->data() + u.offset));
  return out;
}

}  // namespace levelcert
