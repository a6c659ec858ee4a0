#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levelcert/groebner.hpp"
#include "levelcert/polynomial.hpp"

namespace levelcert {

/// A standard-graded quotient R = S/J of S = GF(p)[vars] with J homogeneous
/// and contained in the square of the homogeneous maximal ideal m, so that
/// edim(R) is the number of variables. k = GF(p) = R/m.
class Ring {
 public:
  const PolyRing& poly() const { return S_; }
  const PrimeField& field() const { return S_.field(); }
  int nvars() const { return S_.nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& relations_gb() const { return gb_; }
  int edim() const { return S_.nvars(); }
  int krull_dim() const { return krull_dim_; }
  bool artinian() const { return krull_dim_ == 0; }
  /// dim_k R when finite.
  std::optional<long long> k_length() const { return hilbert_.length; }
  const HilbertData& hilbert() const { return hilbert_; }
  /// Largest degree with R_d != 0 (artinian rings only).
  std::optional<int> top_degree() const { return top_degree_; }

  /// Canonical representative of f modulo J.
  Polynomial reduce(const Polynomial& f) const { return nf(S_, f, gb_); }
  std::vector<Polynomial> reduce(const std::vector<Polynomial>& col) const;
  Polynomial parse(std::string_view text) const { return reduce(S_.parse(text)); }
  /// Generators of J as the columns g*e_r of a rows x (rows*|J|) matrix.
  PolyMatrix relation_block(int rows) const;
  std::string describe() const;

 private:
  friend std::shared_ptr<const Ring> make_ring(std::uint64_t, std::vector<std::string>, MonomialOrder,
                                               const std::vector<std::string>&);
  friend std::shared_ptr<const Ring> make_ring(const PolyRing&, std::vector<Polynomial>);
  explicit Ring(PolyRing S) : S_(std::move(S)) {}

  PolyRing S_;
  std::vector<Polynomial> relations_;
  GroebnerBasis gb_;
  int krull_dim_ = 0;
  HilbertData hilbert_;
  std::optional<int> top_degree_;
};

using RingHandle = std::shared_ptr<const Ring>;

/// Validates p prime and every relation homogeneous of degree >= 2.
RingHandle make_ring(std::uint64_t p, std::vector<std::string> vars, MonomialOrder order,
                     const std::vector<std::string>& relations);
RingHandle make_ring(const PolyRing& S, std::vector<Polynomial> relations);

/// A homogeneous ideal of R, stored by normal-form generators and the
/// Gröbner basis of its preimage J + (generators) in S.
class Ideal {
 public:
  Ideal(RingHandle ring, std::vector<Polynomial> generators);

  const RingHandle& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& gb() const { return gb_; }
  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Polynomial& f) const;

 private:
  RingHandle ring_;
  std::vector<Polynomial> gens_;
  GroebnerBasis gb_;
};

Ideal maximal_ideal(const RingHandle& R);
/// I^c generated by all c-fold products of the generators.
Ideal ideal_power(const Ideal& I, int c);

/// A minimal homogeneous generating set of I (subset of its generators).
std::vector<Polynomial> minimal_generators(const Ideal& I);
/// Minimal number of generators dim_k(I / mI). Throws PreconditionError for the unit ideal.
int beta(const Ideal& I);
/// Krull dimension of R/I; -1 if I is the unit ideal.
int dim_quotient(const Ideal& I);

}  // namespace levelcert
