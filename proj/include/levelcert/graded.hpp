#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "levelcert/linalg.hpp"
#include "levelcert/polynomial.hpp"

namespace levelcert {

class Ring;

/// Standard-monomial bases of the graded pieces R_d, built on demand.
/// One instance per computation; not shared across threads.
class GradedPieces {
 public:
  explicit GradedPieces(const Ring& R) : R_(R) {}

  const Ring& ring() const { return R_; }
  const std::vector<Monomial>& basis(int d);
  int dim(int d) { return static_cast<int>(basis(d).size()); }
  /// Position of a standard monomial of degree d, -1 otherwise.
  int index(int d, const Monomial& m);

  /// out += scale * coords(f) where f is a normal form homogeneous of degree d.
  void accumulate(const Polynomial& f, int d, PrimeField::Elem scale, KVector& out, int offset);
  KVector coords(const Polynomial& f, int d);
  Polynomial from_coords(int d, const PrimeField::Elem* c);

  /// Layout of F_d = sum_j R_{d - twist_j}: offset of each summand, total dimension.
  std::vector<int> offsets(const std::vector<int>& twists, int d, int* total);
  KVector vector_coords(const std::vector<int>& twists, int d, const std::vector<Polynomial>& v);
  std::vector<Polynomial> vector_from_coords(const std::vector<int>& twists, int d, const KVector& c);

  /// k-matrix of a degree-0 map given by `m` (rows = target) in internal degree d.
  DenseMatrix map_piece(const PolyMatrix& m, const std::vector<int>& source_twists,
                        const std::vector<int>& target_twists, int d);

 private:
  struct Piece {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, int, MonomialHash> index;
  };
  Piece& piece(int d);

  const Ring& R_;
  std::map<int, Piece> cache_;
};

/// Degree of a homogeneous vector of R^n(twists); nullopt for zero.
std::optional<int> vector_degree(const std::vector<Polynomial>& v, const std::vector<int>& twists);

/// Indices of a minimal generating subset of the submodule of R^n(twists)
/// spanned by homogeneous columns, chosen greedily by increasing degree.
std::vector<int> minimal_generator_indices(const Ring& R, const std::vector<int>& twists,
                                           const std::vector<std::vector<Polynomial>>& cols);

/// Graded R-linear equations whose unknowns are homogeneous elements of R,
/// solved as one k-linear system over the standard-monomial coordinates.
class GradedLinearSystem {
 public:
  explicit GradedLinearSystem(GradedPieces& pieces) : pieces_(pieces) {}

  /// Unknown ranging over R_degree.
  int add_unknown(int degree);
  /// Equation in R_degree with right-hand side rhs.
  int add_equation(int degree, const Polynomial& rhs);
  /// Adds coef * unknown to the left-hand side of an equation.
  void add_term(int equation, const Polynomial& coef, int unknown);

  int unknown_count() const { return static_cast<int>(unknowns_.size()); }
  int coordinate_count() const { return total_unknown_dim_; }

  /// Values of all unknowns, or nullopt if inconsistent.
  std::optional<std::vector<Polynomial>> solve(bool reverse_pivots = false, const CancelToken* cancel = nullptr);

 private:
  struct Unknown {
    int degree;
    int offset;
    int dim;
  };
  struct Equation {
    int degree;
    Polynomial rhs;
    std::vector<std::pair<Polynomial, int>> terms;
  };
  GradedPieces& pieces_;
  std::vector<Unknown> unknowns_;
  std::vector<Equation> equations_;
  int total_unknown_dim_ = 0;
};

}  // namespace levelcert
