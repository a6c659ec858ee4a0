#pragma once

// Reference model for tests: an artinian graded ring expanded into an
// explicit k-vector space, built by dense linear algebra on S_d / J_d.
// Shares only input data types with the library.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "levelcert/complex.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // row-major

class ExpandedRing {
 public:
  explicit ExpandedRing(const levelcert::Ring& R);

  std::int64_t p() const { return p_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int dim(int d) const;
  /// Offset of R_d inside the full basis.
  int offset(int d) const;
  int top() const { return static_cast<int>(by_degree_.size()) - 1; }

  /// Coordinates of f in R (f need not be reduced or homogeneous).
  Vec coords(const levelcert::Polynomial& f) const;
  /// Polynomial with the given coordinates on the homogeneous piece R_d.
  levelcert::Polynomial from_coords(int d, const Vec& c) const;
  /// Matrix of multiplication by f on R.
  Mat mult(const levelcert::Polynomial& f) const;

 private:
  struct Piece {
    std::vector<levelcert::Monomial> monomials;  // all of S_d
    Mat echelon;                                  // reduced rows spanning J_d
    std::vector<int> pivots;
    std::vector<int> standard;                    // monomial indices forming the quotient basis
  };
  Vec reduce_in(int d, Vec v) const;

  const levelcert::Ring* R_;
  std::int64_t p_;
  std::vector<Piece> by_degree_;
  std::vector<levelcert::Monomial> basis_;
  std::vector<int> offsets_;
};

std::int64_t rank(Mat m, std::int64_t p);
/// Some x with m x = b.
bool solvable(const Mat& m, const Vec& b, std::int64_t p);

/// The k-linear matrix of an R-linear map R^cols -> R^rows.
Mat expand(const ExpandedRing& E, const levelcert::PolyMatrix& m);

/// dim_k H_i for every degree of the window of a free complex.
std::map<int, std::int64_t> homology_lengths(const ExpandedRing& E, const levelcert::ChainComplex& F);

/// Existence of an R-linear homotopy, solved without using the grading.
bool null_homotopic(const ExpandedRing& E, const levelcert::ChainMap& phi);

/// Random free complex in degrees [0, length]: each new column of the next
/// differential is a random homogeneous cycle found by dense linear algebra.
levelcert::ChainComplex random_complex(const levelcert::RingHandle& R, const ExpandedRing& E, std::mt19937& rng,
                                       int max_rank, int length);

/// The rings used by randomized cross-checks.
std::vector<levelcert::RingHandle> zoo(std::uint64_t p = 101);

}  // namespace oracle
