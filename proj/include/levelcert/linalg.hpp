#pragma once

#include <optional>
#include <vector>

#include "levelcert/field.hpp"

namespace levelcert {

using KVector = std::vector<PrimeField::Elem>;

struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<PrimeField::Elem> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  PrimeField::Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  PrimeField::Elem at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Incrementally maintained reduced row-echelon basis of a subspace of k^dim.
/// Reduction against it is a linear projection onto a fixed complement.
class Echelon {
 public:
  Echelon(const PrimeField& field, int dim) : field_(field), dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<KVector>& rows() const { return rows_; }

  /// Reduces v in place; returns true if v lies in the span.
  bool reduce(KVector& v) const;
  /// Adds v to the span; returns false if it was already there.
  bool insert(KVector v);
  bool contains(KVector v) const { return reduce(v); }

 private:
  PrimeField field_;
  int dim_;
  std::vector<KVector> rows_;
  std::vector<int> pivots_;
};

int rank(DenseMatrix m, const PrimeField& field);

/// Basis of {x : m x = 0}.
std::vector<KVector> nullspace(DenseMatrix m, const PrimeField& field);

/// Some x with m x = b, or nullopt. With reverse_pivots the pivot search runs
/// from the last column, which selects a different particular solution.
std::optional<KVector> solve(DenseMatrix m, KVector b, const PrimeField& field, bool reverse_pivots = false,
                             const CancelToken* cancel = nullptr);

}  // namespace levelcert
