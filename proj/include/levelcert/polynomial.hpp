#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levelcert/field.hpp"
#include "levelcert/monomial.hpp"

namespace levelcert {

struct Term {
  Monomial mono;
  PrimeField::Elem coef = 0;
};

/// Sparse polynomial; terms strictly decreasing in the owning ring's order,
/// no zero coefficients. Arithmetic goes through PolyRing.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  /// Degree of the leading term; -1 for zero.
  int degree() const { return terms.empty() ? -1 : terms.front().mono.deg; }
  bool is_homogeneous() const;
  /// Nonzero constant.
  bool is_unit() const { return terms.size() == 1 && terms[0].mono.is_one(); }
  /// Constant coefficient (0 if absent).
  PrimeField::Elem constant_term() const {
    return !terms.empty() && terms.back().mono.is_one() ? terms.back().coef : 0;
  }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

/// Dense matrix of polynomials, row-major.
struct PolyMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Polynomial> entries;

  PolyMatrix() = default;
  PolyMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  Polynomial& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Polynomial& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

  std::vector<Polynomial> column(int c) const;
  void append_column(const std::vector<Polynomial>& col);
  bool is_zero() const;
  bool operator==(const PolyMatrix& o) const = default;
};

/// The polynomial ring GF(p)[vars] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> vars, MonomialOrder order);

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& var_names() const { return vars_; }
  MonomialOrder order() const { return order_; }

  int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b, order_); }

  Polynomial zero() const { return {}; }
  Polynomial constant(long long c) const;
  Polynomial variable(int i) const;
  Polynomial monomial(const Monomial& m, PrimeField::Elem c = 1) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, PrimeField::Elem c) const;
  Polynomial mul_term(const Polynomial& a, const Monomial& m, PrimeField::Elem c) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  /// a - c*m*b in one merge pass.
  Polynomial sub_mul_term(const Polynomial& a, const Polynomial& b, const Monomial& m,
                          PrimeField::Elem c) const;
  Polynomial pow(const Polynomial& a, int e) const;
  Polynomial monic(const Polynomial& a) const;
  /// Substitute images[i] for variable i; images live in `target`.
  Polynomial substitute(const Polynomial& a, const std::vector<Polynomial>& images,
                        const PolyRing& target) const;

  /// Sorts and combines an arbitrary term list into canonical form.
  Polynomial normalize(std::vector<Term> terms) const;

  /// Parses the `c*x1^a*x2^b + ...` grammar. Throws MalformedInput with the
  /// offending column on failure.
  Polynomial parse(std::string_view text) const;
  std::string format(const Polynomial& f) const;
  std::string format(const Monomial& m) const;

  bool same_ring(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

}  // namespace levelcert
