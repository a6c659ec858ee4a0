#pragma once

#include <optional>
#include <vector>

#include "levelcert/field.hpp"
#include "levelcert/polynomial.hpp"

namespace levelcert {

/// A term c * mono * e_comp of a free module S^r.
struct VecTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  PrimeField::Elem coef = 0;
};

/// Sparse element of S^r; terms strictly decreasing in position-over-term
/// order (component 0 is the largest position).
struct ModuleVector {
  std::vector<VecTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const VecTerm& lead() const { return terms.front(); }
};

/// Free module S^r with generator degrees, the ambient space of a module
/// Gröbner computation.
struct AmbientModule {
  const PolyRing* ring = nullptr;
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  int degree(const VecTerm& t) const { return t.mono.deg + twists[t.comp]; }
  int cmp(const VecTerm& a, const VecTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ring->cmp(a.mono, b.mono);
  }

  ModuleVector from_column(const std::vector<Polynomial>& col, int offset = 0) const;
  /// Components [offset, offset + length) as polynomials.
  std::vector<Polynomial> to_column(const ModuleVector& v, int offset, int length) const;
  ModuleVector sub_mul_term(const ModuleVector& a, const ModuleVector& b, const Monomial& m,
                            PrimeField::Elem c) const;
  ModuleVector monic(const ModuleVector& a) const;
  bool is_homogeneous(const ModuleVector& v) const;
};

struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::grevlex;
  std::vector<int> twists{0};
  std::vector<ModuleVector> elements;
  bool reduced = false;

  int rank() const { return static_cast<int>(twists.size()); }
  bool empty() const { return elements.empty(); }
  /// Some element has lead term 1*e_c for every component c.
  bool is_whole_module() const;
  /// Ideal case: the generators as polynomials.
  std::vector<Polynomial> polynomials() const;
};

struct GbOptions {
  bool reduce = true;
  const CancelToken* cancel = nullptr;
};

/// Reduced Gröbner basis of the ideal generated by gens.
GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens,
                         const GbOptions& opts = {});

/// Gröbner basis of the submodule of S^rows generated by the columns of m,
/// position-over-term order. row_twists defaults to all zeros.
GroebnerBasis module_gb(const PolyRing& ring, const PolyMatrix& m, std::vector<int> row_twists = {},
                        const GbOptions& opts = {});

GroebnerBasis module_gb(const AmbientModule& ambient, std::vector<ModuleVector> gens,
                        const GbOptions& opts = {});

/// Unique normal form with respect to a Gröbner basis in the same ambient module.
ModuleVector normal_form(const AmbientModule& ambient, const ModuleVector& f, const GroebnerBasis& gb);
Polynomial nf(const PolyRing& ring, const Polynomial& f, const GroebnerBasis& gb);

bool ideal_contains(const PolyRing& ring, const GroebnerBasis& gb, const Polynomial& f);

/// Re-checks Buchberger's criterion: every S-pair reduces to zero.
bool satisfies_buchberger_criterion(const AmbientModule& ambient, const GroebnerBasis& gb);

struct SyzygyData {
  PolyMatrix matrix;
  /// Columns generate {v : matrix * v = 0} as an S-module.
  PolyMatrix generators;
  std::vector<int> generator_twists;
};

/// Degree of each column as an element of S^rows(row_twists); columns that
/// are zero get `fallback`.
std::vector<int> column_degrees(const PolyMatrix& m, const std::vector<int>& row_twists, int fallback = 0);

/// Generators of {v in S^cols : m v in span(extra columns)} by elimination:
/// a position-over-term basis of the columns (m_j, e_j) and (extra_k, 0).
/// All columns must be homogeneous.
std::vector<std::vector<Polynomial>> kernel_modulo(const PolyRing& ring, const PolyMatrix& m,
                                                   const std::vector<int>& row_twists,
                                                   const std::vector<int>& col_twists,
                                                   const PolyMatrix& extra, const GbOptions& opts = {});

/// Same elimination, returning the Gröbner basis of the kernel in S^cols(col_twists).
GroebnerBasis kernel_modulo_gb(const PolyRing& ring, const PolyMatrix& m, const std::vector<int>& row_twists,
                               const std::vector<int>& col_twists, const PolyMatrix& extra,
                               const GbOptions& opts = {});
SyzygyData syzygies(const PolyRing& ring, const PolyMatrix& m, std::vector<int> row_twists = {},
                    const GbOptions& opts = {});

/// Hilbert series data of S^r(-twists)/L for a monomial submodule L:
/// HS(t) = numerator(t) / (1-t)^nvars with numerator a Laurent polynomial.
struct HilbertData {
  int nvars = 0;
  int low = 0;                          // exponent of numerator[0]
  std::vector<long long> numerator;     // integer coefficients
  int dimension = -1;                   // Krull dimension; -1 for the zero module
  std::optional<long long> length;      // set iff dimension <= 0

  bool finite_length() const { return dimension <= 0; }
  bool is_zero() const { return dimension < 0; }
  /// Value of the Hilbert function in degree d.
  long long value(int d) const;
  std::vector<long long> window(int from, int to) const;
  bool operator==(const HilbertData& o) const {
    return nvars == o.nvars && low == o.low && numerator == o.numerator;
  }
};

/// Normalizes numerator(t) * t^low / (1-t)^nvars and derives dimension and length.
HilbertData hilbert_from_numerator(int nvars, int low, std::vector<long long> numerator);
/// Hilbert data of the quotient of S^rank(twists) by the lead terms of gb.
HilbertData hilbert_data(int nvars, const GroebnerBasis& gb);

/// Hilbert function by direct enumeration of standard monomials, degrees [from, to].
std::vector<long long> hilbert_by_enumeration(int nvars, const GroebnerBasis& gb, int from, int to);

/// Krull dimension of S/J as the largest set of variables independent modulo
/// the lead ideal. Returns -1 for the unit ideal.
int krull_dim(const GroebnerBasis& gb, int nvars);

/// All monomials of degree d in n variables, descending in the given order.
std::vector<Monomial> monomials_of_degree(int nvars, int d, MonomialOrder order);

}  // namespace levelcert
