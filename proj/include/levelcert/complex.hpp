#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levelcert/groebner.hpp"
#include "levelcert/ring.hpp"

namespace levelcert {

/// Graded free module R(-a_1) + ... + R(-a_r); twists are the generator
/// degrees, kept ascending.
struct FreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  bool operator==(const FreeModule&) const = default;
};

/// Homogeneous degree-0 map between graded free modules; entries are
/// normal forms, entry (j, k) has degree source[k] - target[j].
struct RMatrix {
  FreeModule source;
  FreeModule target;
  PolyMatrix entries;
};

/// Bounded complex of finitely generated graded R-modules, each given as a
/// free cover with (possibly empty) relation columns. Every public
/// constructor of ordinary complexes produces empty relations; presented
/// terms only appear in certificate constructions.
///
/// Matrix convention: d(i) has rank(i-1) rows and rank(i) columns.
class ChainComplex {
 public:
  ChainComplex() = default;

  /// Validates shapes, homogeneity, and d^2 = 0. `differentials[k]` is d(lo+k+1).
  /// Generators of each degree are stably sorted by twist; if `perms` is
  /// given it receives, per degree, the original index of each new position.
  static ChainComplex make(RingHandle ring, int lo, std::vector<std::vector<int>> twists,
                           std::vector<PolyMatrix> differentials,
                           std::vector<std::vector<int>>* perms = nullptr);

  /// As make(), with relation columns per degree (empty matrix = free term).
  static ChainComplex make_presented(RingHandle ring, int lo, std::vector<std::vector<int>> twists,
                                     std::vector<PolyMatrix> differentials, std::vector<PolyMatrix> relations);

  static ChainComplex zero(RingHandle ring);

  const RingHandle& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
  bool empty_window() const { return modules_.empty(); }

  const FreeModule& module(int i) const;
  int rank(int i) const { return module(i).rank(); }
  const std::vector<int>& twists(int i) const { return module(i).twists; }
  /// d(i): F_i -> F_{i-1}; a correctly shaped zero matrix outside the window.
  PolyMatrix differential(int i) const;
  /// Relation columns of the term in degree i (zero columns when free).
  PolyMatrix relations(int i) const;
  bool is_free() const;
  /// Every differential entry lies in the maximal ideal.
  bool is_minimal() const;
  /// First and last degrees with nonzero rank.
  std::optional<std::pair<int, int>> support() const;

  bool operator==(const ChainComplex& o) const;

 private:
  void validate() const;

  RingHandle ring_;
  int lo_ = 0;
  std::vector<FreeModule> modules_;
  std::vector<PolyMatrix> diffs_;      // diffs_[i - lo] = d(i); d(lo) has 0 rows
  std::vector<PolyMatrix> relations_;  // relations_[i - lo]
};

/// Degree-0 chain map; components outside the source window are zero.
class ChainMap {
 public:
  ChainMap() = default;
  /// Validates shapes, homogeneity, compatibility with relations, and
  /// commutation with the differentials.
  static ChainMap make(ChainComplex source, ChainComplex target, std::map<int, PolyMatrix> components);
  static ChainMap identity(const ChainComplex& F);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  PolyMatrix component(int i) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, PolyMatrix> comps_;
};

/// g o f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// (Sigma^k F)_n = F_{n-k} with differential (-1)^k d.
ChainComplex suspend(const ChainComplex& F, int k);

struct Truncation {
  ChainComplex complex;
  ChainMap projection;  // tau: F -> F_{>= i}
};
Truncation truncate_geq(const ChainComplex& F, int i);
ChainComplex truncate_leq(const ChainComplex& F, int i);

struct Cone {
  ChainComplex complex;
  ChainMap inclusion;   // target of phi -> cone
  ChainMap projection;  // cone -> Sigma(source of phi)
};
/// cone(phi)_n = X_{n-1} + Y_n with differential [[-d_X, 0], [phi, d_Y]].
Cone cone(const ChainMap& phi);

ChainComplex direct_sum(const ChainComplex& F, const ChainComplex& G);

/// Base change along the graded ring map R -> target sending variable i to
/// images[i] (homogeneous of degree 1, defined in target's variables).
ChainComplex tensor_base_change(const ChainComplex& F, const RingHandle& target,
                                const std::vector<Polynomial>& images);

struct HomologyOptions {
  int window = 6;  // extra degrees listed for infinite-length homology
  const CancelToken* cancel = nullptr;
};

struct HomologyData {
  int degree = 0;
  /// H_i as the cokernel of `presentation` (over S) on generators of degrees
  /// generator_twists; the relation module contains J-multiples.
  PolyMatrix presentation;
  std::vector<int> generator_twists;
  HilbertData hilbert;
  int window_from = 0;
  std::vector<long long> window;  // Hilbert function from window_from on
  int min_gens = 0;
  bool finite_length = true;
  std::optional<long long> length;
  bool is_zero = true;
};

HomologyData homology(const ChainComplex& F, int i, const HomologyOptions& opts = {});

/// Minimal generators of the kernel of a map between (presented) terms:
/// {v in cover(source) : m v in rel_target + J}, columns sorted by degree.
struct KernelGens {
  PolyMatrix generators;
  std::vector<int> twists;
};
KernelGens kernel_over_ring(const Ring& R, const PolyMatrix& m, const std::vector<int>& source_twists,
                            const std::vector<int>& target_twists, const PolyMatrix& target_relations,
                            const CancelToken* cancel = nullptr);

/// Membership in the R-submodule of R^n(twists) generated by columns (plus J).
class SubmoduleTest {
 public:
  SubmoduleTest(const Ring& R, std::vector<int> twists, const PolyMatrix& generators);
  bool contains(const std::vector<Polynomial>& v) const;

 private:
  const Ring* R_;
  AmbientModule ambient_;
  GroebnerBasis gb_;
};

/// A minimal complex homotopy equivalent to F, obtained by cancelling unit
/// entries of the differentials. Free complexes only.
ChainComplex minimize(const ChainComplex& F);

struct LiftOptions {
  bool reverse_pivots = false;
  const CancelToken* cancel = nullptr;
};
/// Extends `bottom`: F_lo -> G_lo degree by degree to a chain map F -> G.
/// Throws ObstructionError("lift obstructed at degree i") when impossible.
ChainMap lift_map(const ChainComplex& F, const ChainComplex& G, const PolyMatrix& bottom,
                  const LiftOptions& opts = {});

struct HomotopyVerdict {
  bool null_homotopic = false;
  /// alpha_n: X_n -> Y_{n+1} with phi = d alpha + alpha d, when it exists.
  std::map<int, PolyMatrix> homotopy;
};
/// Decides null-homotopy by one graded linear solve. The source must be free.
HomotopyVerdict is_null_homotopic(const ChainMap& phi, const LiftOptions& opts = {});

/// True iff phi induces zero on every homology module.
bool is_ghost(const ChainMap& phi, const CancelToken* cancel = nullptr);

/// Matrix product over R, entries reduced.
PolyMatrix multiply(const Ring& R, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix identity_matrix(const PolyRing& S, int n);

}  // namespace levelcert
