#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levelcert/complex.hpp"
#include "levelcert/resolution.hpp"

namespace levelcert {

enum class BoundKind {
  gap,
  gapsmap,
  kappa,
  minimal_gap,
  pd,
  length_upper,
  cited_nit,
  cited_dim_sop,
  cited_power,
};

std::string to_string(BoundKind kind);
/// Witness-backed kinds; the cited ones only record checked hypotheses.
bool is_certified(BoundKind kind);

/// Premises of the Ghost Lemma for a chain map eta: F -> G and a < b.
/// G' is G_{<=b} with top term G_b / Z_b(G); the ghosts are the brutal
/// truncations G' -> G'_{>=a+1} -> ... -> G'_{>=b}; the composite F -> G'_{>=b}
/// is not null-homotopic, so level(F) >= b - a + 1.
struct GhostWitness {
  int a = 0;
  int b = 0;
  ChainMap to_quotient;  // F -> G'
  std::vector<ChainMap> ghosts;
  ChainMap composite;
};

struct BoundCertificate {
  BoundKind kind = BoundKind::gap;
  int value = 0;
  std::optional<GhostWitness> ghost;
  /// gap and pd: the non-free H_0 of the syzygy, coker d_b on P_{b-1}.
  std::optional<ModulePresentation> syzygy_h0;
  /// gapsmap, kappa, minimal_gap: eta, the ideal I and the column of eta_b
  /// outside I G_b + Z_b(G).
  std::optional<ChainMap> eta;
  std::optional<Ideal> ideal;
  int witness_column = -1;
  /// length_upper: the minimized complex whose length is the bound;
  /// cited_nit: the input complex.
  std::optional<ChainComplex> complex;
  std::vector<std::string> transcript;

  bool certified() const { return is_certified(kind); }
};

struct LevelReport {
  int lower = 0;
  std::optional<int> upper;  // nullopt: no finite upper bound is known
  bool exact = false;
  std::vector<BoundCertificate> certificates;
  std::vector<BoundCertificate> cited;
  std::vector<std::string> notes;
};

/// Length of minimize(F); 0 for an exact complex.
BoundCertificate upper_bound(const ChainComplex& F);

/// Best bound from homology gaps of the minimized complex P: pairs a < b with
/// H_i = 0 for a < i < b and coker(d_b: P_b -> P_{b-1}) not free. Value 1
/// without a gap, 0 for an exact complex.
BoundCertificate lower_bound_gap(const ChainComplex& F, const CancelToken* cancel = nullptr);

/// Requires d(F) in I F (checked) and H_i(G) = 0 for a < i < b (checked).
/// Value b - a + 1 when some column of eta_b lies outside I G_b + Z_b(G),
/// otherwise 0. G must be a free complex.
BoundCertificate lower_bound_gapsmap(const ChainComplex& F, const ChainMap& eta, const Ideal& I, int a, int b,
                                     const CancelToken* cancel = nullptr);

/// Gaps ending at a nonzero differential of a minimal complex (eta = id,
/// I = m). Non-minimal input is minimized first.
BoundCertificate lower_bound_minimal_gap(const ChainComplex& F, const CancelToken* cancel = nullptr);

/// Bound for a Koszul complex F on generators of I: eta lifts
/// F -> R/I to its minimal resolution G and the largest b with a unit entry
/// in eta_b gives b + 1.
BoundCertificate kappa_bound(const ChainComplex& F, const Ideal& I, const CancelToken* cancel = nullptr);

/// Rebuilds G' and the ghost sequence for eta: F -> G (G free) and checks
/// every premise. Throws PreconditionError when b is outside G.
GhostWitness ghost_witness(const ChainMap& eta, int a, int b, const CancelToken* cancel = nullptr);

/// Re-checks a certificate from its payload. Cited kinds replay their
/// hypotheses only; `log` receives one line per check.
bool replay(const BoundCertificate& cert, std::vector<std::string>* log = nullptr,
            const CancelToken* cancel = nullptr);

/// level = pd + 1 for modules; an incomplete resolution up to `bound` gives
/// lower = bound + 1 and no upper bound.
LevelReport level_of_module(const ModulePresentation& M, int bound, const CancelToken* cancel = nullptr);

struct EveryNExample {
  ChainComplex complex;  // P_{<=n} for P the minimal resolution of k
  BoundCertificate upper;
  BoundCertificate lower;
};
/// Throws PreconditionError when pd k < n (regular rings).
EveryNExample everyn_example(const RingHandle& R, int n, const CancelToken* cancel = nullptr);

/// Cited bound dim R - dim R/I + 1 when every H_{i>=1}(F) has finite length
/// and I kills a minimal generator of H_0(F); value 0 with the failed
/// hypothesis in the transcript otherwise.
BoundCertificate nit_cited_bound(const ChainComplex& F, const Ideal& I, const CancelToken* cancel = nullptr);

/// Marks F as the Koszul complex on `generators` of base^power.
struct KoszulTag {
  std::vector<Polynomial> base;
  int power = 1;
  std::vector<Polynomial> generators;
};

struct ReportOptions {
  std::optional<KoszulTag> koszul;
  std::vector<Ideal> ideals;  // tried with nit_cited_bound
  bool parallel = true;
  const CancelToken* cancel = nullptr;
};

LevelReport level_report(const ChainComplex& F, const ReportOptions& opts = {});

}  // namespace levelcert
