#pragma once

#include <vector>

#include "levelcert/complex.hpp"

namespace levelcert {

/// The graded module coker(presentation) on generators of degrees `twists`.
struct ModulePresentation {
  RingHandle ring;
  std::vector<int> twists;
  PolyMatrix presentation;  // rows index generators

  /// Reduces entries and checks that every column is homogeneous.
  static ModulePresentation make(RingHandle ring, std::vector<int> twists, PolyMatrix presentation);
  int generators() const { return static_cast<int>(twists.size()); }
};

/// k = R/m on one generator of degree 0.
ModulePresentation residue_field(const RingHandle& R);
/// R/I on one generator of degree 0.
ModulePresentation quotient_module(const Ideal& I);
ModulePresentation free_module(const RingHandle& R, std::vector<int> twists);

/// Cancels unit entries so that the generators become minimal; drops zero
/// relation columns. Generators stay sorted by degree.
ModulePresentation prune(const ModulePresentation& M);

/// Over a graded-local ring projective and free coincide.
bool is_free(const ModulePresentation& M);

struct Resolution {
  ModulePresentation target;
  ChainComplex complex;  // P_0 ... P_steps, minimal, P_0 in homological degree 0
  std::vector<int> betti;
  bool complete = false;  // the kernel of the last differential is zero
};

struct ResolveOptions {
  /// Also compute the kernel after the last requested step to decide completeness.
  bool check_complete = true;
  const CancelToken* cancel = nullptr;
};

Resolution resolve_module(const ModulePresentation& M, int steps, const ResolveOptions& opts = {});

/// A bounded free complex is its own resolution; the minimal one is minimize(F).
ChainComplex resolution_of_complex(const ChainComplex& F);

struct SyzygyComplex {
  int n = 0;
  ChainComplex complex;  // Sigma^{-n} of P_{>=n}
  ModulePresentation h0;
};
SyzygyComplex syzygy(const ChainComplex& F, int n);

struct PdResult {
  bool exact = false;
  int value = 0;  // pd when exact (-1 for the zero module), otherwise a lower bound
};
PdResult pd_probe(const ModulePresentation& M, int bound, const CancelToken* cancel = nullptr);

}  // namespace levelcert
