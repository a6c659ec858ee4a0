#pragma once

#include <set>
#include <string>
#include <vector>

#include "levelcert/complex.hpp"
#include "levelcert/resolution.hpp"

namespace levelcert {

struct KoszulData {
  RingHandle ring;
  std::vector<Polynomial> generators;
  ChainComplex complex;
  int length() const { return static_cast<int>(generators.size()); }
};

/// Exterior Koszul complex: d(e_{j1} ^ ... ^ e_{ji}) = sum_t (-1)^(t+1) g_{jt} e_{J - jt},
/// basis of each term in lexicographic order of index sets.
KoszulData koszul(const RingHandle& R, const std::vector<Polynomial>& generators);
/// Koszul complex on a minimal generating set of I.
KoszulData koszul(const Ideal& I);

/// s - max{i : H_i(K) != 0} for the Koszul complex on s generators of I
/// (a minimal set unless given).
int depth_via_koszul(const Ideal& I);
int depth_via_koszul(const Ideal& I, const std::vector<Polynomial>& generators);

struct KappaOptions {
  bool reverse_pivots = false;
  const CancelToken* cancel = nullptr;
};

struct KappaData {
  KoszulData koszul;
  Resolution resolution;  // of R/I, minimal
  ChainMap lift;          // K(I)_{<= max_b} -> resolution, bottom the identity of R
  std::set<int> nonzero;  // b with lift_b (x) k != 0
};

KappaData kappa(const Ideal& I, int max_b, const KappaOptions& opts = {});
std::set<int> kappa_nonzero_degrees(const Ideal& I, int max_b, const KappaOptions& opts = {});

struct WellDefinedReport {
  bool pass = false;
  std::vector<HilbertData> extended;  // H_i(K(gens, y))
  std::vector<HilbertData> expected;  // H_i(K(gens)) + H_{i-1}(K(gens)) shifted by deg y
};
/// Compares the homology of K(gens, y) with K(gens) plus its shifted suspension.
WellDefinedReport check_well_defined(const RingHandle& R, const std::vector<Polynomial>& generators,
                                     const Polynomial& y);

/// Every kernel generator of every Koszul differential lies in mK.
bool cycles_in_mK(const RingHandle& R, const std::vector<Polynomial>& generators);

/// Hilbert data of A + B(-shift).
HilbertData hilbert_sum(const HilbertData& a, const HilbertData& b, int shift);

}  // namespace levelcert
