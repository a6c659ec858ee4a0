#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace levelcert {

inline constexpr int kMaxVars = 16;

enum class MonomialOrder { grevlex, lex };

/// Exponent vector in at most kMaxVars variables. Unused slots stay zero,
/// so comparisons and divisibility never need the variable count.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  int deg = 0;

  static Monomial variable(int i) {
    Monomial m;
    m.exp[i] = 1;
    m.deg = 1;
    return m;
  }

  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& o) const { return deg == o.deg && exp == o.exp; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
    r.deg = a.deg + b.deg;
    return r;
  }

  /// True iff this divides o.
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i) {
      if (exp[i] > o.exp[i]) return false;
    }
    return true;
  }

  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(o.exp[i] - exp[i]);
    r.deg = o.deg - deg;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
      d += r.exp[i];
    }
    r.deg = d;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (a.exp[i] && b.exp[i]) return false;
    }
    return true;
  }
};

/// Three-way comparison: positive if a > b in the order.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::grevlex) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    }
    return 0;
  }
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exp) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

}  // namespace levelcert
