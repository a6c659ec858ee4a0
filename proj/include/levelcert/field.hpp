#pragma once

#include <atomic>
#include <cstdint>

namespace levelcert {

/// Arithmetic in GF(p) for a prime p < 2^31. Elements are residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  /// Throws MalformedInput if p is not a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  static bool is_prime(std::uint64_t n);

  Elem characteristic() const { return p_; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  /// Symmetric representative in (-p/2, p/2], used for printing.
  long long to_signed(Elem a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  Elem p_;
};

/// Cooperative cancellation flag polled by long-running solves.
class CancelToken {
 public:
  void cancel() { flag_.store(true, std::memory_order_relaxed); }
  bool cancelled() const { return flag_.load(std::memory_order_relaxed); }

 private:
  std::atomic<bool> flag_{false};
};

/// Throws Cancelled if the token is set. A null token never cancels.
void poll(const CancelToken* token);

}  // namespace levelcert
