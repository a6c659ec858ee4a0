#include "levelcert/field.hpp"

#include <string>

#include "levelcert/error.hpp"

namespace levelcert {

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw MalformedInput("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<Elem>(p);
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  // a^(p-2) by square-and-multiply
  Elem result = 1;
  Elem base = a;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

void poll(const CancelToken* token) {
  if (token && token->cancelled()) throw Cancelled();
}

}  // namespace levelcert
