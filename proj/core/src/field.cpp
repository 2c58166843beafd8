#include "tate/field.hpp"

namespace tate {

bool isPrime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !isPrime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
}

Coeff PrimeField::inverse(Coeff a) const {
  a %= p_;
  if (a == 0)
    throw DivisionByZero();
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

} // namespace tate
