#pragma once

/**
 * @file field.hpp
 * @brief Arithmetic in the prime field GF(p).
 *
 * Elements are plain 32-bit residues in [0, p); the modulus lives in a
 * PrimeField value that every algorithm carries along.  Products are formed
 * in 64 bits, so any p < 2^31 is supported.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tate {

using Coeff = std::uint32_t;

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero in prime field") {}
};

class PrimeField {
public:
  static constexpr std::uint32_t kDefaultPrime = 101;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a - c*b, the elimination kernel.
  Coeff subMul(Coeff a, Coeff c, Coeff b) const { return sub(a, mul(c, b)); }

  /// Multiplicative inverse; throws DivisionByZero for a == 0.
  Coeff inverse(Coeff a) const;

  /// Symmetric lift to (-p/2, p/2], used for printing.
  std::int64_t lift(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

bool isPrime(std::uint64_t n);

} // namespace tate
