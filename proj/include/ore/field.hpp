#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ore/errors.hpp"

namespace ore {

// Residues modulo a prime p < 2^31, stored canonically in [0, p).
class PrimeField {
 public:
  using Scalar = std::uint64_t;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1 % p_; }
  bool is_zero(Scalar a) const { return a == 0; }

  Scalar add(Scalar a, Scalar b) const {
    const Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar inv(Scalar a) const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;

  std::string format(Scalar a) const;
  // Accepts "r mod q" (q must equal the modulus) or a bare integer.
  Scalar parse(const std::string& text) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_ = 2;
};

// Exact rationals; every Scalar is kept in lowest terms.
class RationalField {
 public:
  using Scalar = mpq_class;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }

  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar inv(const Scalar& a) const;
  Scalar from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  Scalar from_mpz(const mpz_class& v) const { return mpq_class(v); }

  std::string format(const Scalar& a) const;
  Scalar parse(const std::string& text) const;

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace ore
