#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ore {

// x + y*i with arbitrary-precision parts.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  GaussInt() = default;
  GaussInt(mpz_class r, mpz_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussInt(long r, long i = 0) : re(r), im(i) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpz_class norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussInt operator-() const { return {-re, -im}; }
  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }

  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::strong_ordering operator<=>(const GaussInt& a, const GaussInt& b) {
    if (a.re != b.re) return a.re < b.re ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.im != b.im) return a.im < b.im ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

namespace gauss {

// Quotient rounded to the nearest lattice point, remainder has smaller norm.
std::pair<GaussInt, GaussInt> divmod(const GaussInt& a, const GaussInt& b);
std::optional<GaussInt> exact_div(const GaussInt& a, const GaussInt& b);
bool divides(const GaussInt& d, const GaussInt& a);
// Unique associate with re > 0 and im >= 0; zero maps to zero.
GaussInt normalize(const GaussInt& a);
bool is_unit(const GaussInt& a);
GaussInt gcd(GaussInt a, GaussInt b);
bool is_prime(const GaussInt& a);
// Canonical prime factorization; the unit part is dropped.
std::vector<std::pair<GaussInt, unsigned>> factor(const GaussInt& a);
// All canonical Gaussian primes of norm <= bound, sorted by (norm, re, im).
std::vector<GaussInt> primes_up_to(const mpz_class& bound);

std::string format(const GaussInt& a);
GaussInt parse(const std::string& text);

}  // namespace gauss

}  // namespace ore
