#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ore/domain.hpp"
#include "ore/errors.hpp"

namespace ore {

template <class E>
struct PrimePower {
  E prime;
  unsigned exp = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// An ideal of a principal Dedekind domain in canonical factored form:
// ZERO, or a sorted duplicate-free list of canonical primes with positive
// exponents (the empty list is the unit ideal). Equal ideals have identical
// representations.
template <class E>
class Ideal {
 public:
  using Element = E;
  using Factor = PrimePower<E>;

  Ideal() = default;  // unit ideal

  static Ideal zero() {
    Ideal z;
    z.zero_ = true;
    return z;
  }
  static Ideal unit() { return Ideal(); }

  // Primes must already be canonical; duplicates are merged.
  static Ideal from_factors(std::vector<Factor> fs) {
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.prime < b.prime; });
    Ideal out;
    for (auto& f : fs) {
      if (f.exp == 0) continue;
      if (!out.f_.empty() && out.f_.back().prime == f.prime) {
        out.f_.back().exp += f.exp;
      } else {
        out.f_.push_back(std::move(f));
      }
    }
    return out;
  }

  bool is_zero() const { return zero_; }
  bool is_unit() const { return !zero_ && f_.empty(); }
  bool is_prime() const { return !zero_ && f_.size() == 1 && f_[0].exp == 1; }
  const std::vector<Factor>& factors() const { return f_; }

  unsigned exponent_of(const E& p) const {
    for (const auto& f : f_) {
      if (f.prime == p) return f.exp;
    }
    return 0;
  }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  bool zero_ = false;
  std::vector<Factor> f_;
};

template <class D>
using IdealOf = Ideal<typename D::Element>;

namespace detail {

// Merge two factor lists, combining exponents of shared primes with `op`
// (a prime missing from one side has exponent 0 there).
template <class E, class Op>
Ideal<E> merge_factors(const Ideal<E>& a, const Ideal<E>& b, Op op) {
  std::vector<PrimePower<E>> out;
  std::size_t i = 0, j = 0;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].prime < fb[j].prime)) {
      out.push_back({fa[i].prime, op(fa[i].exp, 0u)});
      ++i;
    } else if (i == fa.size() || fb[j].prime < fa[i].prime) {
      out.push_back({fb[j].prime, op(0u, fb[j].exp)});
      ++j;
    } else {
      out.push_back({fa[i].prime, op(fa[i].exp, fb[j].exp)});
      ++i;
      ++j;
    }
  }
  return Ideal<E>::from_factors(std::move(out));
}

}  // namespace detail

template <class E>
Ideal<E> ideal_product(const Ideal<E>& a, const Ideal<E>& b) {
  if (a.is_zero() || b.is_zero()) return Ideal<E>::zero();
  return detail::merge_factors(a, b, [](unsigned x, unsigned y) { return x + y; });
}

template <class E>
Ideal<E> ideal_intersect(const Ideal<E>& a, const Ideal<E>& b) {
  if (a.is_zero() || b.is_zero()) return Ideal<E>::zero();
  return detail::merge_factors(a, b, [](unsigned x, unsigned y) { return std::max(x, y); });
}

// a + b, i.e. the gcd.
template <class E>
Ideal<E> ideal_sum(const Ideal<E>& a, const Ideal<E>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return detail::merge_factors(a, b, [](unsigned x, unsigned y) { return std::min(x, y); });
}

// J ⊆ I: to contain is to divide.
template <class E>
bool ideal_contains(const Ideal<E>& i, const Ideal<E>& j) {
  if (j.is_zero()) return true;
  if (i.is_zero()) return false;
  return std::all_of(i.factors().begin(), i.factors().end(),
                     [&](const PrimePower<E>& f) { return j.exponent_of(f.prime) >= f.exp; });
}

template <class E>
Ideal<E> ideal_power(const Ideal<E>& a, unsigned k) {
  if (k == 0) return Ideal<E>::unit();
  if (a.is_zero()) return a;
  std::vector<PrimePower<E>> fs = a.factors();
  for (auto& f : fs) f.exp *= k;
  return Ideal<E>::from_factors(std::move(fs));
}

template <class E>
std::vector<PrimePower<E>> ideal_factor(const Ideal<E>& a) {
  if (a.is_zero()) throw PreconditionError("ideal_factor of the zero ideal");
  return a.factors();
}

template <SkewDomain D>
IdealOf<D> ideal_from_element(const D& dom, const typename D::Element& g) {
  if (g.is_zero()) return IdealOf<D>::zero();
  std::vector<PrimePower<typename D::Element>> fs;
  for (auto& [p, e] : dom.factor(dom.normalize(g))) fs.push_back({dom.normalize(p), e});
  return IdealOf<D>::from_factors(std::move(fs));
}

template <SkewDomain D>
IdealOf<D> ideal_make(const D& dom, std::span<const typename D::Element> gens) {
  if (gens.empty()) throw PreconditionError("ideal_make needs at least one generator");
  auto g = dom.zero();
  for (const auto& x : gens) g = dom.gcd(g, x);
  return ideal_from_element(dom, g);
}

template <SkewDomain D>
IdealOf<D> ideal_make(const D& dom, std::initializer_list<typename D::Element> gens) {
  return ideal_make(dom, std::span<const typename D::Element>(gens.begin(), gens.size()));
}

// Canonical generator: the product of the prime powers (zero for ZERO).
template <SkewDomain D>
typename D::Element ideal_generator(const D& dom, const IdealOf<D>& a) {
  if (a.is_zero()) return dom.zero();
  auto g = dom.one();
  for (const auto& f : a.factors()) g = g * element_pow(dom, f.prime, f.exp);
  return g;
}

// Product of prime norms; 0 stands for the zero ideal.
template <SkewDomain D>
mpz_class ideal_norm(const D& dom, const IdealOf<D>& a) {
  if (a.is_zero()) return 0;
  mpz_class n = 1;
  for (const auto& f : a.factors()) {
    mpz_class pn;
    mpz_pow_ui(pn.get_mpz_t(), dom.prime_norm(f.prime).get_mpz_t(), f.exp);
    n *= pn;
  }
  return n;
}

// Largest k <= cap with p^k | a (a != 0).
template <SkewDomain D>
unsigned valuation(const D& dom, typename D::Element a, const typename D::Element& p, unsigned cap) {
  unsigned k = 0;
  while (k < cap) {
    auto q = dom.exact_div(a, p);
    if (!q) break;
    a = std::move(*q);
    ++k;
  }
  return k;
}

// Membership a ∈ I, decided prime power by prime power.
template <SkewDomain D>
bool ideal_has(const D& dom, const IdealOf<D>& ideal, const typename D::Element& a) {
  if (a.is_zero()) return true;
  if (ideal.is_zero()) return false;
  return std::all_of(ideal.factors().begin(), ideal.factors().end(), [&](const auto& f) {
    return valuation(dom, a, f.prime, f.exp) >= f.exp;
  });
}

// sigma^k(I); sigma permutes primes so this stays in factored form.
template <SkewDomain D>
IdealOf<D> ideal_sigma(const D& dom, const IdealOf<D>& a, long k = 1) {
  if (a.is_zero()) return a;
  std::vector<PrimePower<typename D::Element>> fs;
  for (const auto& f : a.factors()) fs.push_back({dom.normalize(dom.sigma(f.prime, k)), f.exp});
  return IdealOf<D>::from_factors(std::move(fs));
}

// Sort key for lists of ideals: norm, then canonical factor list.
template <SkewDomain D>
bool ideal_less(const D& dom, const IdealOf<D>& a, const IdealOf<D>& b) {
  if (a.is_zero() != b.is_zero()) return a.is_zero();
  const mpz_class na = ideal_norm(dom, a), nb = ideal_norm(dom, b);
  if (na != nb) return na < nb;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.prime != y.prime) return x.prime < y.prime;
                                        return x.exp < y.exp;
                                      });
}

template <SkewDomain D>
void sort_ideals(const D& dom, std::vector<IdealOf<D>>& v) {
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return ideal_less(dom, a, b); });
}

template <SkewDomain D>
std::string format_ideal(const D& dom, const IdealOf<D>& a) {
  if (a.is_zero()) return "(0)";
  if (a.is_unit()) return "(1)";
  std::string s;
  for (const auto& f : a.factors()) {
    s += "(" + dom.format(f.prime) + ")";
    if (f.exp > 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

enum class OrbitKind { Finite, Infinite, Unknown };

inline const char* to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::Finite:
      return "FINITE";
    case OrbitKind::Infinite:
      return "INFINITE";
    case OrbitKind::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

template <class E>
struct OrbitResult {
  OrbitKind kind = OrbitKind::Unknown;
  // p, sigma(p), ...: the whole orbit when FINITE, the computed prefix otherwise.
  std::vector<E> primes;
  std::size_t period = 0;  // FINITE only
};

// Orbit of a canonical prime under sigma. When sigma has finite order the
// orbit closes within that many steps. When sigma has infinite order (affine
// maps over Q with a not a root of unity, or a nonzero translation in
// characteristic 0) the only periodic point of the map is its fixed point, so
// the orbit of a prime is finite only if sigma fixes it.
template <SkewDomain D>
OrbitResult<typename D::Element> sigma_orbit(const D& dom, const typename D::Element& p,
                                             std::size_t bound) {
  OrbitResult<typename D::Element> out;
  out.primes.push_back(p);
  const auto order = dom.sigma_order();
  const std::size_t steps = order ? std::min<std::size_t>(bound, *order) : std::min<std::size_t>(bound, 1);
  auto cur = p;
  for (std::size_t s = 1; s <= steps; ++s) {
    cur = dom.normalize(dom.sigma(cur, 1));
    if (cur == p) {
      out.kind = OrbitKind::Finite;
      out.period = s;
      return out;
    }
    out.primes.push_back(cur);
  }
  if (!order && steps >= 1) {
    out.kind = OrbitKind::Infinite;
  } else {
    out.kind = OrbitKind::Unknown;
  }
  return out;
}

// Product of the orbit primes (the intersection, since they are distinct).
template <SkewDomain D>
IdealOf<D> orbit_ideal(const OrbitResult<typename D::Element>& orbit) {
  std::vector<PrimePower<typename D::Element>> fs;
  for (const auto& q : orbit.primes) fs.push_back({q, 1});
  return IdealOf<D>::from_factors(std::move(fs));
}

// Canonical primes of norm <= bound, sorted by norm then canonical generator.
template <SkewDomain D>
std::vector<typename D::Element> enumerate_primes(const D& dom, const mpz_class& bound) {
  auto ps = dom.primes_up_to(bound);
  std::vector<std::pair<mpz_class, typename D::Element>> keyed;
  for (auto& p : ps) {
    mpz_class n = dom.prime_norm(p);
    if (n <= bound) keyed.emplace_back(std::move(n), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<typename D::Element> out;
  for (auto& [n, p] : keyed) out.push_back(std::move(p));
  return out;
}

}  // namespace ore
