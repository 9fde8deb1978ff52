#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ore/field.hpp"
#include "ore/gaussian.hpp"
#include "ore/poly_factor.hpp"
#include "ore/random.hpp"
#include "ore/upoly.hpp"

namespace ore {

enum class DomainKind { GaussianIntegers, PolyOverFiniteField, PolyOverRationals };

const char* to_string(DomainKind kind);

// Z[i] with sigma in {identity, conjugation} and delta fixed by d = delta(i):
// delta(x + y i) = y d.
class GaussianDomain {
 public:
  using Element = GaussInt;
  enum class Sigma { Identity, Conjugation };
  static constexpr DomainKind kind = DomainKind::GaussianIntegers;

  // Throws DomainError when (sigma, d) is not a skew derivation.
  GaussianDomain(Sigma sigma, GaussInt d);

  Sigma sigma_kind() const { return sigma_; }
  const GaussInt& delta_of_i() const { return d_; }

  Element zero() const { return {}; }
  Element one() const { return GaussInt(1L); }

  Element sigma(const Element& a, long k = 1) const;
  Element delta(const Element& a) const;
  bool sigma_is_identity() const { return sigma_ == Sigma::Identity; }
  bool delta_is_zero() const { return d_.is_zero(); }
  // Order of sigma as a map; nullopt means infinite order.
  std::optional<std::uint64_t> sigma_order() const { return sigma_is_identity() ? 1 : 2; }
  // Generator of D over its prime ring.
  Element generator() const { return GaussInt(0L, 1L); }

  Element normalize(const Element& a) const { return gauss::normalize(a); }
  bool is_unit(const Element& a) const { return gauss::is_unit(a); }
  std::optional<Element> exact_div(const Element& a, const Element& b) const {
    return gauss::exact_div(a, b);
  }
  bool divides(const Element& d, const Element& a) const { return gauss::divides(d, a); }
  Element gcd(const Element& a, const Element& b) const { return gauss::gcd(a, b); }
  std::vector<std::pair<Element, unsigned>> factor(const Element& a) const { return gauss::factor(a); }
  bool is_prime(const Element& a) const { return gauss::is_prime(a); }
  // |Z[i]/(p)| for a prime p.
  mpz_class prime_norm(const Element& p) const { return p.norm(); }
  std::vector<Element> primes_up_to(const mpz_class& bound) const { return gauss::primes_up_to(bound); }
  // Additive generators of D/(g) up to central scalars.
  std::vector<Element> residue_basis(const Element&) const { return {one(), generator()}; }

  Element random_element(Rng& rng, unsigned size) const;
  std::string format(const Element& a) const { return gauss::format(a); }
  Element parse(const std::string& text) const { return gauss::parse(text); }

 private:
  Sigma sigma_;
  GaussInt d_;
};

// k[t] with sigma(t) = a t + b (a a unit) and delta = h * (sigma(f) - f)/(sigma(t) - t),
// or delta = h * d/dt when sigma is the identity.
template <class Field>
class AffinePolyDomain {
 public:
  using Scalar = typename Field::Scalar;
  using Element = UPoly<Field>;
  static constexpr DomainKind kind = std::same_as<Field, PrimeField> ? DomainKind::PolyOverFiniteField
                                                                     : DomainKind::PolyOverRationals;

  // Throws DomainError when a is not a unit.
  AffinePolyDomain(Field field, Scalar a, Scalar b, Element h);

  const Field& field() const { return field_; }
  const Scalar& sigma_a() const { return a_; }
  const Scalar& sigma_b() const { return b_; }
  const Element& h() const { return h_; }

  Element zero() const { return Element(field_); }
  Element one() const { return Element::constant(field_, field_.one()); }
  Element constant(Scalar s) const { return Element::constant(field_, std::move(s)); }

  Element sigma(const Element& f, long k = 1) const;
  Element delta(const Element& f) const;
  bool sigma_is_identity() const { return a_ == field_.one() && field_.is_zero(b_); }
  bool delta_is_zero() const { return h_.is_zero(); }
  std::optional<std::uint64_t> sigma_order() const;
  Element generator() const { return Element::variable(field_); }
  // The affine pair of sigma^k.
  std::pair<Scalar, Scalar> sigma_power(long k) const;

  Element normalize(const Element& f) const { return f.monic(); }
  bool is_unit(const Element& f) const { return f.degree() == 0; }
  std::optional<Element> exact_div(const Element& a, const Element& b) const;
  bool divides(const Element& d, const Element& a) const;
  Element gcd(const Element& a, const Element& b) const { return ore::gcd(a, b); }
  std::vector<std::pair<Element, unsigned>> factor(const Element& f) const;
  bool is_prime(const Element& f) const;
  // q^deg over F_q; deg + height as a search surrogate over Q.
  mpz_class prime_norm(const Element& p) const;
  // Over Q only monic linear primes are enumerated.
  std::vector<Element> primes_up_to(const mpz_class& bound) const;
  std::vector<Element> residue_basis(const Element& g) const;

  Element random_element(Rng& rng, unsigned size) const;
  std::string format(const Element& f) const;
  Element parse(const std::string& text) const;

 private:
  Field field_;
  Scalar a_;
  Scalar b_;
  Element h_;
  Element shift_;  // sigma(t) - t
};

using FpPolyDomain = AffinePolyDomain<PrimeField>;
using QPolyDomain = AffinePolyDomain<RationalField>;

extern template class AffinePolyDomain<PrimeField>;
extern template class AffinePolyDomain<RationalField>;

// What the generic algorithms need from a coefficient domain.
template <class D>
concept SkewDomain = requires(const D& d, const typename D::Element& a, long k, Rng& rng) {
  { d.zero() } -> std::same_as<typename D::Element>;
  { d.one() } -> std::same_as<typename D::Element>;
  { d.sigma(a, k) } -> std::same_as<typename D::Element>;
  { d.delta(a) } -> std::same_as<typename D::Element>;
  { d.normalize(a) } -> std::same_as<typename D::Element>;
  { d.exact_div(a, a) } -> std::same_as<std::optional<typename D::Element>>;
  { d.divides(a, a) } -> std::same_as<bool>;
  { d.gcd(a, a) } -> std::same_as<typename D::Element>;
  { d.factor(a) };
  { d.prime_norm(a) } -> std::same_as<mpz_class>;
  { d.sigma_order() } -> std::same_as<std::optional<std::uint64_t>>;
  { d.random_element(rng, 1u) } -> std::same_as<typename D::Element>;
  { d.format(a) } -> std::same_as<std::string>;
  { a.is_zero() } -> std::same_as<bool>;
  { a + a } -> std::convertible_to<typename D::Element>;
  { a - a } -> std::convertible_to<typename D::Element>;
  { a * a } -> std::convertible_to<typename D::Element>;
  { a < a } -> std::convertible_to<bool>;
};

static_assert(SkewDomain<GaussianDomain>);
static_assert(SkewDomain<FpPolyDomain>);
static_assert(SkewDomain<QPolyDomain>);

template <SkewDomain D>
typename D::Element apply_sigma(const D& dom, const typename D::Element& a, long k) {
  return dom.sigma(a, k);
}

template <SkewDomain D>
typename D::Element apply_delta(const D& dom, const typename D::Element& a) {
  return dom.delta(a);
}

template <SkewDomain D>
typename D::Element element_pow(const D& dom, typename D::Element base, unsigned e) {
  auto r = dom.one();
  while (e != 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return r;
}

// sum_{i=0}^{m-1} sigma(a)^i delta(a) a^(m-1-i)
template <SkewDomain D>
typename D::Element delta_power_expand(const D& dom, const typename D::Element& a, unsigned m) {
  if (m == 0) throw PreconditionError("delta_power_expand needs m >= 1");
  const auto sa = dom.sigma(a, 1);
  const auto da = dom.delta(a);
  auto sum = dom.zero();
  auto left = dom.one();
  for (unsigned i = 0; i < m; ++i) {
    sum = sum + left * da * element_pow(dom, a, m - 1 - i);
    left = left * sa;
  }
  return sum;
}

// True iff delta(b) == a b - sigma(b) a.
template <SkewDomain D>
bool is_inner_witness_at(const D& dom, const typename D::Element& a, const typename D::Element& b) {
  return dom.delta(b) == a * b - dom.sigma(b, 1) * a;
}

// Solves delta(g) = a (g - sigma(g)) on the ring generator g, then re-checks
// the identity on `samples` random elements. Absent when no a in D works.
template <SkewDomain D>
std::optional<typename D::Element> inner_witness(const D& dom, unsigned samples = 200,
                                                 std::uint64_t seed = 1) {
  if (dom.sigma_is_identity()) {
    if (dom.delta_is_zero()) return dom.zero();
    throw NotApplicable("sigma is the identity and delta is nonzero: an inner derivation would be zero");
  }
  const auto g = dom.generator();
  auto a = dom.exact_div(dom.delta(g), g - dom.sigma(g, 1));
  if (!a) return std::nullopt;
  Rng rng(seed);
  for (unsigned n = 0; n < samples; ++n) {
    if (!is_inner_witness_at(dom, *a, dom.random_element(rng, 3))) {
      throw Error("inner witness failed verification on a sampled element");
    }
  }
  return a;
}

// Leibniz rule delta(uv) = sigma(u) delta(v) + delta(u) v.
template <SkewDomain D>
bool leibniz_holds(const D& dom, const typename D::Element& u, const typename D::Element& v) {
  return dom.delta(u * v) == dom.sigma(u, 1) * dom.delta(v) + dom.delta(u) * v;
}

}  // namespace ore
