#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ore/domain.hpp"
#include "ore/errors.hpp"
#include "ore/ideal.hpp"

namespace ore {

// Which commutation rule the polynomial lives under: x a = sigma(a) x + delta(a),
// or the pure automorphism ring y a = sigma(a) y.
enum class RingTag { XSigmaDelta, YSigma };

inline const char* to_string(RingTag tag) {
  return tag == RingTag::XSigmaDelta ? "x-sigma-delta" : "y-sigma";
}

// f_0 + f_1 x + ... + f_n x^n with left-hand coefficients, f_n != 0.
template <class E>
class OrePoly {
 public:
  using Element = E;

  explicit OrePoly(RingTag tag = RingTag::XSigmaDelta) : tag_(tag) {}
  OrePoly(std::vector<E> coeffs, RingTag tag = RingTag::XSigmaDelta) : c_(std::move(coeffs)), tag_(tag) {
    trim();
  }

  RingTag tag() const { return tag_; }
  const std::vector<E>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const E& lead() const { return c_.back(); }

  OrePoly& operator+=(const OrePoly& o) {
    check_tag(o);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (i < c_.size()) {
        c_[i] = c_[i] + o.c_[i];
      } else {
        c_.push_back(o.c_[i]);
      }
    }
    trim();
    return *this;
  }
  OrePoly operator-() const {
    OrePoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  OrePoly& operator-=(const OrePoly& o) { return *this += -o; }
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }

  // c * f, left D-multiplication.
  OrePoly left_scale(const E& c) const {
    OrePoly r = *this;
    for (auto& v : r.c_) v = c * v;
    r.trim();
    return r;
  }

  friend bool operator==(const OrePoly&, const OrePoly&) = default;

 private:
  void check_tag(const OrePoly& o) const {
    if (o.tag_ != tag_) throw PreconditionError("Ore polynomials from different rings");
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<E> c_;
  RingTag tag_;
};

template <class D>
using OrePolyOf = OrePoly<typename D::Element>;

namespace detail {

// x * (sum c_k x^k) rewritten into left-standard form.
template <SkewDomain D>
std::vector<typename D::Element> times_x(const D& dom, const std::vector<typename D::Element>& c,
                                         RingTag tag) {
  std::vector<typename D::Element> out(c.size() + 1, dom.zero());
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k + 1] = out[k + 1] + dom.sigma(c[k], 1);
    if (tag == RingTag::XSigmaDelta) out[k] = out[k] + dom.delta(c[k]);
  }
  return out;
}

// rows[i] = coefficients of x^i a for i = 0..n.
template <SkewDomain D>
std::vector<std::vector<typename D::Element>> xpower_table(const D& dom, const typename D::Element& a,
                                                           std::size_t n, RingTag tag) {
  std::vector<std::vector<typename D::Element>> rows;
  rows.reserve(n + 1);
  rows.push_back({a});
  for (std::size_t i = 1; i <= n; ++i) rows.push_back(times_x(dom, rows.back(), tag));
  return rows;
}

}  // namespace detail

template <SkewDomain D>
OrePolyOf<D> ore_constant(const D&, const typename D::Element& c, RingTag tag = RingTag::XSigmaDelta) {
  return OrePolyOf<D>({c}, tag);
}

// c x^k
template <SkewDomain D>
OrePolyOf<D> ore_monomial(const D& dom, const typename D::Element& c, std::size_t k,
                          RingTag tag = RingTag::XSigmaDelta) {
  std::vector<typename D::Element> v(k + 1, dom.zero());
  v[k] = c;
  return OrePolyOf<D>(std::move(v), tag);
}

// Product in D[x; sigma, delta] (or D[y; sigma]) via the x^i * g_j expansion
// table, built once per coefficient of g.
template <SkewDomain D>
OrePolyOf<D> ore_mul(const D& dom, const OrePolyOf<D>& f, const OrePolyOf<D>& g) {
  if (f.tag() != g.tag()) throw PreconditionError("Ore polynomials from different rings");
  if (f.is_zero() || g.is_zero()) return OrePolyOf<D>(f.tag());
  const std::size_t m = static_cast<std::size_t>(f.degree());
  std::vector<typename D::Element> out(f.coeffs().size() + g.coeffs().size() - 1, dom.zero());
  for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
    if (g.coeffs()[j].is_zero()) continue;
    const auto table = detail::xpower_table(dom, g.coeffs()[j], m, f.tag());
    for (std::size_t i = 0; i <= m; ++i) {
      const auto& fi = f.coeffs()[i];
      if (fi.is_zero()) continue;
      for (std::size_t k = 0; k < table[i].size(); ++k) {
        if (!table[i][k].is_zero()) out[k + j] = out[k + j] + fi * table[i][k];
      }
    }
  }
  return OrePolyOf<D>(std::move(out), f.tag());
}

// Left-standard form of x^n a: x^0 coefficient delta^n(a), x^n coefficient sigma^n(a).
template <SkewDomain D>
OrePolyOf<D> xn_times_a(const D& dom, std::size_t n, const typename D::Element& a,
                        RingTag tag = RingTag::XSigmaDelta) {
  std::vector<typename D::Element> row{a};
  for (std::size_t i = 0; i < n; ++i) row = detail::times_x(dom, row, tag);
  return OrePolyOf<D>(std::move(row), tag);
}

// b_0..b_n with f = sum x^k b_k. Peels the top term: x^n b has leading
// coefficient sigma^n(b), so b_n = sigma^{-n}(f_n).
template <SkewDomain D>
std::vector<typename D::Element> right_coefficients(const D& dom, const OrePolyOf<D>& f) {
  if (f.is_zero()) return {};
  std::vector<typename D::Element> b(f.coeffs().size(), dom.zero());
  OrePolyOf<D> rest = f;
  while (!rest.is_zero()) {
    const auto n = static_cast<std::size_t>(rest.degree());
    b[n] = dom.sigma(rest.lead(), -static_cast<long>(n));
    rest -= xn_times_a(dom, n, b[n], f.tag());
  }
  return b;
}

// sum x^k b_k expanded back to left-standard form.
template <SkewDomain D>
OrePolyOf<D> from_right_coefficients(const D& dom, const std::vector<typename D::Element>& b,
                                     RingTag tag = RingTag::XSigmaDelta) {
  OrePolyOf<D> out(tag);
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (!b[k].is_zero()) out += xn_times_a(dom, k, b[k], tag);
  }
  return out;
}

template <SkewDomain D>
bool ideal_is_stable(const D& dom, const IdealOf<D>& ideal) {
  if (ideal.is_zero()) return true;
  if (!(ideal_sigma(dom, ideal, 1) == ideal)) return false;
  return ideal_has(dom, ideal, dom.delta(ideal_generator(dom, ideal)));
}

// f ∈ pR. Coefficientwise membership is only the right test when p is
// (sigma, delta)-stable, because then pR = p[x; sigma, delta].
template <SkewDomain D>
bool in_extended_ideal(const D& dom, const OrePolyOf<D>& f, const IdealOf<D>& p) {
  if (!ideal_is_stable(dom, p)) {
    throw PreconditionError("in_extended_ideal: ideal is not (sigma, delta)-stable");
  }
  for (const auto& c : f.coeffs()) {
    if (!ideal_has(dom, p, c)) return false;
  }
  return true;
}

// Generator check is exact: both delta and b -> ab - sigma(b)a are
// sigma-derivations, and a sigma-derivation is fixed by its value on the generator.
template <SkewDomain D>
void require_inner_witness(const D& dom, const typename D::Element& a) {
  if (!is_inner_witness_at(dom, a, dom.generator())) {
    throw PreconditionError("element is not an inner witness: delta(b) != ab - sigma(b)a");
  }
}

namespace detail {

// sum f_k (var + shift)^k in the target ring.
template <SkewDomain D>
OrePolyOf<D> substitute_shift(const D& dom, const OrePolyOf<D>& f, const typename D::Element& shift,
                              RingTag target) {
  const OrePolyOf<D> lin({shift, dom.one()}, target);
  OrePolyOf<D> power({dom.one()}, target);
  OrePolyOf<D> out(target);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) power = ore_mul(dom, power, lin);
    if (!f.coeffs()[k].is_zero()) out += ore_mul(dom, OrePolyOf<D>({f.coeffs()[k]}, target), power);
  }
  return out;
}

}  // namespace detail

// D[x; sigma, delta] -> D[y; sigma], fixing D and sending x to y + a.
template <SkewDomain D>
OrePolyOf<D> to_pure_sigma(const D& dom, const OrePolyOf<D>& f, const typename D::Element& a) {
  if (f.tag() != RingTag::XSigmaDelta) throw PreconditionError("to_pure_sigma expects an element of D[x; sigma, delta]");
  require_inner_witness(dom, a);
  return detail::substitute_shift(dom, f, a, RingTag::YSigma);
}

// Inverse map: y -> x - a.
template <SkewDomain D>
OrePolyOf<D> from_pure_sigma(const D& dom, const OrePolyOf<D>& g, const typename D::Element& a) {
  if (g.tag() != RingTag::YSigma) throw PreconditionError("from_pure_sigma expects an element of D[y; sigma]");
  require_inner_witness(dom, a);
  return detail::substitute_shift(dom, g, -a, RingTag::XSigmaDelta);
}

template <SkewDomain D>
OrePolyOf<D> random_ore_poly(const D& dom, Rng& rng, unsigned max_degree, unsigned coeff_size,
                             RingTag tag = RingTag::XSigmaDelta) {
  const auto deg = static_cast<std::size_t>(uniform_int(rng, 0, max_degree));
  std::vector<typename D::Element> c;
  for (std::size_t k = 0; k <= deg; ++k) c.push_back(dom.random_element(rng, coeff_size));
  return OrePolyOf<D>(std::move(c), tag);
}

}  // namespace ore
