#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ore/errors.hpp"

namespace ore {

// Dense univariate polynomial c[0] + c[1] t + ... over an exact field.
// The field context travels with the value so elements are self-contained.
template <class Field>
class UPoly {
 public:
  using Scalar = typename Field::Scalar;

  UPoly() = default;
  explicit UPoly(Field field) : field_(std::move(field)) {}
  UPoly(Field field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static UPoly constant(const Field& f, Scalar v) { return UPoly(f, {std::move(v)}); }
  static UPoly monomial(const Field& f, Scalar v, std::size_t k) {
    std::vector<Scalar> c(k + 1, f.zero());
    c[k] = std::move(v);
    return UPoly(f, std::move(c));
  }
  // t itself.
  static UPoly variable(const Field& f) { return monomial(f, f.one(), 1); }

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& lead() const { return c_.back(); }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = field_.neg(v);
    return r;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    const Field& f = a.field_;
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
      }
    }
    return UPoly(f, std::move(out));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly scale(const Scalar& s) const {
    UPoly r = *this;
    for (auto& v : r.c_) v = field_.mul(v, s);
    r.trim();
    return r;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(lead()));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(field_);
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      d[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i)), c_[i]);
    }
    return UPoly(field_, std::move(d));
  }

  // f(a*t + b).
  UPoly compose_affine(const Scalar& a, const Scalar& b) const {
    UPoly lin(field_, {b, a});
    UPoly r(field_);
    for (std::size_t i = c_.size(); i-- > 0;) {
      r = r * lin;
      r += constant(field_, c_[i]);
    }
    return r;
  }

  Scalar eval(const Scalar& x) const {
    Scalar r = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
      if (b.c_[i] < a.c_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  Field field_{};
  std::vector<Scalar> c_;
};

template <class Field>
std::pair<UPoly<Field>, UPoly<Field>> divmod(const UPoly<Field>& a, const UPoly<Field>& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const Field& f = a.field();
  using Scalar = typename Field::Scalar;
  if (a.degree() < b.degree()) return {UPoly<Field>(f), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quot(rem.size() - b.coeffs().size() + 1, f.zero());
  const Scalar inv_lead = f.inv(b.lead());
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar q = f.mul(rem[k + db], inv_lead);
    quot[k] = q;
    if (f.is_zero(q)) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k + j] = f.sub(rem[k + j], f.mul(q, b.coeffs()[j]));
    }
  }
  rem.resize(db);
  return {UPoly<Field>(f, std::move(quot)), UPoly<Field>(f, std::move(rem))};
}

template <class Field>
UPoly<Field> operator%(const UPoly<Field>& a, const UPoly<Field>& b) {
  return divmod(a, b).second;
}

// Monic gcd; gcd(0, 0) = 0.
template <class Field>
UPoly<Field> gcd(UPoly<Field> a, UPoly<Field> b) {
  while (!b.is_zero()) {
    UPoly<Field> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class Field>
UPoly<Field> pow(UPoly<Field> base, unsigned long e) {
  UPoly<Field> r = UPoly<Field>::constant(base.field(), base.field().one());
  while (e != 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return r;
}

template <class Field>
UPoly<Field> powmod(UPoly<Field> base, mpz_class e, const UPoly<Field>& m) {
  UPoly<Field> r = UPoly<Field>::constant(base.field(), base.field().one()) % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
    e >>= 1;
    if (e > 0) base = (base * base) % m;
  }
  return r;
}

}  // namespace ore
