#include "ore/domain.hpp"

#include <algorithm>

#include "ore/integer.hpp"
#include "text_util.hpp"

namespace ore {

const char* to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::GaussianIntegers:
      return "GaussianIntegers";
    case DomainKind::PolyOverFiniteField:
      return "PolyOverFiniteField";
    case DomainKind::PolyOverRationals:
      return "PolyOverRationals";
  }
  return "?";
}

// ---------------------------------------------------------------- Z[i]

GaussianDomain::GaussianDomain(Sigma sigma, GaussInt d) : sigma_(sigma), d_(std::move(d)) {
  // delta(i*i) = delta(-1) = 0 must equal sigma(i) d + d i.
  const GaussInt i = generator();
  if (!leibniz_holds(*this, i, i)) {
    throw DomainError("delta(i) = " + gauss::format(d_) +
                      " violates the Leibniz rule on i*i for this sigma (identity forces d = 0)");
  }
}

GaussInt GaussianDomain::sigma(const GaussInt& a, long k) const {
  if (sigma_ == Sigma::Conjugation && (k % 2) != 0) return a.conj();
  return a;
}

GaussInt GaussianDomain::delta(const GaussInt& a) const { return a.im * d_; }

GaussInt GaussianDomain::random_element(Rng& rng, unsigned size) const {
  const auto r = static_cast<std::int64_t>(size);
  return GaussInt(static_cast<long>(uniform_int(rng, -r, r)), static_cast<long>(uniform_int(rng, -r, r)));
}

// ---------------------------------------------------------------- k[t]

template <class Field>
AffinePolyDomain<Field>::AffinePolyDomain(Field field, Scalar a, Scalar b, Element h)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), h_(std::move(h)) {
  if (field_.is_zero(a_)) {
    throw DomainError("sigma(t) = a*t + b is not invertible: a = 0 is not a unit");
  }
  if (!(h_.field() == field_)) throw DomainError("delta parameter h lives over a different field");
  shift_ = Element(field_, {b_, field_.sub(a_, field_.one())});
  const Element t = generator();
  if (!leibniz_holds(*this, t, t) || !leibniz_holds(*this, t, one())) {
    throw DomainError("delta fails the Leibniz rule on generators");
  }
}

template <class Field>
std::pair<typename Field::Scalar, typename Field::Scalar> AffinePolyDomain<Field>::sigma_power(
    long k) const {
  // (A, B) stands for t -> A t + B; powers of one map commute.
  Scalar base_a = a_, base_b = b_;
  if (k < 0) {
    base_a = field_.inv(a_);
    base_b = field_.neg(field_.mul(base_a, b_));
    k = -k;
  }
  Scalar ra = field_.one(), rb = field_.zero();
  auto compose = [&](const Scalar& a1, const Scalar& b1, const Scalar& a2, const Scalar& b2) {
    return std::pair<Scalar, Scalar>{field_.mul(a1, a2), field_.add(field_.mul(a1, b2), b1)};
  };
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1) std::tie(ra, rb) = compose(ra, rb, base_a, base_b);
    e >>= 1;
    if (e != 0) std::tie(base_a, base_b) = compose(base_a, base_b, base_a, base_b);
  }
  return {ra, rb};
}

template <class Field>
UPoly<Field> AffinePolyDomain<Field>::sigma(const Element& f, long k) const {
  if (k == 0 || f.is_constant()) return f;
  const auto [ak, bk] = sigma_power(k);
  return f.compose_affine(ak, bk);
}

template <class Field>
UPoly<Field> AffinePolyDomain<Field>::delta(const Element& f) const {
  if (h_.is_zero() || f.is_constant()) return zero();
  if (sigma_is_identity()) return h_ * f.derivative();
  auto [q, r] = divmod(sigma(f, 1) - f, shift_);
  if (!r.is_zero()) throw Error("sigma(f) - f not divisible by sigma(t) - t");
  return h_ * q;
}

template <class Field>
std::optional<std::uint64_t> AffinePolyDomain<Field>::sigma_order() const {
  if (sigma_is_identity()) return 1;
  if constexpr (std::same_as<Field, PrimeField>) {
    const std::uint64_t p = field_.modulus();
    if (a_ == 1) return p;  // translation by b != 0 has order char = p
    std::uint64_t ord = 1;
    for (Scalar x = a_; x != 1; x = field_.mul(x, a_)) ++ord;
    return ord;
  } else {
    // The only roots of unity in Q are +-1.
    if (a_ == -1) return 2;
    return std::nullopt;
  }
}

template <class Field>
std::optional<UPoly<Field>> AffinePolyDomain<Field>::exact_div(const Element& a, const Element& b) const {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

template <class Field>
bool AffinePolyDomain<Field>::divides(const Element& d, const Element& a) const {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

template <class Field>
std::vector<std::pair<UPoly<Field>, unsigned>> AffinePolyDomain<Field>::factor(const Element& f) const {
  if constexpr (std::same_as<Field, PrimeField>) {
    return fp::factor(f);
  } else {
    return qpoly::factor(f);
  }
}

template <class Field>
bool AffinePolyDomain<Field>::is_prime(const Element& f) const {
  if constexpr (std::same_as<Field, PrimeField>) {
    return fp::is_irreducible(f);
  } else {
    return qpoly::is_irreducible(f);
  }
}

template <class Field>
mpz_class AffinePolyDomain<Field>::prime_norm(const Element& p) const {
  if constexpr (std::same_as<Field, PrimeField>) {
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), field_.modulus(), static_cast<unsigned long>(std::max(p.degree(), 0)));
    return n;
  } else {
    return mpz_class(p.degree()) + qpoly::height(p.monic());
  }
}

template <class Field>
std::vector<UPoly<Field>> AffinePolyDomain<Field>::primes_up_to(const mpz_class& bound) const {
  std::vector<Element> out;
  if constexpr (std::same_as<Field, PrimeField>) {
    mpz_class qd = field_.modulus();
    for (unsigned d = 1; qd <= bound; ++d) {
      auto irr = fp::monic_irreducibles(field_, d);
      out.insert(out.end(), irr.begin(), irr.end());
      qd *= field_.modulus();
    }
  } else {
    // t - r/s with max(|r|, s, 1) <= bound - 1.
    if (bound < 2) return out;
    const mpz_class h = bound - 1;
    if (h > 10'000) throw BudgetExceeded("Q[t] prime enumeration bound too large");
    const long hl = h.get_si();
    std::vector<std::pair<mpz_class, Element>> found;
    for (long s = 1; s <= hl; ++s) {
      for (long r = -hl; r <= hl; ++r) {
        mpz_class g;
        mpz_gcd_ui(g.get_mpz_t(), mpz_class(r).get_mpz_t(), static_cast<unsigned long>(s));
        if (r == 0 ? s != 1 : g != 1) continue;
        mpq_class c(r, s);
        c.canonicalize();
        Element p(field_, {-c, mpq_class(1)});
        found.emplace_back(prime_norm(p), std::move(p));
      }
    }
    std::sort(found.begin(), found.end());
    for (auto& [n, p] : found) out.push_back(std::move(p));
    return out;
  }
  return out;
}

template <class Field>
std::vector<UPoly<Field>> AffinePolyDomain<Field>::residue_basis(const Element& g) const {
  std::vector<Element> out;
  for (int j = 0; j < std::max(g.degree(), 1); ++j) {
    out.push_back(Element::monomial(field_, field_.one(), static_cast<std::size_t>(j)));
  }
  return out;
}

template <class Field>
UPoly<Field> AffinePolyDomain<Field>::random_element(Rng& rng, unsigned size) const {
  const auto deg = static_cast<std::size_t>(uniform_int(rng, 0, size));
  std::vector<Scalar> c(deg + 1);
  for (auto& v : c) {
    if constexpr (std::same_as<Field, PrimeField>) {
      v = static_cast<Scalar>(uniform_int(rng, 0, static_cast<std::int64_t>(field_.modulus()) - 1));
    } else {
      mpq_class q(static_cast<long>(uniform_int(rng, -5, 5)), static_cast<unsigned long>(uniform_int(rng, 1, 4)));
      q.canonicalize();
      v = q;
    }
  }
  return Element(field_, std::move(c));
}

template <class Field>
std::string AffinePolyDomain<Field>::format(const Element& f) const {
  if (f.is_zero()) return field_.format(field_.zero());
  std::string out;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (field_.is_zero(f.coeffs()[k])) continue;
    if (!out.empty()) out += " + ";
    out += field_.format(f.coeffs()[k]);
    if (k == 1) out += "*t";
    if (k > 1) out += "*t^" + std::to_string(k);
  }
  return out;
}

template <class Field>
UPoly<Field> AffinePolyDomain<Field>::parse(const std::string& text) const {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial");
  // Split into signed terms; a sign directly after '*', '^' or '/' belongs to a number.
  std::vector<std::pair<bool, std::string>> terms;
  bool negative = false;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool sign = c == '+' || c == '-';
    const bool attached = !cur.empty() && (cur.back() == '*' || cur.back() == '^' || cur.back() == '/');
    if (sign && !attached) {
      if (!cur.empty()) {
        terms.emplace_back(negative, cur);
        cur.clear();
        negative = false;
      }
      if (c == '-') negative = !negative;
      continue;
    }
    cur.push_back(c);
  }
  if (cur.empty()) throw ParseError("malformed polynomial '" + text + "'");
  terms.emplace_back(negative, cur);

  Element out = zero();
  for (const auto& [neg, term] : terms) {
    const auto tpos = term.find('t');
    std::string scalar_part = tpos == std::string::npos ? term : term.substr(0, tpos);
    std::size_t k = 0;
    if (tpos != std::string::npos) {
      const std::string mono = term.substr(tpos);
      if (mono == "t") {
        k = 1;
      } else if (mono.size() > 2 && mono[1] == '^') {
        mpz_class e;
        if (!detail::parse_mpz(mono.substr(2), e) || e < 0 || e > 100'000) {
          throw ParseError("malformed exponent in '" + text + "'");
        }
        k = e.get_ui();
      } else {
        throw ParseError("malformed monomial in '" + text + "'");
      }
      if (!scalar_part.empty()) {
        if (scalar_part.back() != '*') throw ParseError("expected '*' before t in '" + text + "'");
        scalar_part.pop_back();
      }
    }
    Scalar v = scalar_part.empty() ? field_.one() : field_.parse(scalar_part);
    if (neg) v = field_.neg(v);
    out += Element::monomial(field_, v, k);
  }
  return out;
}

template class AffinePolyDomain<PrimeField>;
template class AffinePolyDomain<RationalField>;

}  // namespace ore
