#include "ore/poly_factor.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "ore/integer.hpp"
#include "ore/random.hpp"

namespace ore {

namespace fp {

namespace {

FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.field().modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t k = 0; k * p < f.coeffs().size(); ++k) c.push_back(f.coeffs()[k * p]);
  return FpPoly(f.field(), std::move(c));
}

FpPoly quotient(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

void squarefree(const FpPoly& f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const unsigned p = static_cast<unsigned>(f.field().modulus());
  const FpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * p, out);
    return;
  }
  FpPoly c = gcd(f, d);
  FpPoly w = quotient(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly z = quotient(w, y);
    if (z.degree() > 0) out.emplace_back(z, mult * i);
    ++i;
    w = std::move(y);
    c = quotient(c, w);
  }
  if (c.degree() > 0) squarefree(pth_root(c), mult * p, out);
}

void equal_degree(const FpPoly& g, unsigned d, Rng& rng, std::vector<FpPoly>& out) {
  const int n = g.degree();
  if (n == static_cast<int>(d)) {
    out.push_back(g.monic());
    return;
  }
  const PrimeField& field = g.field();
  const std::uint64_t p = field.modulus();
  mpz_class exponent;
  if (p != 2) {
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    exponent = (pd - 1) / 2;
  }
  const FpPoly one = FpPoly::constant(field, field.one());
  for (;;) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = static_cast<std::uint64_t>(uniform_int(rng, 0, static_cast<std::int64_t>(p) - 1));
    FpPoly a(field, std::move(c));
    if (a.degree() <= 0) continue;
    FpPoly b(field);
    if (p != 2) {
      b = powmod(a, exponent, g) - one;
    } else {
      FpPoly acc = a % g;
      b = acc;
      for (unsigned j = 1; j < d; ++j) {
        acc = (acc * acc) % g;
        b += acc;
      }
    }
    FpPoly u = gcd(b, g);
    if (u.degree() > 0 && u.degree() < n) {
      equal_degree(u, d, rng, out);
      equal_degree(quotient(g, u), d, rng, out);
      return;
    }
  }
}

void distinct_degree(const FpPoly& f, Rng& rng, std::vector<FpPoly>& out) {
  const PrimeField& field = f.field();
  const FpPoly t = FpPoly::variable(field);
  FpPoly rest = f.monic();
  FpPoly h = t % rest;
  const mpz_class p(static_cast<unsigned long>(field.modulus()));
  for (unsigned i = 1; rest.degree() >= static_cast<int>(2 * i); ++i) {
    h = powmod(h, p, rest);
    FpPoly g = gcd(h - t, rest);
    if (g.degree() > 0) {
      equal_degree(g, i, rng, out);
      rest = quotient(rest, g);
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
}

// t^(p^k) mod f by k successive p-th powers.
FpPoly frobenius_power(const FpPoly& f, unsigned k) {
  const mpz_class p(static_cast<unsigned long>(f.field().modulus()));
  FpPoly h = FpPoly::variable(f.field()) % f;
  for (unsigned j = 0; j < k; ++j) h = powmod(h, p, f);
  return h;
}

}  // namespace

bool is_irreducible(const FpPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FpPoly g = f.monic();
  const FpPoly t = FpPoly::variable(f.field());
  for (const auto& [r, e] : integer::factor(mpz_class(n))) {
    const unsigned k = static_cast<unsigned>(n / r.get_ui());
    if (gcd(frobenius_power(g, k) - t, g).degree() != 0) return false;
  }
  return frobenius_power(g, static_cast<unsigned>(n)) == t % g;
}

std::vector<std::pair<FpPoly, unsigned>> factor(const FpPoly& f) {
  if (f.is_zero()) throw PreconditionError("factor of the zero polynomial");
  std::vector<std::pair<FpPoly, unsigned>> sqf;
  squarefree(f.monic(), 1, sqf);
  // Fixed seed: factorization is deterministic.
  Rng rng(0x5eed'f00dULL ^ f.field().modulus());
  std::map<FpPoly, unsigned> merged;
  for (const auto& [z, m] : sqf) {
    std::vector<FpPoly> irr;
    distinct_degree(z, rng, irr);
    for (auto& q : irr) merged[q] += m;
  }
  return {merged.begin(), merged.end()};
}

std::vector<FpPoly> monic_irreducibles(const PrimeField& field, unsigned deg) {
  const std::uint64_t p = field.modulus();
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, deg);
  if (count > 50'000'000) throw BudgetExceeded("irreducible enumeration too large");
  const std::uint64_t total = count.get_ui();
  std::vector<FpPoly> out;
  std::vector<std::uint64_t> c(deg + 1, 0);
  c[deg] = 1;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (unsigned j = 0; j < deg; ++j) {
      c[j] = v % p;
      v /= p;
    }
    FpPoly f(field, c);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fp

namespace qpoly {

namespace {

// Integer numerators of the primitive integer multiple of f.
std::vector<mpz_class> primitive_integer(const QPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g != 0) {
    for (auto& v : out) v /= g;
  }
  return out;
}

std::optional<mpq_class> rational_root(const QPoly& f) {
  const auto ints = primitive_integer(f);
  if (ints.front() == 0) return mpq_class(0);
  const auto lead_divs = integer::divisors(ints.back());
  for (const auto& r : integer::divisors(ints.front())) {
    for (const auto& s : lead_divs) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        mpq_class c(sign * r, s);
        c.canonicalize();
        if (sgn(f.eval(c)) == 0) return c;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<QPoly, unsigned>> factor(const QPoly& f) {
  if (f.is_zero()) throw PreconditionError("factor of the zero polynomial");
  const RationalField field;
  std::map<QPoly, unsigned> merged;
  QPoly rest = f.monic();
  while (rest.degree() >= 1) {
    if (auto c = rational_root(rest)) {
      QPoly lin(field, {mpq_class(-*c), mpq_class(1)});
      merged[lin] += 1;
      rest = divmod(rest, lin).first;
      continue;
    }
    if (rest.degree() <= 3) {
      merged[rest.monic()] += 1;
      break;
    }
    throw BudgetExceeded("Q[t] factorization budget exceeded: factor of degree " +
                         std::to_string(rest.degree()) + " has no rational root");
  }
  return {merged.begin(), merged.end()};
}

bool is_irreducible(const QPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  if (f.degree() <= 3) return !rational_root(f).has_value();
  const auto fs = factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

mpz_class height(const QPoly& f) {
  mpz_class h = 0;
  for (const auto& c : f.coeffs()) {
    mpz_class n = abs(c.get_num());
    if (n > h) h = n;
    if (c.get_den() > h) h = c.get_den();
  }
  return h;
}

}  // namespace qpoly

}  // namespace ore
