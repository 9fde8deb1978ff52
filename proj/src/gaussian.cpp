#include "ore/gaussian.hpp"

#include <algorithm>

#include "ore/errors.hpp"
#include "ore/integer.hpp"
#include "text_util.hpp"

namespace ore::gauss {

namespace {

// round(n / d) for d > 0, halves rounded up.
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_class twice = 2 * n + d;
  mpz_class dd = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), dd.get_mpz_t());
  return q;
}

unsigned strip(GaussInt& a, const GaussInt& p) {
  unsigned e = 0;
  while (auto q = exact_div(a, p)) {
    a = std::move(*q);
    ++e;
  }
  return e;
}

GaussInt prime_above(const mpz_class& p) {
  // p = 1 mod 4: find x with x^2 = -1 (mod p), then gcd(p, x + i).
  const mpz_class exp = (p - 1) / 4;
  for (unsigned long n = 2;; ++n) {
    mpz_class x;
    const mpz_class base(n);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    mpz_class sq = (x * x + 1) % p;
    if (sq == 0) return gcd(GaussInt(p, 0), GaussInt(x, 1));
  }
}

}  // namespace

std::pair<GaussInt, GaussInt> divmod(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.norm();
  if (n == 0) throw PreconditionError("Gaussian division by zero");
  const GaussInt num = a * b.conj();
  GaussInt q(round_div(num.re, n), round_div(num.im, n));
  GaussInt r = a - q * b;
  return {std::move(q), std::move(r)};
}

std::optional<GaussInt> exact_div(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.norm();
  if (n == 0) throw PreconditionError("Gaussian division by zero");
  const GaussInt num = a * b.conj();
  if (mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) == 0 ||
      mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  GaussInt q;
  mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
  return q;
}

bool divides(const GaussInt& d, const GaussInt& a) {
  if (d.is_zero()) return a.is_zero();
  return exact_div(a, d).has_value();
}

GaussInt normalize(const GaussInt& a) {
  if (a.is_zero()) return a;
  GaussInt z = a;
  // Multiplying by i rotates by 90 degrees: (x, y) -> (-y, x).
  for (int k = 0; k < 4; ++k) {
    if (sgn(z.re) > 0 && sgn(z.im) >= 0) return z;
    z = GaussInt(-z.im, z.re);
  }
  return z;
}

bool is_unit(const GaussInt& a) { return a.norm() == 1; }

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return normalize(a);
}

bool is_prime(const GaussInt& a) {
  if (a.is_zero() || is_unit(a)) return false;
  const auto f = factor(a);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<std::pair<GaussInt, unsigned>> factor(const GaussInt& a) {
  if (a.is_zero()) throw PreconditionError("factor of zero");
  std::vector<std::pair<GaussInt, unsigned>> out;
  GaussInt rest = a;
  for (const auto& [p, e] : integer::factor(a.norm())) {
    if (p == 2) {
      out.emplace_back(GaussInt(1, 1), e);
      for (unsigned k = 0; k < e; ++k) rest = *exact_div(rest, GaussInt(1, 1));
    } else if (p % 4 == 3) {
      out.emplace_back(GaussInt(p, 0), e / 2);
      for (unsigned k = 0; k < e / 2; ++k) rest = *exact_div(rest, GaussInt(p, 0));
    } else {
      const GaussInt pi = prime_above(p);
      const GaussInt pi_bar = normalize(pi.conj());
      const unsigned k1 = strip(rest, pi);
      const unsigned k2 = strip(rest, pi_bar);
      if (k1 != 0) out.emplace_back(pi, k1);
      if (k2 != 0) out.emplace_back(pi_bar, k2);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<GaussInt> primes_up_to(const mpz_class& bound) {
  if (bound > 100'000'000) throw BudgetExceeded("Gaussian prime enumeration bound too large");
  const unsigned long b = bound < 0 ? 0 : bound.get_ui();
  std::vector<std::pair<mpz_class, GaussInt>> found;
  for (unsigned long p : integer::primes_up_to(b)) {
    const mpz_class pz(p);
    if (p == 2) {
      found.emplace_back(2, GaussInt(1, 1));
    } else if (p % 4 == 1) {
      const GaussInt pi = prime_above(pz);
      found.emplace_back(pz, pi);
      found.emplace_back(pz, normalize(pi.conj()));
    } else if (pz * pz <= bound) {
      found.emplace_back(pz * pz, GaussInt(pz, 0));
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<GaussInt> out;
  out.reserve(found.size());
  for (auto& [n, g] : found) out.push_back(std::move(g));
  return out;
}

std::string format(const GaussInt& a) {
  std::string s = a.re.get_str();
  if (sgn(a.im) < 0) {
    s += "-" + mpz_class(-a.im).get_str();
  } else {
    s += "+" + a.im.get_str();
  }
  return s + "*i";
}

GaussInt parse(const std::string& text) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw ParseError("empty Gaussian integer");
  GaussInt out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') negative = !negative;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw ParseError("malformed Gaussian integer '" + text + "'");
    bool imaginary = false;
    if (term.back() == 'i') {
      imaginary = true;
      term.pop_back();
      if (!term.empty() && term.back() == '*') term.pop_back();
      if (term.empty()) term = "1";
    }
    mpz_class v;
    if (!detail::parse_mpz(term, v)) throw ParseError("malformed Gaussian integer '" + text + "'");
    if (negative) v = -v;
    (imaginary ? out.im : out.re) += v;
    pos = end;
  }
  return out;
}

}  // namespace ore::gauss
