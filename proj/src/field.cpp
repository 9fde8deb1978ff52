#include "ore/field.hpp"

#include <cctype>

#include "text_util.hpp"

namespace ore {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (1ULL << 31)) {
    throw DomainError("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  if (mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), 30) == 0) {
    throw DomainError("field modulus " + std::to_string(p) +
                      " is not prime (only prime fields are supported)");
  }
}

PrimeField::Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(p_));
  // Fermat: a^(p-2).
  Scalar result = 1, base = a;
  std::uint64_t e = p_ - 2;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

PrimeField::Scalar PrimeField::from_int(long long v) const {
  const long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<Scalar>(r);
}

PrimeField::Scalar PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return r.get_ui();
}

std::string PrimeField::format(Scalar a) const {
  return std::to_string(a) + " mod " + std::to_string(p_);
}

PrimeField::Scalar PrimeField::parse(const std::string& text) const {
  const std::string s = detail::trim(text);
  const auto pos = s.find("mod");
  const std::string value = detail::trim(pos == std::string::npos ? s : s.substr(0, pos));
  if (pos != std::string::npos) {
    const std::string mod = detail::trim(s.substr(pos + 3));
    mpz_class q;
    if (!detail::parse_mpz(mod, q) || q != static_cast<unsigned long>(p_)) {
      throw ParseError("scalar '" + s + "' does not match modulus " + std::to_string(p_));
    }
  }
  mpz_class v;
  if (!detail::parse_mpz(value, v)) throw ParseError("malformed residue '" + s + "'");
  return from_mpz(v);
}

RationalField::Scalar RationalField::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw PreconditionError("inverse of zero in Q");
  return 1 / a;
}

std::string RationalField::format(const Scalar& a) const {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

RationalField::Scalar RationalField::parse(const std::string& text) const {
  const std::string s = detail::trim(text);
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  if (slash == std::string::npos) {
    if (!detail::parse_mpz(s, num)) throw ParseError("malformed rational '" + s + "'");
  } else {
    if (!detail::parse_mpz(detail::trim(s.substr(0, slash)), num) ||
        !detail::parse_mpz(detail::trim(s.substr(slash + 1)), den) || den == 0) {
      throw ParseError("malformed rational '" + s + "'");
    }
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ore
