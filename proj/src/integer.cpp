#include "ore/integer.hpp"

#include <algorithm>

#include "ore/errors.hpp"

namespace ore::integer {

std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n) {
  if (n == 0) throw PreconditionError("factor of zero");
  mpz_class m = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> out;
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e != 0) out.emplace_back(mpz_class(p), e);
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialLimit && m > 1; p += 2) {
    if (mpz_class(p) * p > m) break;
    strip(p);
  }
  if (m > 1) {
    if (mpz_class(kTrialLimit) * kTrialLimit < m && mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) {
      throw BudgetExceeded("integer factorization budget exceeded for " + n.get_str());
    }
    out.emplace_back(m, 1);
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = ds.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<unsigned long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace ore::integer
