#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ore::integer {

// Trial divisors tried before a cofactor is declared out of budget.
inline constexpr unsigned long kTrialLimit = 10'000'000;

// Factorization of |n| (n != 0) by trial division. A cofactor that survives
// the trial limit must be a probable prime, otherwise BudgetExceeded.
std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n);

// Positive divisors of |n|, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

std::vector<unsigned long> primes_up_to(unsigned long bound);

}  // namespace ore::integer
