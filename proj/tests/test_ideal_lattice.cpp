#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "ore/ideal.hpp"
#include "ore/integer.hpp"
#include "ore/oracle.hpp"
#include "testbeds.hpp"

using namespace ore;
using testbeds::f3_shift;
using testbeds::gauss_conj;

namespace {

GaussInt gi(long a, long b = 0) { return GaussInt(a, b); }

template <class D>
IdealOf<D> prime_ideal(const D& dom, const typename D::Element& p) {
  return IdealOf<D>::from_factors({{dom.normalize(p), 1}});
}

// Trial division by every smaller canonical non-unit: independent of the factorizer.
bool gauss_prime_by_trial(const GaussInt& z) {
  const mpz_class n = z.norm();
  if (n < 2) return false;
  for (long a = 1; a * a <= n.get_si(); ++a) {
    for (long b = 0; a * a + b * b <= n.get_si(); ++b) {
      const GaussInt d(a, b);
      const mpz_class m = d.norm();
      if (m < 2 || m >= n) continue;
      if (gauss::divides(d, z)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(IdealMake, GaussianGcd) {
  const auto dom = gauss_conj(1);
  EXPECT_EQ(ideal_make(dom, {gi(2), gi(1, 1)}), prime_ideal(dom, gi(1, 1)));
  EXPECT_TRUE(ideal_make(dom, {gi(0)}).is_zero());
  EXPECT_TRUE(ideal_make(dom, {gi(3), gi(2, 1)}).is_unit());
  EXPECT_THROW(ideal_make(dom, std::span<const GaussInt>()), PreconditionError);
}

TEST(IdealMake, PolynomialGcd) {
  const auto dom = f3_shift();
  // gcd(t^2 - 1, t - 1) = t - 1 = t + 2
  EXPECT_EQ(ideal_make(dom, {dom.parse("t^2 - 1"), dom.parse("t - 1")}), prime_ideal(dom, dom.parse("t + 2")));
}

TEST(IdealArithmetic, GaussianExamples) {
  const auto dom = gauss_conj(1);
  const auto r = prime_ideal(dom, gi(1, 1));
  const auto two = ideal_from_element(dom, gi(2));
  EXPECT_EQ(ideal_product(r, r), two);  // 2 = -i (1+i)^2
  EXPECT_EQ(two.exponent_of(gi(1, 1)), 2u);
  EXPECT_EQ(ideal_intersect(two, r), two);
  EXPECT_EQ(ideal_product(r, IdealOf<GaussianDomain>::unit()), r);
  const auto five = ideal_from_element(dom, gi(5));
  ASSERT_EQ(five.factors().size(), 2u);
  EXPECT_EQ(five.factors()[0].prime, gi(1, 2));  // 2 - i up to a unit
  EXPECT_EQ(five.factors()[1].prime, gi(2, 1));
  EXPECT_EQ(ideal_norm(dom, five), 25);
  EXPECT_EQ(format_ideal(dom, ideal_power(r, 3)), "(1+1*i)^3");
}

TEST(IdealArithmetic, PolynomialExamples) {
  const auto dom = f3_shift();
  const auto t = prime_ideal(dom, dom.parse("t"));
  const auto t1 = prime_ideal(dom, dom.parse("t + 1"));
  EXPECT_EQ(ideal_product(t, t1), ideal_from_element(dom, dom.parse("t^2 + t")));
  EXPECT_EQ(ideal_intersect(t, t1), ideal_product(t, t1));
  EXPECT_EQ(ideal_intersect(t, t), t);
  EXPECT_TRUE(ideal_contains(t, ideal_from_element(dom, dom.parse("t^2"))));
  EXPECT_FALSE(ideal_contains(t, t1));
  EXPECT_TRUE(ideal_contains(t, IdealOf<FpPolyDomain>::zero()));
  EXPECT_FALSE(ideal_contains(IdealOf<FpPolyDomain>::zero(), t));
  const auto cubic = ideal_from_element(dom, dom.parse("t^3 - t"));
  ASSERT_EQ(cubic.factors().size(), 3u);
  EXPECT_EQ(cubic.factors()[0].prime, dom.parse("t"));
  EXPECT_EQ(cubic.factors()[1].prime, dom.parse("t + 1"));
  EXPECT_EQ(cubic.factors()[2].prime, dom.parse("t + 2"));
  EXPECT_TRUE(ideal_factor(IdealOf<FpPolyDomain>::unit()).empty());
  EXPECT_THROW(ideal_factor(IdealOf<FpPolyDomain>::zero()), PreconditionError);
}

TEST(IdealArithmetic, RationalSplitting) {
  const auto dom = testbeds::qt(2, 0, "1");
  const auto i = ideal_from_element(dom, dom.parse("2*t^2 - 3*t + 1"));  // 2 (t - 1)(t - 1/2)
  ASSERT_EQ(i.factors().size(), 2u);
  EXPECT_EQ(i.factors()[0].prime, dom.parse("t - 1"));
  EXPECT_EQ(i.factors()[1].prime, dom.parse("t - 1/2"));
  // t^2 + 1 has no rational root and is accepted as a prime of degree 2
  EXPECT_TRUE(ideal_from_element(dom, dom.parse("t^2 + 1")).is_prime());
  // (t^2 + 1)(t^2 + 2) does not split over Q into pieces the factorizer can find
  EXPECT_THROW(ideal_from_element(dom, dom.parse("t^4 + 3*t^2 + 2")), BudgetExceeded);
}

TEST(Orbits, Examples) {
  const auto f3 = f3_shift();
  const auto o = sigma_orbit(f3, f3.parse("t"), 100);
  EXPECT_EQ(o.kind, OrbitKind::Finite);
  EXPECT_EQ(o.period, 3u);
  EXPECT_EQ(o.primes, (std::vector<FpPoly>{f3.parse("t"), f3.parse("t + 1"), f3.parse("t + 2")}));
  const auto fixed = sigma_orbit(f3, f3.parse("t^3 - t + 1"), 100);
  EXPECT_EQ(fixed.kind, OrbitKind::Finite);
  EXPECT_EQ(fixed.period, 1u);

  const auto g = gauss_conj(1);
  const auto og = sigma_orbit(g, gi(2, 1), 100);
  EXPECT_EQ(og.kind, OrbitKind::Finite);
  EXPECT_EQ(og.primes, (std::vector<GaussInt>{gi(2, 1), gi(1, 2)}));
  EXPECT_EQ(sigma_orbit(g, gi(3), 100).period, 1u);

  const auto q = testbeds::qt(2, 0, "1");
  EXPECT_EQ(sigma_orbit(q, q.parse("t - 1"), 100).kind, OrbitKind::Infinite);
  EXPECT_EQ(sigma_orbit(q, q.parse("t"), 100).kind, OrbitKind::Finite);

  // a bound shorter than the period leaves the orbit undetermined
  EXPECT_EQ(sigma_orbit(f3, f3.parse("t"), 2).kind, OrbitKind::Unknown);
}

TEST(EnumeratePrimes, Examples) {
  const auto f3 = f3_shift();
  const auto ps = enumerate_primes(f3, 9);
  ASSERT_EQ(ps.size(), 6u);
  EXPECT_EQ(ps[0], f3.parse("t"));
  EXPECT_EQ(ps[3].degree(), 2);
  EXPECT_TRUE(enumerate_primes(f3, 1).empty());

  const auto g = gauss_conj(1);
  EXPECT_EQ(enumerate_primes(g, 5), (std::vector<GaussInt>{gi(1, 1), gi(1, 2), gi(2, 1)}));
}

TEST(EnumeratePrimes, IrreducibleCountsOverF3) {
  // (1/d) sum_{e | d} mu(e) 3^(d/e): 3, 3, 8, 18, 48
  const auto f3 = f3_shift();
  std::map<int, int> by_degree;
  for (const auto& p : enumerate_primes(f3, 243)) ++by_degree[p.degree()];
  EXPECT_EQ(by_degree, (std::map<int, int>{{1, 3}, {2, 3}, {3, 8}, {4, 18}, {5, 48}}));
}

TEST(EnumeratePrimes, GaussianAgainstTrialDivision) {
  const auto g = gauss_conj(1);
  std::vector<GaussInt> brute;
  for (long a = 1; a * a <= 100; ++a) {
    for (long b = 0; a * a + b * b <= 100; ++b) {
      if (gauss_prime_by_trial(gi(a, b))) brute.push_back(gi(a, b));
    }
  }
  auto fast = enumerate_primes(g, 100);
  std::sort(brute.begin(), brute.end());
  std::sort(fast.begin(), fast.end());
  EXPECT_EQ(fast, brute);
  for (const auto& p : fast) EXPECT_TRUE(g.is_prime(p));
}

// Every ideal of norm <= bound, via the oracle's generator enumeration.
template <class D>
std::vector<IdealOf<D>> all_ideals(const D& dom, long bound) {
  const Oracle<D> oracle(dom, OracleBudget{bound, 8, 1, 0});
  std::vector<IdealOf<D>> out{IdealOf<D>::zero()};
  for (const auto& g : oracle.candidates()) out.push_back(ideal_from_element(dom, g));
  return out;
}

template <class D>
void check_lattice_laws(const D& dom, long bound) {
  const auto ideals = all_ideals(dom, bound);
  for (const auto& i : ideals) {
    if (i.is_zero()) continue;
    // factor / multiply round trip
    const auto g = ideal_generator(dom, i);
    EXPECT_EQ(ideal_make(dom, {g}), i);
    EXPECT_EQ(ideal_norm(dom, i), ideal_norm(dom, ideal_sigma(dom, i, 1)));
    for (const auto& f : i.factors()) EXPECT_TRUE(dom.is_prime(f.prime));
  }
  for (const auto& i : ideals) {
    for (const auto& j : ideals) {
      const auto prod = ideal_product(i, j);
      const auto meet = ideal_intersect(i, j);
      EXPECT_TRUE(ideal_contains(meet, prod));
      const bool coprime = !i.is_zero() && !j.is_zero() && ideal_sum(i, j).is_unit();
      EXPECT_EQ(prod == meet, coprime || i.is_unit() || j.is_unit() || (i.is_zero() || j.is_zero()));
      if (ideal_contains(i, j) && ideal_contains(j, i)) {
        EXPECT_EQ(i, j);
      }
      // containment agrees with divisibility of generators
      EXPECT_EQ(ideal_contains(i, j), dom.divides(ideal_generator(dom, i), ideal_generator(dom, j)));
    }
  }
  for (const auto& i : ideals) {
    for (const auto& j : ideals) {
      if (!ideal_contains(i, j)) continue;
      for (const auto& k : ideals) {
        if (ideal_contains(j, k)) {
          EXPECT_TRUE(ideal_contains(i, k));
        }
      }
    }
  }
}

TEST(LatticeLaws, F3UpTo81) { check_lattice_laws(f3_shift(), 81); }
TEST(LatticeLaws, GaussianUpTo100) { check_lattice_laws(gauss_conj(1), 100); }

TEST(LatticeLaws, SigmaMapsPrimesToPrimes) {
  const auto f3 = f3_shift("t");
  const auto ps = enumerate_primes(f3, 81);
  for (const auto& p : ps) {
    EXPECT_NE(std::find(ps.begin(), ps.end(), f3.normalize(f3.sigma(p, 1))), ps.end());
  }
  const auto g = gauss_conj(2);
  const auto gs = enumerate_primes(g, 100);
  for (const auto& p : gs) EXPECT_NE(std::find(gs.begin(), gs.end(), g.normalize(g.sigma(p, 1))), gs.end());
}

TEST(IntegerFactor, SmallValues) {
  EXPECT_EQ(integer::factor(360), (std::vector<std::pair<mpz_class, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(integer::divisors(12), (std::vector<mpz_class>{1, 2, 3, 4, 6, 12}));
}
