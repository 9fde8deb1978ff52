#include <gtest/gtest.h>

#include "ore/ore_poly.hpp"
#include "ore/serialize.hpp"
#include "testbeds.hpp"

using namespace ore;
using testbeds::f3_shift;
using testbeds::gauss_conj;

namespace {

GaussInt gi(long a, long b = 0) { return GaussInt(a, b); }

// x^i b by peeling the innermost x: x^i b = (x^(i-1) sigma(b)) x + x^(i-1) delta(b).
template <class D>
std::vector<typename D::Element> naive_xpow_times(const D& dom, std::size_t i, const typename D::Element& b) {
  if (i == 0) return {b};
  auto hi = naive_xpow_times(dom, i - 1, dom.sigma(b, 1));
  auto lo = naive_xpow_times(dom, i - 1, dom.delta(b));
  std::vector<typename D::Element> out(i + 1, dom.zero());
  for (std::size_t k = 0; k < hi.size(); ++k) out[k + 1] = out[k + 1] + hi[k];
  for (std::size_t k = 0; k < lo.size(); ++k) out[k] = out[k] + lo[k];
  return out;
}

template <class D>
OrePolyOf<D> naive_mul(const D& dom, const OrePolyOf<D>& f, const OrePolyOf<D>& g) {
  std::vector<typename D::Element> out(f.coeffs().size() + g.coeffs().size() + 1, dom.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      const auto row = naive_xpow_times(dom, i, g.coeffs()[j]);
      for (std::size_t k = 0; k < row.size(); ++k) out[k + j] = out[k + j] + f.coeffs()[i] * row[k];
    }
  }
  return OrePolyOf<D>(std::move(out), f.tag());
}

template <class D>
OrePolyOf<D> poly(const D& dom, std::initializer_list<const char*> coeffs, RingTag tag = RingTag::XSigmaDelta) {
  std::vector<typename D::Element> c;
  for (const char* s : coeffs) c.push_back(dom.parse(s));
  return OrePolyOf<D>(std::move(c), tag);
}

}  // namespace

TEST(OreMul, DefiningRelation) {
  const auto dom = gauss_conj(2);
  const auto x = ore_monomial(dom, dom.one(), 1);
  const auto i = ore_constant(dom, gi(0, 1));
  EXPECT_EQ(ore_mul(dom, x, i), poly(dom, {"2", "-i"}));
  const auto ix = ore_monomial(dom, gi(0, 1), 1);
  EXPECT_EQ(ore_mul(dom, ix, ix), poly(dom, {"0", "2*i", "1"}));
  EXPECT_EQ(ore_mul(dom, ix, ore_constant(dom, dom.one())), ix);
  EXPECT_TRUE(ore_mul(dom, ix, OrePolyOf<GaussianDomain>()).is_zero());
  EXPECT_THROW(ore_mul(dom, ix, ore_monomial(dom, dom.one(), 1, RingTag::YSigma)), PreconditionError);
}

TEST(OreMul, PureSigmaRingHasNoDerivationTerm) {
  const auto dom = gauss_conj(2);
  const auto y = ore_monomial(dom, dom.one(), 1, RingTag::YSigma);
  EXPECT_EQ(ore_mul(dom, y, ore_constant(dom, gi(0, 1), RingTag::YSigma)), poly(dom, {"0", "-i"}, RingTag::YSigma));
}

TEST(XnTimesA, Examples) {
  const auto dom = f3_shift();
  const auto t = dom.generator();
  EXPECT_EQ(xn_times_a(dom, 0, t), ore_constant(dom, t));
  EXPECT_EQ(xn_times_a(dom, 1, t), poly(dom, {"1", "t + 1"}));
  EXPECT_EQ(xn_times_a(dom, 2, t), poly(dom, {"0", "2", "t + 2"}));
}

TEST(RightCoefficients, Examples) {
  const auto dom = gauss_conj(2);
  // i x = x (-i) + 2
  EXPECT_EQ(right_coefficients(dom, ore_monomial(dom, gi(0, 1), 1)), (std::vector<GaussInt>{gi(2), gi(0, -1)}));
  EXPECT_EQ(right_coefficients(dom, ore_constant(dom, gi(3, 1))), (std::vector<GaussInt>{gi(3, 1)}));
  EXPECT_TRUE(right_coefficients(dom, OrePolyOf<GaussianDomain>()).empty());
}

TEST(ExtendedIdeal, Membership) {
  const auto f3 = f3_shift();
  const auto p = ideal_from_element(f3, f3.parse("t^3 - t"));
  EXPECT_TRUE(in_extended_ideal(f3, poly(f3, {"t^3 - t", "t^3 - t"}), p));
  EXPECT_FALSE(in_extended_ideal(f3, ore_monomial(f3, f3.one(), 1), p));
  EXPECT_THROW(in_extended_ideal(f3, ore_monomial(f3, f3.one(), 1), ideal_from_element(f3, f3.parse("t"))),
               PreconditionError);

  const auto g = gauss_conj(1);
  EXPECT_FALSE(in_extended_ideal(g, ore_monomial(g, gi(2, 1), 1), ideal_from_element(g, gi(5))));
  EXPECT_TRUE(in_extended_ideal(g, ore_monomial(g, gi(10, 5), 2), ideal_from_element(g, gi(5))));
  EXPECT_TRUE(in_extended_ideal(g, OrePolyOf<GaussianDomain>(), IdealOf<GaussianDomain>::zero()));
}

TEST(PureSigma, Examples) {
  const auto dom = gauss_conj(2);
  const GaussInt a = gi(0, -1);
  const auto x = ore_monomial(dom, dom.one(), 1);
  EXPECT_EQ(to_pure_sigma(dom, x, a), poly(dom, {"-i", "1"}, RingTag::YSigma));
  const auto xi = ore_mul(dom, x, ore_constant(dom, gi(0, 1)));
  const auto image = to_pure_sigma(dom, xi, a);
  EXPECT_EQ(image, poly(dom, {"1", "-i"}, RingTag::YSigma));
  const auto y_minus_i = poly(dom, {"-i", "1"}, RingTag::YSigma);
  EXPECT_EQ(image, ore_mul(dom, y_minus_i, ore_constant(dom, gi(0, 1), RingTag::YSigma)));
  EXPECT_EQ(to_pure_sigma(dom, ore_constant(dom, gi(4, 7)), a), ore_constant(dom, gi(4, 7), RingTag::YSigma));
  EXPECT_THROW(to_pure_sigma(dom, x, gi(1)), PreconditionError);
  EXPECT_THROW(from_pure_sigma(dom, x, a), PreconditionError);
}

TEST(Serialization, OrePolyRoundTrip) {
  const auto dom = f3_shift();
  const auto f = poly(dom, {"0", "1"});
  const auto j = ore_to_json(dom, f);
  EXPECT_EQ(j.dump(), R"({"ring":"x-sigma-delta","coeffs":["0 mod 3","1 mod 3"]})");
  EXPECT_EQ(ore_from_json(dom, j), f);
  Rng rng(4);
  for (int n = 0; n < 50; ++n) {
    const auto g = random_ore_poly(dom, rng, 5, 3, RingTag::YSigma);
    EXPECT_EQ(ore_from_json(dom, ore_to_json(dom, g)), g);
  }
}

template <class D>
void check_ring_laws(const D& dom, std::uint64_t seed, int samples) {
  Rng rng(seed);
  for (int n = 0; n < samples; ++n) {
    const auto f = random_ore_poly(dom, rng, 6, 2);
    const auto g = random_ore_poly(dom, rng, 6, 2);
    const auto h = random_ore_poly(dom, rng, 6, 2);
    const auto fg = ore_mul(dom, f, g);
    ASSERT_EQ(fg, naive_mul(dom, f, g));
    ASSERT_EQ(ore_mul(dom, fg, h), ore_mul(dom, f, ore_mul(dom, g, h)));
    ASSERT_EQ(ore_mul(dom, f, g + h), fg + ore_mul(dom, f, h));
    ASSERT_EQ(ore_mul(dom, f + g, h), ore_mul(dom, f, h) + ore_mul(dom, g, h));
    if (!f.is_zero() && !g.is_zero()) {
      ASSERT_EQ(fg.degree(), f.degree() + g.degree());
      ASSERT_EQ(fg.lead(), f.lead() * dom.sigma(g.lead(), f.degree()));
    }
  }
}

TEST(RingLaws, Gaussian) {
  check_ring_laws(gauss_conj(1), 1, 150);
  check_ring_laws(gauss_conj(2), 2, 150);
}

TEST(RingLaws, PolynomialDomains) {
  check_ring_laws(f3_shift(), 3, 150);
  check_ring_laws(testbeds::fp(5, 2, 1, "t + 3"), 4, 150);
  check_ring_laws(testbeds::qt(2, 0, "1"), 5, 40);
}

template <class D>
void check_xn_and_right(const D& dom, std::uint64_t seed) {
  Rng rng(seed);
  const auto x = ore_monomial(dom, dom.one(), 1);
  for (int n = 0; n < 60; ++n) {
    const auto a = dom.random_element(rng, 3);
    auto by_mul = ore_constant(dom, a);
    auto sigma_n = a;
    auto delta_n = a;
    for (std::size_t k = 0; k <= 8; ++k) {
      const auto e = xn_times_a(dom, k, a);
      ASSERT_EQ(e, by_mul);
      if (!a.is_zero()) {
        ASSERT_EQ(e.coeffs().size(), k + 1);
        ASSERT_EQ(e.coeffs().back(), sigma_n);
        ASSERT_EQ(e.coeffs().front(), delta_n);
      }
      by_mul = ore_mul(dom, x, by_mul);
      sigma_n = dom.sigma(sigma_n, 1);
      delta_n = dom.delta(delta_n);
    }
  }
  for (int n = 0; n < 200; ++n) {
    const auto f = random_ore_poly(dom, rng, 6, 3);
    const auto b = right_coefficients(dom, f);
    ASSERT_EQ(from_right_coefficients(dom, b), f);
    if (!f.is_zero()) {
      ASSERT_EQ(b.back(), dom.sigma(f.lead(), -static_cast<long>(f.degree())));
    }
  }
}

TEST(XnTimesA, EndpointsAndRightCoefficients) {
  check_xn_and_right(gauss_conj(2), 11);
  check_xn_and_right(f3_shift("t"), 12);
  check_xn_and_right(testbeds::fp(7, 3, 2, "t^2 + 1"), 13);
  check_xn_and_right(testbeds::qt(2, 0, "1"), 14);
}

template <class D>
void check_isomorphism(const D& dom, std::uint64_t seed, int samples) {
  const auto a = inner_witness(dom);
  ASSERT_TRUE(a.has_value());
  Rng rng(seed);
  for (int n = 0; n < samples; ++n) {
    const auto f = random_ore_poly(dom, rng, 4, 2);
    const auto g = random_ore_poly(dom, rng, 4, 2);
    const auto pf = to_pure_sigma(dom, f, *a);
    const auto pg = to_pure_sigma(dom, g, *a);
    ASSERT_EQ(to_pure_sigma(dom, f + g, *a), pf + pg);
    ASSERT_EQ(to_pure_sigma(dom, ore_mul(dom, f, g), *a), ore_mul(dom, pf, pg));
    ASSERT_EQ(pf.degree(), f.degree());
    ASSERT_EQ(from_pure_sigma(dom, pf, *a), f);
  }
}

TEST(PureSigma, HomomorphismLaws) {
  check_isomorphism(gauss_conj(2), 21, 100);
  check_isomorphism(gauss_conj(-4), 22, 100);
  check_isomorphism(f3_shift(), 23, 100);
  check_isomorphism(f3_shift("t^2 + 2"), 24, 100);
}
