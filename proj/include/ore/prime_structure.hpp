#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ore/domain.hpp"
#include "ore/errors.hpp"
#include "ore/ideal.hpp"
#include "ore/ore_poly.hpp"

namespace ore {

enum class StabilityMode { Sigma, Delta, SigmaDelta };

// Stability decided on the factored form. For a principal I = (g),
// delta(r g) = sigma(r) delta(g) + delta(r) g, so delta(I) ⊆ I iff delta(g) ∈ I.
template <SkewDomain D>
bool is_stable_ideal(const D& dom, const IdealOf<D>& ideal, StabilityMode mode) {
  if (ideal.is_zero() || ideal.is_unit()) return true;
  const bool want_sigma = mode != StabilityMode::Delta;
  const bool want_delta = mode != StabilityMode::Sigma;
  if (want_sigma && !(ideal_sigma(dom, ideal, 1) == ideal)) return false;
  if (want_delta && !ideal_has(dom, ideal, dom.delta(ideal_generator(dom, ideal)))) return false;
  return true;
}

struct Undecided {
  std::size_t budget = 0;
  std::string stage;
};

template <class E>
using StableResult = std::variant<Ideal<E>, Undecided>;

namespace detail {

// One descending step I <- {a ∈ I : sigma(a), sigma^{-1}(a), delta(a) ∈ I}.
// With I = (g) and g' = g / gcd(g, delta(g)), the delta condition on r g reads
// sigma(r) ∈ (g'), giving the ideal I * sigma^{-1}((g')).
template <SkewDomain D>
IdealOf<D> refine_step(const D& dom, const IdealOf<D>& ideal) {
  const auto g = ideal_generator(dom, ideal);
  const auto dg = dom.delta(g);
  std::vector<PrimePower<typename D::Element>> quotient;
  for (const auto& f : ideal.factors()) {
    const unsigned shared = dg.is_zero() ? f.exp : valuation(dom, dg, f.prime, f.exp);
    quotient.push_back({f.prime, f.exp - shared});
  }
  const auto delta_part =
      ideal_product(ideal, ideal_sigma(dom, IdealOf<D>::from_factors(std::move(quotient)), -1));
  auto next = ideal_intersect(ideal, ideal_sigma(dom, ideal, 1));
  next = ideal_intersect(next, ideal_sigma(dom, ideal, -1));
  return ideal_intersect(next, delta_part);
}

}  // namespace detail

// Largest (sigma, delta)-stable ideal inside the prime (p). An infinite
// orbit leaves only ZERO: a nonzero ideal has finitely many prime divisors
// and a sigma-stable one would need the whole orbit. A finite orbit starts
// the descending refinement at the orbit intersection.
template <SkewDomain D>
StableResult<typename D::Element> largest_stable_below_prime(const D& dom, const typename D::Element& p,
                                                             std::size_t budget) {
  const auto orbit = sigma_orbit(dom, p, budget);
  if (orbit.kind == OrbitKind::Infinite) return IdealOf<D>::zero();
  if (orbit.kind == OrbitKind::Unknown) return Undecided{budget, "sigma-orbit"};
  auto current = orbit_ideal<D>(orbit);
  for (std::size_t step = 0; step < budget; ++step) {
    auto next = detail::refine_step(dom, current);
    if (next == current) {
      const auto prime = IdealOf<D>::from_factors({{p, 1}});
      if (!is_stable_ideal(dom, current, StabilityMode::SigmaDelta) || !ideal_contains(prime, current)) {
        throw Error("largest stable ideal failed certification");
      }
      return current;
    }
    current = std::move(next);
  }
  return Undecided{budget, "stable-refinement"};
}

template <SkewDomain D>
StableResult<typename D::Element> largest_stable_ideal(const D& dom, const IdealOf<D>& p, std::size_t budget) {
  if (!p.is_prime()) throw PreconditionError("largest_stable_ideal expects a nonzero prime ideal");
  return largest_stable_below_prime(dom, p.factors().front().prime, budget);
}

// Nonzero I is (sigma, delta)-prime iff I = O^s for a single finite
// sigma-orbit product O and the least s >= 1 with O^s delta-stable, i.e. iff
// I is the largest stable ideal under one of its primes. Throws
// BudgetExceeded when the orbit or the refinement runs out of budget.
template <SkewDomain D>
bool is_sigma_delta_prime(const D& dom, const IdealOf<D>& ideal, std::size_t budget) {
  if (!is_stable_ideal(dom, ideal, StabilityMode::SigmaDelta)) return false;
  if (ideal.is_zero()) return true;
  if (ideal.is_unit()) return false;
  const auto& first = ideal.factors().front();
  const auto orbit = sigma_orbit(dom, first.prime, budget);
  if (orbit.kind == OrbitKind::Unknown) throw BudgetExceeded("sigma-orbit budget exhausted");
  if (orbit.kind == OrbitKind::Infinite) return false;
  if (orbit.primes.size() != ideal.factors().size()) return false;
  for (const auto& q : orbit.primes) {
    if (ideal.exponent_of(q) != first.exp) return false;
  }
  const auto m = largest_stable_below_prime(dom, first.prime, budget);
  if (std::holds_alternative<Undecided>(m)) throw BudgetExceeded("stable refinement budget exhausted");
  return std::get<IdealOf<D>>(m) == ideal;
}

// sigma-prime ideals (Sigma = {sigma}) are exactly the finite orbit intersections.
template <SkewDomain D>
bool is_sigma_prime(const D& dom, const IdealOf<D>& ideal, std::size_t budget) {
  if (ideal.is_zero()) return true;
  if (ideal.is_unit() || !is_stable_ideal(dom, ideal, StabilityMode::Sigma)) return false;
  const auto orbit = sigma_orbit(dom, ideal.factors().front().prime, budget);
  if (orbit.kind == OrbitKind::Unknown) throw BudgetExceeded("sigma-orbit budget exhausted");
  return orbit.kind == OrbitKind::Finite && orbit_ideal<D>(orbit) == ideal;
}

// ---------------------------------------------------------------- verdicts

template <class E>
struct ExtensionMinimal {
  Ideal<E> p;  // P = p[x; sigma, delta] is a minimal prime of R
};

template <class E>
struct ContractionMinimal {
  Ideal<E> p;  // every prime P with P ∩ D = p is minimal
};

template <class E>
struct NotMinimal {
  Ideal<E> witness;  // nonzero, stable, strictly inside p
  bool witness_is_sigma_delta_prime = false;
};

struct OutsideDichotomy {
  std::string reason;
};

template <class E>
using VerdictKind = std::variant<ExtensionMinimal<E>, ContractionMinimal<E>, NotMinimal<E>, OutsideDichotomy, Undecided>;

enum class ContractionCase { SigmaDeltaPrime, PrimeMovedBySigma, PrimeFixedBySigma };

inline const char* to_string(ContractionCase c) {
  switch (c) {
    case ContractionCase::SigmaDeltaPrime:
      return "sigma-delta-prime";
    case ContractionCase::PrimeMovedBySigma:
      return "prime-moved-by-sigma";
    case ContractionCase::PrimeFixedBySigma:
      return "prime-fixed-by-sigma";
  }
  return "?";
}

template <class E>
struct Verdict {
  Ideal<E> p;
  ContractionCase branch = ContractionCase::SigmaDeltaPrime;
  VerdictKind<E> kind;
  std::size_t budget = 0;
};

template <class E>
const char* verdict_name(const VerdictKind<E>& v) {
  static constexpr const char* kNames[] = {"ExtensionMinimal", "ContractionMinimal", "NotMinimal",
                                           "OutsideDichotomy", "Undecided"};
  return kNames[v.index()];
}

// Classifies a nonzero contraction p = P ∩ D. Minimality is judged over
// nonzero (sigma, delta)-primes.
template <SkewDomain D>
Verdict<typename D::Element> classify_contraction(const D& dom, const IdealOf<D>& p, std::size_t budget) {
  using E = typename D::Element;
  if (p.is_zero()) throw PreconditionError("classify_contraction: the contraction must be nonzero");
  if (p.is_unit()) throw PreconditionError("classify_contraction: the unit ideal is not a contraction of a prime");
  Verdict<E> v{p, ContractionCase::SigmaDeltaPrime, Undecided{budget, ""}, budget};

  bool sd_prime = false;
  try {
    sd_prime = is_sigma_delta_prime(dom, p, budget);
  } catch (const BudgetExceeded&) {
    v.kind = Undecided{budget, "sigma-delta-prime test"};
    return v;
  }

  if (sd_prime) {
    // A nonzero (sigma, delta)-prime below p is the largest stable ideal under
    // one of its primes; any such ideal inside p uses the primes of p.
    for (const auto& f : p.factors()) {
      const auto m = largest_stable_below_prime(dom, f.prime, budget);
      if (std::holds_alternative<Undecided>(m)) {
        v.kind = std::get<Undecided>(m);
        return v;
      }
      const auto& q = std::get<IdealOf<D>>(m);
      if (!q.is_zero() && !(q == p) && ideal_contains(p, q)) {
        v.kind = NotMinimal<E>{q, true};
        return v;
      }
    }
    v.kind = ExtensionMinimal<E>{p};
    return v;
  }

  if (!p.is_prime()) {
    throw PreconditionError("classify_contraction: " + format_ideal(dom, p) +
                            " is neither (sigma, delta)-prime nor prime");
  }
  if (!(ideal_sigma(dom, p, 1) == p)) {
    v.branch = ContractionCase::PrimeMovedBySigma;
    const auto m = largest_stable_ideal(dom, p, budget);
    if (std::holds_alternative<Undecided>(m)) {
      v.kind = std::get<Undecided>(m);
    } else if (std::get<IdealOf<D>>(m).is_zero()) {
      v.kind = ContractionMinimal<E>{p};
    } else {
      const auto& w = std::get<IdealOf<D>>(m);
      bool w_prime = false;
      try {
        w_prime = is_sigma_delta_prime(dom, w, budget);
      } catch (const BudgetExceeded&) {
      }
      v.kind = NotMinimal<E>{w, w_prime};
    }
    return v;
  }
  v.branch = ContractionCase::PrimeFixedBySigma;
  v.kind = OutsideDichotomy{"sigma(p) = p but p is not delta-stable; neither case of the contraction dichotomy applies"};
  return v;
}

// Checks the obligations a verdict carries; returns an empty string when they hold.
template <SkewDomain D>
std::string validate_verdict(const D& dom, const Verdict<typename D::Element>& v) {
  using E = typename D::Element;
  if (const auto* nm = std::get_if<NotMinimal<E>>(&v.kind)) {
    if (nm->witness.is_zero()) return "witness is zero";
    if (!is_stable_ideal(dom, nm->witness, StabilityMode::SigmaDelta)) return "witness is not stable";
    if (!ideal_contains(v.p, nm->witness) || nm->witness == v.p) return "witness not strictly inside p";
    if (v.branch == ContractionCase::SigmaDeltaPrime && !nm->witness_is_sigma_delta_prime) {
      return "witness is not (sigma, delta)-prime";
    }
  } else if (std::holds_alternative<ExtensionMinimal<E>>(v.kind)) {
    if (!is_sigma_delta_prime(dom, v.p, v.budget)) return "ExtensionMinimal on a non-(sigma, delta)-prime";
  } else if (std::holds_alternative<ContractionMinimal<E>>(v.kind)) {
    if (!v.p.is_prime() || ideal_sigma(dom, v.p, 1) == v.p) return "ContractionMinimal needs a prime moved by sigma";
    const auto m = largest_stable_ideal(dom, v.p, v.budget);
    if (!std::holds_alternative<IdealOf<D>>(m) || !std::get<IdealOf<D>>(m).is_zero()) {
      return "largest stable ideal under p is not zero";
    }
  } else if (std::holds_alternative<OutsideDichotomy>(v.kind)) {
    if (!v.p.is_prime() || !(ideal_sigma(dom, v.p, 1) == v.p) ||
        is_stable_ideal(dom, v.p, StabilityMode::Delta)) {
      return "OutsideDichotomy needs a sigma-fixed prime that is not delta-stable";
    }
  }
  return {};
}

// ---------------------------------------------------------------- inner case

template <class E>
struct MinimalPrimesInner {
  E witness;                  // a with delta(b) = ab - sigma(b)a
  std::vector<Ideal<E>> primes;  // sigma-primes p; each p[x; sigma, delta] is a minimal prime of R
  std::string note;
};

// sigma-prime ideals of norm <= bound, as single-orbit intersections.
template <SkewDomain D>
MinimalPrimesInner<typename D::Element> minimal_primes_inner(const D& dom, const mpz_class& norm_bound,
                                                             std::size_t budget = 4096) {
  if (dom.sigma_is_identity()) throw PreconditionError("minimal_primes_inner needs sigma != identity");
  const auto a = inner_witness(dom);
  if (!a) throw PreconditionError("minimal_primes_inner needs an inner sigma-derivation");
  MinimalPrimesInner<typename D::Element> out{*a, {}, {}};
  for (const auto& p : enumerate_primes(dom, norm_bound)) {
    const auto orbit = sigma_orbit(dom, p, budget);
    if (orbit.kind == OrbitKind::Unknown) throw BudgetExceeded("sigma-orbit budget exhausted");
    if (orbit.kind != OrbitKind::Finite) continue;
    auto ideal = orbit_ideal<D>(orbit);
    if (ideal_norm(dom, ideal) > norm_bound) continue;
    if (std::find(out.primes.begin(), out.primes.end(), ideal) == out.primes.end()) {
      out.primes.push_back(std::move(ideal));
    }
  }
  sort_ideals(dom, out.primes);
  out.note =
      "the nonzero primes of R with zero contraction to D are also minimal; they are not enumerated here";
  return out;
}

// ---------------------------------------------------------------- falsifier

template <class E>
struct FalsifyWitness {
  OrePoly<E> f;
  OrePoly<E> g;
  E closure_f;  // generator of the smallest stable ideal J holding the coefficients of f
  E closure_g;  // likewise K for g; J K ⊆ p certifies f R g ⊆ pR
  std::size_t sample = 0;
};

template <class E>
struct FalsifyResult {
  std::optional<FalsifyWitness<E>> witness;
  std::size_t pairs_tested = 0;
  std::size_t middles_checked = 0;
};

// Generator of the smallest (sigma, delta)-stable ideal containing `elems`:
// the ascending chain g <- gcd(g, sigma(g), sigma^{-1}(g), delta(g)) stops
// because D is noetherian.
template <SkewDomain D>
typename D::Element stable_closure(const D& dom, const std::vector<typename D::Element>& elems) {
  auto g = dom.zero();
  for (const auto& e : elems) g = dom.gcd(g, e);
  if (g.is_zero()) return g;
  for (;;) {
    auto next = dom.gcd(g, dom.sigma(g, 1));
    next = dom.gcd(next, dom.sigma(g, -1));
    next = dom.gcd(next, dom.delta(g));
    if (next == g) return g;
    g = std::move(next);
  }
}

namespace detail {

template <SkewDomain D>
bool coefficients_in(const D& dom, const OrePolyOf<D>& f, const IdealOf<D>& p) {
  for (const auto& c : f.coeffs()) {
    if (!ideal_has(dom, p, c)) return false;
  }
  return true;
}

}  // namespace detail

// Randomized search for f, g ∉ pR with f R g ⊆ pR, refuting primality of pR.
// Candidates f, g are left multiples of divisors of p; a pair survives the
// monomial filter f (c x^k) g ∈ pR and is reported only with the certificate.
template <SkewDomain D>
FalsifyResult<typename D::Element> extend_and_falsify(const D& dom, const IdealOf<D>& p, std::size_t samples,
                                                      std::uint64_t seed, std::size_t budget = 4096) {
  using E = typename D::Element;
  if (!is_stable_ideal(dom, p, StabilityMode::SigmaDelta)) {
    throw PreconditionError("extend_and_falsify expects a (sigma, delta)-stable ideal");
  }
  FalsifyResult<E> out;
  if (p.is_unit()) return out;

  // Group the primes of p by sigma-orbit.
  std::vector<std::vector<PrimePower<E>>> orbits;
  for (const auto& f : p.factors()) {
    bool placed = false;
    for (auto& grp : orbits) {
      const auto orbit = sigma_orbit(dom, grp.front().prime, budget);
      if (std::find(orbit.primes.begin(), orbit.primes.end(), f.prime) != orbit.primes.end()) {
        grp.push_back(f);
        placed = true;
        break;
      }
    }
    if (!placed) orbits.push_back({f});
  }

  const auto gen = ideal_generator(dom, p);
  std::vector<E> middles = dom.residue_basis(gen.is_zero() ? dom.one() : gen);
  Rng rng(seed);

  auto draw_divisor = [&]() {
    auto d = dom.one();
    const bool per_orbit = coin(rng);
    for (const auto& grp : orbits) {
      unsigned top = 0;
      for (const auto& f : grp) top = std::max(top, f.exp);
      const auto shared = static_cast<unsigned>(uniform_int(rng, 0, top));
      for (const auto& f : grp) {
        const unsigned j = per_orbit ? std::min(shared, f.exp) : static_cast<unsigned>(uniform_int(rng, 0, f.exp));
        d = d * element_pow(dom, f.prime, j);
      }
    }
    return d;
  };
  auto draw_outside = [&]() -> std::optional<OrePolyOf<D>> {
    for (int attempt = 0; attempt < 32; ++attempt) {
      auto f = random_ore_poly(dom, rng, 4, 2).left_scale(draw_divisor());
      if (!f.is_zero() && !detail::coefficients_in(dom, f, p)) return f;
    }
    return std::nullopt;
  };

  for (std::size_t s = 0; s < samples; ++s) {
    auto f = draw_outside();
    auto g = draw_outside();
    if (!f || !g) continue;
    ++out.pairs_tested;
    bool all_in = true;
    for (std::size_t k = 0; k <= 2 && all_in; ++k) {
      for (const auto& c : middles) {
        ++out.middles_checked;
        const auto prod = ore_mul(dom, ore_mul(dom, *f, ore_monomial(dom, c, k)), *g);
        if (!detail::coefficients_in(dom, prod, p)) {
          all_in = false;
          break;
        }
      }
    }
    if (!all_in) continue;
    const auto cf = stable_closure(dom, f->coeffs());
    const auto cg = stable_closure(dom, g->coeffs());
    if (ideal_has(dom, p, cf * cg)) {
      out.witness = FalsifyWitness<E>{*f, *g, cf, cg, s};
      return out;
    }
  }
  return out;
}

}  // namespace ore
