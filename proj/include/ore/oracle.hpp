#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "ore/domain.hpp"
#include "ore/errors.hpp"
#include "ore/ideal.hpp"
#include "ore/prime_structure.hpp"

namespace ore {

// Brute-force reference checks over bounded instances. Everything here works
// on principal generators: stability is g | sigma(g) and g | delta(g),
// containment (h) ⊆ (g) is g | h, products multiply generators. None of the
// factored-form shortcuts from prime_structure are used.

struct OracleBudget {
  mpz_class norm_bound = 27;
  unsigned max_exponent = 3;
  std::size_t sample_count = 500;
  std::uint64_t seed = 0;
};

template <class D>
concept OracleDomain = std::same_as<D, GaussianDomain> || std::same_as<D, FpPolyDomain>;

namespace detail {

// One generator per nonzero ideal of norm <= bound, in increasing norm.
inline std::vector<GaussInt> oracle_generators(const GaussianDomain&, const mpz_class& bound) {
  std::vector<std::pair<mpz_class, GaussInt>> keyed;
  for (mpz_class a = 1; a * a <= bound; ++a) {
    for (mpz_class b = 0; a * a + b * b <= bound; ++b) keyed.emplace_back(a * a + b * b, GaussInt(a, b));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<GaussInt> out;
  for (auto& [n, g] : keyed) out.push_back(std::move(g));
  return out;
}

// All monic polynomials of degree d with q^d <= bound.
inline std::vector<FpPoly> oracle_generators(const FpPolyDomain& dom, const mpz_class& bound) {
  const auto& field = dom.field();
  const std::uint64_t q = field.modulus();
  std::vector<FpPoly> out;
  mpz_class qd = 1;
  for (std::size_t d = 0; qd <= bound; ++d, qd *= q) {
    std::vector<std::uint64_t> low(d, 0);
    for (;;) {
      std::vector<std::uint64_t> c = low;
      c.push_back(1);
      out.emplace_back(field, std::move(c));
      std::size_t k = 0;
      while (k < d && ++low[k] == q) low[k++] = 0;
      if (k == d) break;
    }
  }
  return out;
}

inline mpz_class oracle_norm(const GaussianDomain&, const GaussInt& g) { return g.norm(); }

inline mpz_class oracle_norm(const FpPolyDomain& dom, const FpPoly& g) {
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), dom.field().modulus(), static_cast<unsigned long>(g.degree()));
  return n;
}

}  // namespace detail

template <class E>
struct OracleLargest {
  Ideal<E> ideal;
  bool complete = true;  // false when the true answer may lie beyond the enumeration
};

template <OracleDomain D>
class Oracle {
 public:
  using Element = typename D::Element;

  struct Entry {
    Element generator;  // zero for the ZERO ideal
    mpz_class norm;     // 0 for ZERO
    IdealOf<D> ideal;
  };

  Oracle(const D& dom, OracleBudget budget) : dom_(dom), budget_(std::move(budget)) {
    if (budget_.norm_bound < 1) throw PreconditionError("oracle norm bound must be positive");
    if (budget_.max_exponent < 1) throw PreconditionError("oracle exponent cap must be positive");
    candidates_ = detail::oracle_generators(dom_, budget_.norm_bound);
    sieve_small_primes();
    stable_.push_back(Entry{dom_.zero(), 0, IdealOf<D>::zero()});
    for (const auto& g : candidates_) {
      if (within_cap(g) && stable_generator(g)) {
        stable_.push_back(Entry{g, detail::oracle_norm(dom_, g), ideal_from_element(dom_, g)});
      }
    }
  }

  const D& domain() const { return dom_; }
  const OracleBudget& budget() const { return budget_; }
  // Generators of every nonzero ideal of norm <= bound (exponent cap not applied).
  const std::vector<Element>& candidates() const { return candidates_; }
  const std::vector<Entry>& stable_entries() const { return stable_; }

  std::vector<IdealOf<D>> enumerate_stable_ideals() const {
    std::vector<IdealOf<D>> out;
    for (const auto& e : stable_) out.push_back(e.ideal);
    return out;
  }

  bool within_budget(const IdealOf<D>& ideal) const {
    if (ideal.is_zero()) return true;
    for (const auto& f : ideal.factors()) {
      if (f.exp > budget_.max_exponent) return false;
    }
    return detail::oracle_norm(dom_, ideal_generator(dom_, ideal)) <= budget_.norm_bound;
  }

  bool stable_generator(const Element& g) const {
    if (g.is_zero()) return true;
    return dom_.divides(g, dom_.sigma(g, 1)) && dom_.divides(g, dom_.sigma(g, -1)) && dom_.divides(g, dom_.delta(g));
  }

  // I proper, stable, and JK ⊆ I forces J ⊆ I or K ⊆ I over all enumerated
  // stable J, K. Restricting to the enumeration loses nothing: J + I and
  // K + I are stable, divide I and still multiply into I.
  bool is_sigma_delta_prime(const IdealOf<D>& ideal) const {
    require_in_budget(ideal);
    const Element g = ideal_generator(dom_, ideal);
    if (!ideal.is_zero() && dom_.is_unit(g)) return false;
    if (!stable_generator(g)) return false;
    for (const auto& j : stable_) {
      if (dom_.divides(g, j.generator)) continue;
      for (const auto& k : stable_) {
        if (dom_.divides(g, k.generator)) continue;
        if (dom_.divides(g, j.generator * k.generator)) return false;
      }
    }
    return true;
  }

  // Largest enumerated stable ideal inside the prime p: the contained one of
  // least norm, checked to contain every other contained one.
  OracleLargest<Element> largest_stable(const IdealOf<D>& p) const {
    if (!p.is_prime()) throw PreconditionError("oracle largest_stable expects a nonzero prime ideal");
    const Element g = ideal_generator(dom_, p);
    const Entry* best = nullptr;
    for (const auto& e : stable_) {
      if (e.generator.is_zero() || !dom_.divides(g, e.generator)) continue;
      if (best == nullptr || e.norm < best->norm) best = &e;
    }
    if (best == nullptr) return {IdealOf<D>::zero(), false};
    for (const auto& e : stable_) {
      if (dom_.divides(g, e.generator) && !dom_.divides(best->generator, e.generator)) {
        throw Error("oracle: stable ideals under p have no largest member");
      }
    }
    return {best->ideal, true};
  }

  // No enumerated nonzero (sigma, delta)-prime lies strictly inside p.
  bool minimality_check(const IdealOf<D>& p) const {
    if (!is_sigma_delta_prime(p)) throw PreconditionError("oracle minimality check expects a (sigma, delta)-prime");
    if (p.is_zero()) return true;
    const Element g = ideal_generator(dom_, p);
    for (const auto& e : stable_) {
      if (e.generator.is_zero() || !dom_.divides(g, e.generator) || dom_.divides(e.generator, g)) continue;
      if (is_sigma_delta_prime(e.ideal)) return false;
    }
    return true;
  }

  // Independent confirmation of a classifier verdict; nullopt when the
  // verdict is outside what the enumeration can judge.
  std::optional<bool> confirms(const Verdict<Element>& v) const {
    if (!within_budget(v.p)) return std::nullopt;
    const Element g = ideal_generator(dom_, v.p);
    if (std::holds_alternative<ExtensionMinimal<Element>>(v.kind)) {
      return is_sigma_delta_prime(v.p) && minimality_check(v.p);
    }
    if (const auto* nm = std::get_if<NotMinimal<Element>>(&v.kind)) {
      if (!within_budget(nm->witness)) return std::nullopt;
      const Element w = ideal_generator(dom_, nm->witness);
      const bool inside = !w.is_zero() && dom_.divides(g, w) && !dom_.divides(w, g) && stable_generator(w);
      if (!inside) return false;
      if (v.branch == ContractionCase::SigmaDeltaPrime) return is_sigma_delta_prime(nm->witness);
      const auto best = largest_stable(v.p);
      if (!best.complete) return std::nullopt;
      return best.ideal == nm->witness;
    }
    if (std::holds_alternative<ContractionMinimal<Element>>(v.kind)) {
      // Every orbit is finite here, so a nonzero stable ideal always sits under p.
      return false;
    }
    if (std::holds_alternative<OutsideDichotomy>(v.kind)) {
      return dom_.divides(g, dom_.sigma(g, 1)) && !dom_.divides(g, dom_.delta(g));
    }
    return std::nullopt;
  }

 private:
  void require_in_budget(const IdealOf<D>& ideal) const {
    if (!within_budget(ideal)) {
      throw PreconditionError("ideal " + format_ideal(dom_, ideal) + " lies outside the oracle budget");
    }
  }

  // Irreducibles whose (cap+1)-th power still fits under the bound.
  void sieve_small_primes() {
    for (const auto& g : candidates_) {
      if (dom_.is_unit(g)) continue;
      const mpz_class n = detail::oracle_norm(dom_, g);
      mpz_class top;
      mpz_pow_ui(top.get_mpz_t(), n.get_mpz_t(), budget_.max_exponent + 1);
      if (top > budget_.norm_bound) break;
      const bool composite = std::any_of(small_primes_.begin(), small_primes_.end(),
                                         [&](const Element& p) { return dom_.divides(p, g); });
      if (!composite) small_primes_.push_back(g);
    }
  }

  bool within_cap(const Element& g) const {
    for (const auto& p : small_primes_) {
      if (dom_.divides(element_pow(dom_, p, budget_.max_exponent + 1), g)) return false;
    }
    return true;
  }

  D dom_;
  OracleBudget budget_;
  std::vector<Element> candidates_;
  std::vector<Element> small_primes_;
  std::vector<Entry> stable_;
};

template <OracleDomain D>
std::vector<IdealOf<D>> enumerate_stable_ideals(const D& dom, const OracleBudget& budget) {
  return Oracle<D>(dom, budget).enumerate_stable_ideals();
}

template <OracleDomain D>
bool brute_is_sigma_delta_prime(const D& dom, const IdealOf<D>& ideal, const OracleBudget& budget) {
  return Oracle<D>(dom, budget).is_sigma_delta_prime(ideal);
}

template <OracleDomain D>
OracleLargest<typename D::Element> brute_largest_stable(const D& dom, const IdealOf<D>& p,
                                                        const OracleBudget& budget) {
  return Oracle<D>(dom, budget).largest_stable(p);
}

template <OracleDomain D>
bool brute_minimality_check(const D& dom, const IdealOf<D>& p, const OracleBudget& budget) {
  return Oracle<D>(dom, budget).minimality_check(p);
}

}  // namespace ore
