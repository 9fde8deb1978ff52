#pragma once

#include <variant>

#include "ore/domain.hpp"
#include "ore/serialize.hpp"

namespace ore {

using AnyDomain = std::variant<GaussianDomain, FpPolyDomain, QPolyDomain>;

// Domain description, e.g.
//   {"kind": "GaussianIntegers", "sigma": "conjugation", "delta": "2"}
//   {"kind": "PolyOverFiniteField", "modulus": 3,
//    "sigma": {"a": "1 mod 3", "b": "1 mod 3"}, "delta": "1 mod 3"}
//   {"kind": "PolyOverRationals", "sigma": {"a": "2", "b": "0"}, "delta": "1"}
// For Z[i] "delta" is d = delta(i); for k[t] it is h = delta(t).
// Every failure, malformed scalars included, is reported as DomainError.
AnyDomain build_domain(const Json& spec);

// Canonical description; build_domain(describe(d)) rebuilds d.
Json describe(const AnyDomain& dom);

}  // namespace ore
