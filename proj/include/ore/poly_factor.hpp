#pragma once

#include <utility>
#include <vector>

#include "ore/field.hpp"
#include "ore/upoly.hpp"

namespace ore {

using FpPoly = UPoly<PrimeField>;
using QPoly = UPoly<RationalField>;

namespace fp {

// Rabin's test.
bool is_irreducible(const FpPoly& f);

// Monic irreducible factors with multiplicities, sorted; f must be nonzero.
// Squarefree split, distinct-degree split, then Cantor-Zassenhaus.
std::vector<std::pair<FpPoly, unsigned>> factor(const FpPoly& f);

// Every monic irreducible of degree `deg`, in ascending order.
std::vector<FpPoly> monic_irreducibles(const PrimeField& field, unsigned deg);

}  // namespace fp

namespace qpoly {

// Content extraction plus rational-root splitting. Leftover factors of
// degree 2 or 3 are irreducible (no rational root); anything larger throws
// BudgetExceeded.
std::vector<std::pair<QPoly, unsigned>> factor(const QPoly& f);

bool is_irreducible(const QPoly& f);

// max(|num|, den) over all coefficients.
mpz_class height(const QPoly& f);

}  // namespace qpoly

}  // namespace ore
