#pragma once

// Reference implementations used to cross-check the main library. Each one
// takes the slow, obvious route and shares no algorithmic code with the
// routines it checks.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rquint/poly.hpp"

namespace rquint::oracle {

/// Determinant of the Sylvester matrix by Bareiss elimination.
Int sylvester_resultant(const IntPoly& f, const IntPoly& g);
/// (-1)^(d(d-1)/2) Res(f, f') / lc(f) through sylvester_resultant.
Int discriminant(const IntPoly& f);

/// Kronecker's method: a monic factor of the monic f with degree in
/// [1, deg f / 2], or nullopt when f is irreducible over Z.
std::optional<IntPoly> kronecker_factor(const IntPoly& f);

/// Polynomials over F_q as plain coefficient vectors (ascending, trimmed).
using SmallPoly = std::vector<std::uint64_t>;

/// Factorization of a monic polynomial over F_q for small q by trial
/// division with every monic polynomial in increasing degree. Returns
/// (factor, multiplicity) pairs in the order found.
std::vector<std::pair<SmallPoly, unsigned>> trial_factor(SmallPoly f, std::uint64_t q);

/// Irreducibility over F_q by exhaustive search for a factor of degree
/// at most deg f / 2.
bool irreducible_mod(const SmallPoly& f, std::uint64_t q);

/// #{z mod l^2 : l does not divide z, G(z) = 0 mod l^2} with G evaluated
/// over Z.
std::uint64_t rho_enumerate(const IntPoly& G, std::uint64_t ell);

/// Roots of G mod l counted with multiplicity (by repeated synthetic
/// division); G mod l must be nonzero.
unsigned roots_with_multiplicity(const IntPoly& G, std::uint64_t ell);

/// Squarefreeness of a nonzero m with |m| < 10^12 by trial division.
bool squarefree_trial(const Int& m);

}  // namespace rquint::oracle
