#pragma once

// Budgeted integer factorization: trial division to 10^6, then Brent's
// variant of Pollard rho with a shared iteration budget.

#include <cstdint>
#include <optional>
#include <vector>

#include "rquint/poly.hpp"

namespace rquint {

struct PrimePower {
    Int prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct IntFactorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // ascending primes
    /// 1 when complete; otherwise the composite part left unsplit when the
    /// budget ran out.
    Int cofactor = 1;

    bool complete() const { return cofactor == 1; }
};

inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

/// Factors m as far as the rho budget allows. Throws on m == 0.
IntFactorization factor_integer_partial(const Int& m, std::uint64_t budget = kDefaultBudget);

/// Complete factorization or nullopt on budget exhaustion.
std::optional<IntFactorization> factor_integer(const Int& m, std::uint64_t budget = kDefaultBudget);

/// Whether no prime square divides m; nullopt when undecidable within the
/// budget. A square factor found before exhaustion still settles `false`.
std::optional<bool> squarefree(const Int& m, std::uint64_t budget = kDefaultBudget);

}  // namespace rquint
