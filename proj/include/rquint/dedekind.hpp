#pragma once

// Dedekind's index criterion per prime and monogenicity verdicts for
// F_{n,A,B}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rquint/factor_int.hpp"
#include "rquint/modpoly.hpp"
#include "rquint/quintinomial.hpp"

namespace rquint {

enum class LiftConvention { Canonical, Symmetric };

struct DedekindOutcome {
    std::uint64_t q;
    bool divides_index;
    ModPoly gcd_witness;  // gcd(F mod q, h1 mod q, h2 mod q)
    IntPoly h1, h2, F;    // F = (h1 h2 - T) / q
    friend bool operator==(const DedekindOutcome&, const DedekindOutcome&) = default;
};

/// Runs the criterion for a monic T the caller certifies irreducible over Q.
/// h1 is the product of lifts of the distinct irreducible factors of T mod q,
/// h2 the lift of (T mod q) / (h1 mod q).
DedekindOutcome dedekind_check(const IntPoly& T, std::uint64_t q, std::uint64_t seed = 0,
                               LiftConvention lift = LiftConvention::Canonical);

enum class MonoStatus { Monogenic, NotMonogenic, Reducible, Undecided };

const char* to_string(MonoStatus s);
MonoStatus mono_status_from_string(const std::string& s);

struct MonogenicityVerdict {
    MonoStatus status = MonoStatus::Undecided;
    std::vector<std::uint64_t> obstruction_primes;
    std::vector<std::uint64_t> checked_primes;
    /// One outcome per checked prime, in checked_primes order.
    std::vector<DedekindOutcome> outcomes;
    std::optional<ReducibilityCert> certificate;
    std::string reason;
    /// Undecided because a factorization ran out of budget (as opposed to
    /// an input outside the supported range).
    bool budget_exhausted = false;
    friend bool operator==(const MonogenicityVerdict&, const MonogenicityVerdict&) = default;
};

/// Monogenicity of F_{n,A,B}: irreducibility first, then the criterion at
/// every prime whose square divides the closed-form discriminant. The
/// primes come from factoring W1, W2, W3 (never the discriminant itself).
MonogenicityVerdict is_monogenic(const QuinParams& params, std::uint64_t seed = 0,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace rquint
