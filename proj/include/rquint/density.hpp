#pragma once

// Squarefree values of factored polynomials G(t) at primes: rho_G(l^2),
// local obstructions, the truncated Euler product C_G and empirical N_G(X).

#include <cstdint>
#include <string>
#include <vector>

#include "rquint/factor_int.hpp"
#include "rquint/poly.hpp"

namespace rquint {

/// G(t) as a product of distinct primitive irreducible factors of degree
/// 1..3. Construction validates every invariant and throws
/// std::invalid_argument otherwise.
class FactoredPoly {
public:
    explicit FactoredPoly(std::vector<IntPoly> factors);

    const std::vector<IntPoly>& factors() const { return factors_; }
    int degree() const;
    IntPoly expand() const;
    Int eval(const Int& t) const;
    /// G(t) mod m for m < 2^32.
    std::uint64_t eval_mod(std::uint64_t t, std::uint64_t m) const;

private:
    std::vector<IntPoly> factors_;
};

/// Parses "c0,c1|c0,c1,c2|..." (ascending coefficients per factor).
FactoredPoly parse_factored(const std::string& text);

/// Irreducibility over Z for primitive polynomials of degree <= 3.
bool small_degree_irreducible(const IntPoly& p);

/// Number of units z mod l^2 with G(z) = 0 (mod l^2), by enumeration.
std::uint64_t rho_ell2(const FactoredPoly& G, std::uint64_t ell);

bool has_local_obstruction(const FactoredPoly& G, std::uint64_t ell);

/// Linear factors of G mod l counted with multiplicity.
unsigned linear_factor_count(const FactoredPoly& G, std::uint64_t ell);

struct ObstructionCandidate {
    std::uint64_t ell;
    unsigned linear_factors;  // N_l
    bool within_bound;        // l <= (N_l + 2) / 2
    bool obstructed;
    friend bool operator==(const ObstructionCandidate&, const ObstructionCandidate&) = default;
};

/// Every prime l <= (deg G + 2)/2 with its refined bound and verdict.
std::vector<ObstructionCandidate> obstruction_candidates(const FactoredPoly& G);

/// Primes at which G has a local obstruction.
std::vector<std::uint64_t> obstruction_scan(const FactoredPoly& G);

/// prod over primes l <= L of (1 - rho_G(l^2) / (l(l-1))).
mpq_class cg_truncated(const FactoredPoly& G, std::uint64_t L);

struct NgCount {
    std::uint64_t X;
    std::uint64_t count;
    std::uint64_t unknown;  // primes skipped after budget exhaustion
    bool certified;
    friend bool operator==(const NgCount&, const NgCount&) = default;
};

/// #{p <= X prime : G(p) squarefree}. Each prime gets its own budget.
NgCount ng_count(const FactoredPoly& G, std::uint64_t X, std::uint64_t budget = kDefaultBudget);

struct RhoEntry {
    std::uint64_t ell;
    std::uint64_t rho;
    std::uint64_t phi;  // l(l-1)
    friend bool operator==(const RhoEntry&, const RhoEntry&) = default;
};

struct DensityReport {
    std::vector<ObstructionCandidate> candidates;
    std::vector<std::uint64_t> obstruction_primes;
    std::vector<RhoEntry> rho_table;
    mpq_class cg;
    std::string cg_decimal;
    std::uint64_t truncation_bound;
    NgCount ng;
    bool certified;
    friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

DensityReport density_report(const FactoredPoly& G, std::uint64_t L, std::uint64_t X,
                             std::uint64_t budget = kDefaultBudget);

std::string decimal_string(const mpq_class& v, int digits);

}  // namespace rquint
