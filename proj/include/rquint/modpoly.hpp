#pragma once

// Polynomials over a prime field F_q (q < 2^64) and their complete
// factorization: squarefree decomposition, distinct-degree and
// equal-degree splitting.

#include <cstdint>
#include <utility>
#include <vector>

#include "rquint/poly.hpp"

namespace rquint {

class ModPoly {
public:
    /// Zero polynomial over F_q; throws std::invalid_argument unless q is prime.
    explicit ModPoly(std::uint64_t q);
    /// Coefficients are reduced into [0, q).
    ModPoly(std::uint64_t q, std::vector<std::uint64_t> coeffs);

    static ModPoly one(std::uint64_t q);
    static ModPoly x(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

    ModPoly monic() const;
    ModPoly derivative() const;

    ModPoly& operator+=(const ModPoly& o);
    ModPoly& operator-=(const ModPoly& o);
    friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
    friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    ModPoly scaled(std::uint64_t c) const;
    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.q_ == b.q_ && a.c_ == b.c_; }

    /// Canonical lift with coefficients in [0, q).
    IntPoly lift() const;
    /// Lift with coefficients in (-q/2, q/2].
    IntPoly lift_symmetric() const;
    std::string to_string() const;

private:
    ModPoly(std::uint64_t q, std::vector<std::uint64_t> coeffs, bool reduced);
    void normalize();

    std::uint64_t q_ = 2;
    std::vector<std::uint64_t> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
ModPoly operator/(const ModPoly& a, const ModPoly& b);

/// base^e mod m, with e given as a GMP integer so q^d-sized exponents work.
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m);

/// Monic gcd; zero when both inputs are zero. Throws on modulus mismatch.
ModPoly gcd_mod(const ModPoly& a, const ModPoly& b);

/// Coefficientwise reduction; throws std::invalid_argument unless q is a
/// prime below 2^64.
ModPoly mod_reduce(const IntPoly& p, const Int& q);
ModPoly mod_reduce(const IntPoly& p, std::uint64_t q);

struct ModFactor {
    ModPoly poly;  // monic irreducible
    unsigned multiplicity;
};

struct ModFactorization {
    std::uint64_t unit = 0;
    std::vector<ModFactor> factors;  // sorted by (degree, ascending coefficients)

    /// unit * prod f_i^e_i.
    ModPoly expand(std::uint64_t q) const;
};

/// Complete factorization over F_q. The RNG driving equal-degree splitting
/// is a local generator seeded from `seed`; factor order is canonical.
ModFactorization factor_mod(const ModPoly& p, std::uint64_t seed = 0);

/// Squarefree decomposition of a monic polynomial: pairs (s_i, i) with
/// p = prod s_i^i, each s_i squarefree and pairwise coprime.
std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& monic_p);

/// (degree, multiplicity) of each irreducible factor of p mod q, sorted.
/// Throws std::invalid_argument when q divides lc(p).
std::vector<std::pair<int, unsigned>> factor_pattern(const IntPoly& p, std::uint64_t q);

}  // namespace rquint
