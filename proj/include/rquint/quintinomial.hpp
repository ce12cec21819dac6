#pragma once

// The reciprocal quintinomials
//     F_{n,A,B}(x) = x^(2^n) + A x^(3*2^(n-2)) + B x^(2^(n-1)) + A x^(2^(n-2)) + 1
// with their invariants, closed-form discriminant and exact irreducibility
// decisions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rquint/poly.hpp"

namespace rquint {

inline constexpr int kMaxBuildN = 12;
inline constexpr int kMaxIrreducibilityN = 5;

struct QuinParams {
    int n;
    Int A;
    Int B;

    /// Throws std::invalid_argument unless n >= 2 and A*B != 0.
    QuinParams(int n, Int A, Int B);
    friend bool operator==(const QuinParams&, const QuinParams&) = default;
};

struct QuinInvariants {
    Int W1, W2, W3;
    Int P, Q, R;  // gcd(W1,W3), gcd(W1,W2), gcd(W2,W3), nonnegative
    friend bool operator==(const QuinInvariants&, const QuinInvariants&) = default;
};

enum class CertKind { LinearRoot, QuadraticSplit, FamilyCase1, FamilyCase2, CapelliCase1, CapelliCase2 };

const char* to_string(CertKind k);
CertKind cert_kind_from_string(const std::string& s);

/// An explicit factorization of a target polynomial. The constructor
/// rejects factor lists whose product is not the target.
struct ReducibilityCert {
    CertKind kind;
    IntPoly target;
    std::vector<IntPoly> factors;
    std::optional<std::pair<Int, Int>> st;          // (s, t) for the octic families
    std::optional<std::pair<IntPoly, IntPoly>> s0s1;  // Capelli witness

    ReducibilityCert(CertKind kind, IntPoly target, std::vector<IntPoly> factors,
                     std::optional<std::pair<Int, Int>> st = std::nullopt,
                     std::optional<std::pair<IntPoly, IntPoly>> s0s1 = std::nullopt);

    IntPoly product() const;
    friend bool operator==(const ReducibilityCert&, const ReducibilityCert&) = default;
};

struct Irreducibility {
    bool irreducible;
    std::optional<ReducibilityCert> certificate;
    /// Which decision procedure produced the answer.
    std::string method;
};

bool hypothesis_mod4(const Int& A, const Int& B);  // A = B = 1 (mod 4)

IntPoly build(const QuinParams& params);
/// x^4 + C x^3 + D x^2 - C x + 1.
IntPoly build_g_quartic(const Int& C, const Int& D);

QuinInvariants invariants(const Int& A, const Int& B);

/// 2^(2^n (n-2)) (W1 W2 W3^2)^(2^(n-2)).
Int disc_formula(const QuinParams& params);

/// Exact decision for x^4 + A x^3 + B x^2 + A x + 1 over Q.
Irreducibility quartic_irreducible(const Int& A, const Int& B);

/// Membership of (A, B) in the two octic reducibility families, with the
/// explicit quartic factor pair of F_{3,A,B}. Requires A = B = 1 (mod 4).
std::optional<ReducibilityCert> octic_family_membership(const Int& A, const Int& B);

/// Capelli-type test for F_{k+2,A,B}(x) = w(x^(2^k)), w = F_{2,A,B}:
/// w = S0^2 - x S1^2, or (k >= 2) w(x^2) = S0^2 - x S1^2. Throws
/// ReducibleError when w itself is reducible.
std::optional<ReducibilityCert> capelli_reducible(const Int& A, const Int& B, int k);

/// Irreducibility of F_{n,A,B} for 2 <= n <= 5.
Irreducibility irreducible(const QuinParams& params);

}  // namespace rquint
