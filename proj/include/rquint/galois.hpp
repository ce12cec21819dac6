#pragma once

// Galois classification: C4 versus D4 for the reciprocal quartics under
// A = B = 1 (mod 4), the Frobenius cycle-type oracle, and the wreath-product
// criterion for the octics.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rquint/poly.hpp"

namespace rquint {

enum class GaloisLabel { C4, D4, WreathC2sqC2, NotWreath, OutOfScope };

const char* to_string(GaloisLabel l);
GaloisLabel galois_label_from_string(const std::string& s);

struct FrobeniusEvidence {
    std::uint64_t prime;
    std::vector<std::pair<int, unsigned>> pattern;
    friend bool operator==(const FrobeniusEvidence&, const FrobeniusEvidence&) = default;
};

struct SquareTest {
    std::string quantity;  // e.g. "W1W2W3"
    Int value;
    bool is_square;
    friend bool operator==(const SquareTest&, const SquareTest&) = default;
};

struct GaloisClass {
    GaloisLabel label = GaloisLabel::OutOfScope;
    std::vector<FrobeniusEvidence> frobenius;
    std::vector<SquareTest> squares;
    /// Fingerprint only: number of admissible primes scanned.
    std::size_t primes_scanned = 0;
    /// Fingerprint only: true when a {1,1,2} pattern certified D4.
    bool certified = false;
    friend bool operator==(const GaloisClass&, const GaloisClass&) = default;
};

/// Exact test (negative values are never squares).
bool is_perfect_square(const Int& m);

GaloisClass quartic_galois(const Int& A, const Int& B);

/// Scans primes q <= prime_bound not dividing the discriminant. A cycle type
/// {1,1,2} exhibits a transposition and certifies D4; otherwise the answer
/// C4 is statistical. Throws when the quartic is reducible or no prime is
/// admissible.
GaloisClass frobenius_fingerprint(const Int& A, const Int& B, std::uint64_t prime_bound);

/// Wreath-product criterion for F_{3,A,B}. Throws ReducibleError when the
/// octic is reducible.
GaloisClass octic_wreath(const Int& A, const Int& B);

}  // namespace rquint
