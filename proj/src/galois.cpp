#include "rquint/galois.hpp"

#include <stdexcept>

#include "rquint/error.hpp"
#include "rquint/modpoly.hpp"
#include "rquint/primes.hpp"
#include "rquint/quintinomial.hpp"

namespace rquint {

const char* to_string(GaloisLabel l) {
    switch (l) {
        case GaloisLabel::C4: return "C4";
        case GaloisLabel::D4: return "D4";
        case GaloisLabel::WreathC2sqC2: return "WreathC2sqC2";
        case GaloisLabel::NotWreath: return "NotWreath";
        case GaloisLabel::OutOfScope: return "OutOfScope";
    }
    return "?";
}

GaloisLabel galois_label_from_string(const std::string& s) {
    for (GaloisLabel l : {GaloisLabel::C4, GaloisLabel::D4, GaloisLabel::WreathC2sqC2, GaloisLabel::NotWreath,
                          GaloisLabel::OutOfScope}) {
        if (s == to_string(l)) return l;
    }
    throw std::invalid_argument("unknown Galois label '" + s + "'");
}

bool is_perfect_square(const Int& m) {
    if (m < 0) return false;
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    return rem == 0;
}

GaloisClass quartic_galois(const Int& A, const Int& B) {
    GaloisClass g;
    if (!hypothesis_mod4(A, B)) return g;
    const QuinInvariants inv = invariants(A, B);
    const Int product = inv.W1 * inv.W2 * inv.W3;
    const bool square = is_perfect_square(product);
    g.squares.push_back({"W1W2W3", product, square});
    g.label = square ? GaloisLabel::C4 : GaloisLabel::D4;
    return g;
}

GaloisClass frobenius_fingerprint(const Int& A, const Int& B, std::uint64_t prime_bound) {
    if (!quartic_irreducible(A, B).irreducible) {
        throw ReducibleError("F_{2," + A.get_str() + "," + B.get_str() + "} is reducible");
    }
    const QuinInvariants inv = invariants(A, B);
    const Int disc_core = inv.W1 * inv.W2 * inv.W3;
    const IntPoly f = IntPoly(std::vector<Int>{1, A, B, A, 1});
    const std::vector<std::pair<int, unsigned>> transposition{{1, 1}, {1, 1}, {2, 1}};

    GaloisClass g;
    g.label = GaloisLabel::C4;
    for (std::uint64_t q : primes_up_to(prime_bound)) {
        // disc = W1 W2 W3^2, so q is ramification-free iff q does not divide W1 W2 W3.
        if (mpz_divisible_ui_p(disc_core.get_mpz_t(), q)) continue;
        auto pattern = factor_pattern(f, q);
        ++g.primes_scanned;
        const bool hit = pattern == transposition;
        g.frobenius.push_back({q, std::move(pattern)});
        if (hit) {
            g.label = GaloisLabel::D4;
            g.certified = true;
            break;
        }
    }
    if (g.primes_scanned == 0) throw std::invalid_argument("no admissible primes below the bound");
    return g;
}

GaloisClass octic_wreath(const Int& A, const Int& B) {
    GaloisClass g;
    if (!hypothesis_mod4(A, B)) return g;
    if (octic_family_membership(A, B)) {
        throw ReducibleError("F_{3," + A.get_str() + "," + B.get_str() + "} is reducible");
    }
    const QuinInvariants inv = invariants(A, B);
    const std::pair<const char*, Int> tests[] = {
        {"W1", inv.W1},
        {"W2", inv.W2},
        {"W1W2", inv.W1 * inv.W2},
        {"W1W3", inv.W1 * inv.W3},
        {"W2W3", inv.W2 * inv.W3},
        {"W1W2W3", inv.W1 * inv.W2 * inv.W3},
    };
    bool any_square = false;
    for (const auto& [name, value] : tests) {
        const bool sq = is_perfect_square(value);
        any_square = any_square || sq;
        g.squares.push_back({name, value, sq});
    }
    g.label = any_square ? GaloisLabel::NotWreath : GaloisLabel::WreathC2sqC2;
    return g;
}

}  // namespace rquint
