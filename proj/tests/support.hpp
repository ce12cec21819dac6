#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "rquint/modpoly.hpp"
#include "rquint/poly.hpp"

namespace test {

using rquint::Int;
using rquint::IntPoly;

inline Int random_int(std::mt19937_64& rng, unsigned bits) {
    Int v = 0;
    for (unsigned have = 0; have < bits; have += 32) {
        v <<= 32;
        v += static_cast<unsigned long>(rng() & 0xffffffffULL);
    }
    Int mask = (Int(1) << bits) - 1;
    v &= mask;
    return (rng() & 1) ? Int(-v) : v;
}

inline long random_long(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntPoly random_poly(std::mt19937_64& rng, int degree, unsigned bits) {
    std::vector<Int> c;
    for (int i = 0; i <= degree; ++i) c.push_back(random_int(rng, bits));
    while (c.back() == 0) c.back() = random_int(rng, bits);
    return IntPoly(std::move(c));
}

inline IntPoly random_monic(std::mt19937_64& rng, int degree, long bound) {
    std::vector<Int> c;
    for (int i = 0; i < degree; ++i) c.push_back(Int(random_long(rng, -bound, bound)));
    c.push_back(1);
    return IntPoly(std::move(c));
}

inline rquint::oracle::SmallPoly small(const rquint::ModPoly& p) { return p.coeffs(); }

}  // namespace test
