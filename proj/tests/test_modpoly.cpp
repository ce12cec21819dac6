#include <doctest.h>

#include <algorithm>

#include "rquint/primes.hpp"
#include "rquint/quintinomial.hpp"
#include "support.hpp"

using namespace rquint;

namespace {

ModPoly mp(std::uint64_t q, std::vector<std::uint64_t> c) { return ModPoly(q, std::move(c)); }

std::vector<std::pair<std::vector<std::uint64_t>, unsigned>> as_pairs(const ModFactorization& f) {
    std::vector<std::pair<std::vector<std::uint64_t>, unsigned>> out;
    for (const auto& x : f.factors) out.emplace_back(x.poly.coeffs(), x.multiplicity);
    return out;
}

}  // namespace

TEST_CASE("reduction mod q") {
    CHECK(mod_reduce(build(QuinParams(2, 1, 9)), std::uint64_t{3}) == mp(3, {1, 1, 0, 1, 1}));
    CHECK(mod_reduce(build(QuinParams(3, 5, 5)), std::uint64_t{2}) == mp(2, {1, 0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK(mod_reduce(IntPoly{6, 0, 3}, std::uint64_t{3}).is_zero());
    CHECK(mod_reduce(IntPoly{-1, 4}, std::uint64_t{5}) == mp(5, {4, 4}));
    CHECK_THROWS_AS(mod_reduce(IntPoly{1, 1}, std::uint64_t{9}), std::invalid_argument);
    CHECK_THROWS_AS(ModPoly(1), std::invalid_argument);
}

TEST_CASE("factorization examples") {
    auto f = factor_mod(mp(2, {1, 0, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].poly == mp(2, {1, 1}));
    CHECK(f.factors[0].multiplicity == 2);

    auto g = factor_mod(mod_reduce(build(QuinParams(2, 1, 9)), std::uint64_t{3}));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].poly == mp(3, {1, 1}));
    CHECK(g.factors[0].multiplicity == 4);

    for (long A : {5L, 9L, -3L, 101L}) {
        auto h = factor_mod(mod_reduce(build(QuinParams(3, A, A)), std::uint64_t{2}));
        REQUIRE(h.factors.size() == 1);
        CHECK(h.factors[0].poly == mp(2, {1, 1, 1, 1, 1}));
        CHECK(h.factors[0].multiplicity == 2);
    }
    CHECK_THROWS_AS(factor_mod(ModPoly(7)), std::invalid_argument);
}

TEST_CASE("gcd examples") {
    CHECK(gcd_mod(mp(5, {4, 0, 1}), mp(5, {4, 1})) == mp(5, {4, 1}));
    const ModPoly phi5 = mp(2, {1, 1, 1, 1, 1});
    const ModPoly fbar = mp(2, {0, 1}) * mp(2, {1, 1}) * mp(2, {1, 1}) * phi5;
    CHECK(fbar == mp(2, {0, 1, 1, 0, 0, 0, 1, 1}));
    CHECK(gcd_mod(phi5, fbar) == phi5);
    CHECK(gcd_mod(mp(7, {2, 4}), ModPoly(7)) == mp(7, {4, 1}));
    CHECK(gcd_mod(ModPoly(7), ModPoly(7)).is_zero());
    CHECK_THROWS_AS(gcd_mod(mp(5, {1, 1}), mp(7, {1, 1})), std::invalid_argument);
}

TEST_CASE("factor patterns") {
    using P = std::vector<std::pair<int, unsigned>>;
    const IntPoly phi5{1, 1, 1, 1, 1};
    CHECK(factor_pattern(phi5, 11) == P{{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    CHECK(factor_pattern(phi5, 2) == P{{4, 1}});
    CHECK(factor_pattern(IntPoly{-1, 0, 1}, 3) == P{{1, 1}, {1, 1}});
    CHECK(factor_pattern(phi5, 5) == P{{1, 4}});
    CHECK_THROWS_AS(factor_pattern(IntPoly{1, 0, 3}, 3), std::invalid_argument);
}

TEST_CASE("factorizations reassemble") {
    std::mt19937_64 rng(21);
    const auto primes = primes_up_to(97);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t q = primes[rng() % primes.size()];
        const int d = static_cast<int>(test::random_long(rng, 1, 12));
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = rng() % q;
        if (c.back() == 0) c.back() = 1;
        // Bias toward repeated factors.
        ModPoly p(q, c);
        if (trial % 3 == 0) p = p * ModPoly(q, {rng() % q, 1}) * ModPoly(q, {rng() % q, 1});
        const auto f = factor_mod(p, static_cast<std::uint64_t>(trial));
        CHECK(f.expand(q) == p);
        int total = 0;
        for (const auto& x : f.factors) {
            CHECK(x.poly.leading() == 1);
            total += x.poly.degree() * static_cast<int>(x.multiplicity);
        }
        CHECK(total == p.degree());
        for (std::size_t i = 0; i + 1 < f.factors.size(); ++i) CHECK_FALSE(f.factors[i].poly == f.factors[i + 1].poly);
    }
}

TEST_CASE("factors are irreducible and agree with trial division") {
    std::mt19937_64 rng(22);
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        for (int trial = 0; trial < 40; ++trial) {
            const int d = static_cast<int>(test::random_long(rng, 1, 8));
            std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
            for (auto& x : c) x = rng() % q;
            c.back() = 1;
            const ModPoly p(q, c);
            const auto f = factor_mod(p);
            for (const auto& x : f.factors) {
                if (x.poly.degree() <= 4) CHECK(oracle::irreducible_mod(x.poly.coeffs(), q));
            }
            auto expected = oracle::trial_factor(p.coeffs(), q);
            auto got = as_pairs(f);
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
        }
    }
}

TEST_CASE("seeded factorization is deterministic") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t q = trial % 2 ? 2 : 1000003;
        std::vector<std::uint64_t> c(17);
        for (auto& x : c) x = rng() % q;
        c.back() = 1;
        const ModPoly p(q, c);
        const auto a = as_pairs(factor_mod(p, 99));
        CHECK(a == as_pairs(factor_mod(p, 99)));
        // Canonical order makes the result independent of the seed as well.
        CHECK(a == as_pairs(factor_mod(p, 12345)));
    }
}

TEST_CASE("squarefree decomposition") {
    const ModPoly a = mp(3, {1, 1}), b = mp(3, {1, 0, 1});
    const auto parts = squarefree_decomposition(a * b * b * b * b);
    ModPoly rebuilt = ModPoly::one(3);
    for (const auto& [s, e] : parts) {
        for (unsigned i = 0; i < e; ++i) rebuilt = rebuilt * s;
    }
    CHECK(rebuilt == a * b * b * b * b);
}

TEST_CASE("lifts") {
    const ModPoly p = mp(7, {6, 3, 4});
    CHECK(p.lift() == IntPoly{6, 3, 4});
    CHECK(p.lift_symmetric() == IntPoly{-1, 3, -3});
    CHECK(mod_reduce(p.lift_symmetric(), std::uint64_t{7}) == p);
}

TEST_CASE("primality") {
    const auto ps = primes_up_to(100000);
    std::vector<bool> sieve(100001, false);
    for (auto p : ps) sieve[p] = true;
    for (std::uint64_t n = 0; n <= 100000; ++n) CHECK(is_prime_u64(n) == sieve[n]);
    CHECK(is_prime_u64(2305843009213693951ULL));
    CHECK(is_prime_u64(18446744073709551557ULL));
    CHECK_FALSE(is_prime_u64(3215031751ULL));
    CHECK_FALSE(is_prime_u64(18446744073709551615ULL));
    CHECK(powmod_u64(3, 18446744073709551556ULL, 18446744073709551557ULL) == 1);
}
