#include <doctest.h>

#include "rquint/factor_int.hpp"
#include "support.hpp"

using namespace rquint;

namespace {

Int expand(const IntFactorization& f) {
    Int v = f.sign;
    for (const auto& pp : f.factors) v *= ipow(pp.prime, pp.exponent);
    return v * f.cofactor;
}

}  // namespace

TEST_CASE("factorization examples") {
    auto a = factor_integer(663);
    REQUIRE(a);
    CHECK(a->factors == std::vector<PrimePower>{{3, 1}, {13, 1}, {17, 1}});
    auto b = factor_integer(125);
    REQUIRE(b);
    CHECK(b->factors == std::vector<PrimePower>{{5, 3}});
    auto c = factor_integer(-45);
    REQUIRE(c);
    CHECK(c->sign == -1);
    CHECK(c->factors == std::vector<PrimePower>{{3, 2}, {5, 1}});
    auto one = factor_integer(1);
    REQUIRE(one);
    CHECK(one->factors.empty());
    CHECK_THROWS_AS(factor_integer(0), std::invalid_argument);
}

TEST_CASE("squarefree examples") {
    CHECK(squarefree(45) == false);
    CHECK(squarefree(663) == true);
    CHECK(squarefree(1) == true);
    CHECK(squarefree(-1) == true);
    CHECK(squarefree(-5) == true);
    CHECK_THROWS_AS(squarefree(0), std::invalid_argument);
}

TEST_CASE("large factors beyond trial division") {
    const Int p("998244353"), q("1000000007"), r("1000003");
    auto f = factor_integer(p * q * r * r);
    REQUIRE(f);
    CHECK(f->factors == std::vector<PrimePower>{{r, 2}, {p, 1}, {q, 1}});
    CHECK(squarefree(p * q * r * r) == false);
    CHECK(squarefree(p * q) == true);
}

TEST_CASE("budget exhaustion") {
    const Int n = Int("1000000000000037") * Int("7000000000000297");
    CHECK_FALSE(factor_integer(n, 10).has_value());
    CHECK_FALSE(squarefree(n, 10).has_value());
    auto partial = factor_integer_partial(n * 4, 10);
    CHECK_FALSE(partial.complete());
    CHECK(expand(partial) == n * 4);
    // A square found by trial division settles the answer regardless.
    CHECK(squarefree(n * 9, 10) == false);
}

TEST_CASE("factorizations agree with trial division") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const Int m = test::random_long(rng, -999999999999L, 999999999999L);
        if (m == 0) continue;
        auto f = factor_integer(m);
        REQUIRE(f);
        CHECK(expand(*f) == m);
        for (std::size_t i = 0; i < f->factors.size(); ++i) {
            CHECK(mpz_probab_prime_p(f->factors[i].prime.get_mpz_t(), 30) > 0);
            if (i) CHECK(f->factors[i - 1].prime < f->factors[i].prime);
        }
        CHECK(squarefree(m) == oracle::squarefree_trial(m));
    }
}
