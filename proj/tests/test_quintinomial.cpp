#include <doctest.h>

#include "rquint/error.hpp"
#include "rquint/quintinomial.hpp"
#include "support.hpp"

using namespace rquint;

TEST_CASE("build") {
    CHECK(build(QuinParams(2, 1, 1)) == IntPoly{1, 1, 1, 1, 1});
    CHECK(build(QuinParams(3, 1, 1)) == IntPoly{1, 0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(build(QuinParams(2, -11, 21)) == IntPoly{1, -11, 21, -11, 1});
    CHECK(build(QuinParams(5, 3, -7)).degree() == 32);
    CHECK(build_g_quartic(1, 1) == IntPoly{1, -1, 1, 1, 1});
    CHECK_THROWS_AS(QuinParams(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(QuinParams(2, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(QuinParams(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build(QuinParams(kMaxBuildN + 1, 1, 1)), std::invalid_argument);
}

TEST_CASE("build at n is build at n-1 in x^2") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const long A = test::random_long(rng, 1, 500) * (trial % 2 ? 1 : -1);
        const long B = test::random_long(rng, 1, 500) * (trial % 3 ? 1 : -1);
        for (int n = 3; n <= 5; ++n) {
            CHECK(build(QuinParams(n, A, B)) == build(QuinParams(n - 1, A, B)).substitute_power(2));
        }
    }
}

TEST_CASE("invariants") {
    auto a = invariants(1, 1);
    CHECK(a.W1 == 1);
    CHECK(a.W2 == 5);
    CHECK(a.W3 == 5);
    CHECK(a.P == 1);
    CHECK(a.Q == 1);
    CHECK(a.R == 5);
    CHECK(invariants(-11, 21).W1 == 45);
    auto b = invariants(5, 5);
    CHECK(b.W1 == -3);
    CHECK(b.W2 == 17);
    CHECK(b.W3 == 13);
    CHECK(b.P == 1);
    CHECK(b.Q == 1);
    CHECK(b.R == 1);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const Int A = test::random_long(rng, -10000, 10000), B = test::random_long(rng, -10000, 10000);
        const IntPoly w(std::vector<Int>{1, A, B, A, 1});
        const auto inv = invariants(A, B);
        CHECK(w.eval(1) == inv.W2);
        CHECK(w.eval(-1) == inv.W1);
        CHECK(inv.P >= 0);
        CHECK(inv.Q >= 0);
        CHECK(inv.R >= 0);
    }
}

TEST_CASE("closed-form discriminant") {
    CHECK(disc_formula(QuinParams(2, 1, 1)) == 125);
    CHECK(disc_formula(QuinParams(3, 1, 1)) == 4000000);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        long A = 0, B = 0;
        while (A == 0 || B == 0) {
            A = test::random_long(rng, -10000, 10000);
            B = test::random_long(rng, -10000, 10000);
        }
        const auto inv = invariants(A, B);
        CHECK(disc_formula(QuinParams(2, A, B)) == inv.W1 * inv.W2 * inv.W3 * inv.W3);
        for (int n = 2; n <= 3; ++n) {
            const QuinParams p(n, A, B);
            CHECK(disc_formula(p) == discriminant(build(p)));
        }
    }
    CHECK(disc_formula(QuinParams(3, -7, 2)) == oracle::discriminant(build(QuinParams(3, -7, 2))));
}

TEST_CASE("quartic irreducibility examples") {
    CHECK(quartic_irreducible(1, 1).irreducible);
    auto r = quartic_irreducible(1, 2);
    CHECK_FALSE(r.irreducible);
    REQUIRE(r.certificate);
    CHECK(r.certificate->kind == CertKind::QuadraticSplit);
    CHECK(r.certificate->product() == IntPoly{1, 1, 2, 1, 1});
    CHECK(quartic_irreducible(3, 1).irreducible);
    auto lin = quartic_irreducible(3, 4);  // W1 = 0, root -1
    CHECK_FALSE(lin.irreducible);
    CHECK(lin.certificate->kind == CertKind::LinearRoot);
    // Constant terms (-1, -1) need A = 0.
    CHECK_FALSE(quartic_irreducible(0, -3).irreducible);
    CHECK(quartic_irreducible(-60, -2).irreducible);
}

TEST_CASE("quartic irreducibility agrees with Kronecker's method") {
    for (long A = -30; A <= 30; ++A) {
        for (long B = -30; B <= 30; ++B) {
            const auto r = quartic_irreducible(A, B);
            const auto k = oracle::kronecker_factor(IntPoly(std::vector<Int>{1, A, B, A, 1}));
            CHECK_MESSAGE(r.irreducible == !k.has_value(), "A=" << A << " B=" << B);
            if (r.certificate) CHECK(r.certificate->product() == IntPoly(std::vector<Int>{1, A, B, A, 1}));
        }
    }
}

TEST_CASE("hypothesis class quartics are irreducible with the mod 8 congruences") {
    for (long A = -41; A <= 41; A += 2) {
        for (long B = -41; B <= 41; B += 2) {
            if (!hypothesis_mod4(A, B)) continue;
            CHECK(quartic_irreducible(A, B).irreducible);
            const auto inv = invariants(A, B);
            CHECK(Int(inv.W1 * inv.W2 % 8 + 8) % 8 == 5);
            CHECK(Int(inv.W3 % 8 + 8) % 8 == 5);
        }
    }
}

TEST_CASE("octic family membership") {
    auto a = octic_family_membership(1, 1);
    REQUIRE(a);
    CHECK(a->kind == CertKind::FamilyCase1);
    CHECK(a->st == std::make_pair(Int(0), Int(0)));
    REQUIRE(a->factors.size() == 2);
    for (const auto& f : a->factors) {
        CHECK((f == IntPoly{1, -1, 1, -1, 1} || f == IntPoly{1, 1, 1, 1, 1}));
    }

    auto b = octic_family_membership(1, 5);
    REQUIRE(b);
    CHECK(b->kind == CertKind::FamilyCase2);
    CHECK(b->st == std::make_pair(Int(0), Int(0)));
    CHECK(b->product() == build(QuinParams(3, 1, 5)));
    for (const auto& f : b->factors) {
        CHECK((f == IntPoly{1, -1, 1, 1, 1} || f == IntPoly{1, 1, 1, -1, 1}));
    }

    CHECK_FALSE(octic_family_membership(5, 5));
    CHECK_THROWS_AS(octic_family_membership(3, 1), std::invalid_argument);
}

TEST_CASE("octic family generators are always members") {
    for (long s = -4; s <= 4; ++s) {
        for (long t = -4; t <= 4; ++t) {
            const long A = 4 * t - 4 * s * s - 4 * s + 1;
            for (long B : {4 * t * t + 4 * t - 8 * s * s - 8 * s + 1, 4 * t * t + 4 * t + 8 * s * s + 8 * s + 5}) {
                if (B == 0) continue;
                auto c = octic_family_membership(A, B);
                REQUIRE(c);
                CHECK(c->product() == build(QuinParams(3, A, B)));
            }
        }
    }
}

TEST_CASE("Capelli witnesses") {
    auto c = capelli_reducible(1, 1, 1);
    REQUIRE(c);
    CHECK(c->kind == CertKind::CapelliCase1);
    REQUIRE(c->s0s1);
    CHECK(c->s0s1->first == IntPoly{1, 1, 1});
    CHECK(c->s0s1->second == IntPoly{1, 1});
    CHECK(c->product() == build(QuinParams(3, 1, 1)));

    CHECK_FALSE(capelli_reducible(5, 5, 1));
    for (long A : {5L, 9L, -3L, -7L, 13L}) {
        CHECK_FALSE(capelli_reducible(A, A, 1));
        CHECK_FALSE(capelli_reducible(A, A, 2));
    }
    CHECK_THROWS_AS(capelli_reducible(1, 2, 1), ReducibleError);
    CHECK_THROWS_AS(capelli_reducible(1, 1, 0), std::invalid_argument);
}

TEST_CASE("second Capelli condition") {
    // Pairs where w(x^2) = S0^2 - x S1^2 but w = S0^2 - x S1^2 has no solution.
    for (auto [A, B] : {std::pair{-8L, 30L}, {8L, -2L}, {14L, 19L}, {18L, -29L}}) {
        CHECK_FALSE(capelli_reducible(A, B, 1));
        auto c = capelli_reducible(A, B, 2);
        REQUIRE(c);
        CHECK(c->kind == CertKind::CapelliCase2);
        const auto& [s0, s1] = *c->s0s1;
        CHECK(s0 * s0 - IntPoly{0, 1} * s1 * s1 == build(QuinParams(3, A, B)));
        auto lifted = capelli_reducible(A, B, 3);
        REQUIRE(lifted);
        CHECK(lifted->product() == build(QuinParams(5, A, B)));
        CHECK_FALSE(irreducible(QuinParams(4, A, B)).irreducible);
        CHECK(irreducible(QuinParams(3, A, B)).irreducible);
    }
}

TEST_CASE("irreducibility dispatch") {
    auto a = irreducible(QuinParams(3, 1, 1));
    CHECK_FALSE(a.irreducible);
    CHECK(a.certificate->product() == build(QuinParams(3, 1, 1)));
    CHECK(irreducible(QuinParams(4, 5, 5)).irreducible);
    CHECK(irreducible(QuinParams(2, 1, 9)).irreducible);
    auto b = irreducible(QuinParams(4, 1, 2));
    CHECK_FALSE(b.irreducible);
    CHECK(b.method == "quartic-system");
    CHECK(b.certificate->product() == build(QuinParams(4, 1, 2)));
    CHECK(irreducible(QuinParams(3, 1, 1)).method == "octic-family");
    CHECK(irreducible(QuinParams(3, 2, 7)).method == "capelli");
    CHECK_THROWS_AS(irreducible(QuinParams(6, 5, 5)), std::invalid_argument);
}

TEST_CASE("octic decisions agree with Kronecker's method off the hypothesis class") {
    for (long A = -6; A <= 6; ++A) {
        for (long B = -6; B <= 6; ++B) {
            if (A == 0 || B == 0 || hypothesis_mod4(A, B)) continue;
            const QuinParams p(3, A, B);
            const auto r = irreducible(p);
            const auto k = oracle::kronecker_factor(build(p));
            CHECK_MESSAGE(r.irreducible == !k.has_value(), "A=" << A << " B=" << B);
        }
    }
}

TEST_CASE("certificates must reproduce the target") {
    const IntPoly target = build(QuinParams(2, 1, 2));
    CHECK_NOTHROW(ReducibilityCert(CertKind::QuadraticSplit, target, {IntPoly{1, 0, 1}, IntPoly{1, 1, 1}}));
    CHECK_THROWS_AS(ReducibilityCert(CertKind::QuadraticSplit, target, {IntPoly{1, 0, 1}, IntPoly{1, 2, 1}}),
                    std::logic_error);
    CHECK(cert_kind_from_string(to_string(CertKind::CapelliCase2)) == CertKind::CapelliCase2);
    CHECK_THROWS_AS(cert_kind_from_string("Nope"), std::invalid_argument);
}
