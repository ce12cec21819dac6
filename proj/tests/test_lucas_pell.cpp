#include <doctest.h>

#include <numeric>
#include <set>
#include <tuple>

#include "rquint/factor_int.hpp"
#include "rquint/galois.hpp"
#include "rquint/lucas_pell.hpp"
#include "rquint/quintinomial.hpp"

using namespace rquint;

namespace {

long mod(const Int& v, long m) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_si();
}

}  // namespace

TEST_CASE("sequence values") {
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(-3) == -4);
    CHECK(lucas(10) == 123);
    CHECK(fib(0) == 0);
    CHECK(fib(7) == 13);
    CHECK(fib(-2) == -1);
    CHECK(fib(-3) == 2);
    CHECK(fib(100) == Int("354224848179261915075"));
    CHECK_THROWS_AS(lucas(kMaxLucasIndex + 1), std::out_of_range);
    CHECK_THROWS_AS(fib(-kMaxLucasIndex - 1), std::out_of_range);
    for (long N = -40; N <= 40; ++N) {
        CHECK(lucas(N + 1) == lucas(N) + lucas(N - 1));
        CHECK(fib(N + 1) == fib(N) + fib(N - 1));
        CHECK(lucas(-N) == (N % 2 ? -1 : 1) * lucas(N));
        CHECK(lucas(N) == fib(N - 1) + fib(N + 1));
    }
}

TEST_CASE("identities") {
    CHECK(5 * fib(1) == 2 * lucas(2) - lucas(1));
    CHECK(lucas(2) - 2 == lucas(1) * lucas(1));
    CHECK(lucas(10) - 2 == 121);
    CHECK(verify_lf_identities(60));
    CHECK(verify_lf_identities(500));
}

TEST_CASE("Pell solutions") {
    CHECK(pell_solution(1) == std::make_pair(Int(1), Int(1)));
    CHECK(pell_solution(2) == std::make_pair(Int(4), Int(2)));
    CHECK(pell_solution(4) == std::make_pair(Int(29), Int(13)));
    for (long n = 1; n <= 30; ++n) {
        const auto [X, Y] = pell_solution(n);
        CHECK(X * X - 5 * Y * Y == -4);
    }
}

TEST_CASE("coefficient pairs from Pell solutions") {
    CHECK(ab_from_pell(1) == std::make_pair(Int(1), Int(1)));
    CHECK_FALSE(ab_from_pell(2));
    CHECK(ab_from_pell(3) == std::make_pair(Int(-11), Int(21)));
    const auto p4 = ab_from_pell(4);
    REQUIRE(p4);
    CHECK(*p4 == std::make_pair(Int(29), Int(61)));
    CHECK(invariants(p4->first, p4->second).W2 == 121);
    CHECK(invariants(p4->first, p4->second).W2 == lucas(5) * lucas(5));

    for (long n = 1; n <= 200; ++n) {
        const Int L = lucas(2 * n - 1), F = fib(2 * n - 1);
        // Residues of L_{2n-1} and F_{2n-1} mod 4.
        if (n % 3 == 1) CHECK(mod(L, 4) == 1);
        if (n % 3 == 0) CHECK(mod(L, 4) == 3);
        if (n % 3 != 2) CHECK(mod(F, 4) == 1);
        CHECK(mod(F, 4) != 3);
        const auto ab = ab_from_pell(n);
        CHECK(ab.has_value() == (n % 3 != 2));
        if (!ab) continue;
        const auto& [A, B] = *ab;
        CHECK(A == (n % 3 == 0 ? -L : L));
        CHECK(B == 5 * F - 4);
        CHECK(hypothesis_mod4(A, B));
        const Int y = (B + 4) / 5;
        CHECK(A * A - 5 * y * y == -4);
    }
}

TEST_CASE("square identities for W1 and W2") {
    for (long n = 1; n <= 55; ++n) {
        const auto ab = ab_from_pell(n);
        if (!ab) continue;
        const auto inv = invariants(ab->first, ab->second);
        if (n % 6 == 1) CHECK(inv.W1 == lucas(n - 2) * lucas(n - 2));
        if (n % 6 == 4) CHECK(inv.W2 == lucas(n + 1) * lucas(n + 1));
    }
}

TEST_CASE("W1 or W2 fails to be squarefree past the first solution") {
    for (long n = 2; n <= 30; ++n) {
        const auto ab = ab_from_pell(n);
        if (!ab) continue;
        const auto inv = invariants(ab->first, ab->second);
        const auto s1 = squarefree(inv.W1), s2 = squarefree(inv.W2);
        REQUIRE(s1);
        REQUIRE(s2);
        CHECK_FALSE((*s1 && *s2));
    }
    const auto inv = invariants(1, 1);
    CHECK(*squarefree(inv.W1));
    CHECK(*squarefree(inv.W2));
}

TEST_CASE("P, Q, R relations") {
    CHECK(pqr_residual(1, 11, 5, PqrCase::PosPos) == 0);
    CHECK(pqr_residual(1, 3, 13, PqrCase::PosPos) == 0);
    CHECK(pqr_residual(1, 1, 5, PqrCase::PosPos) == 0);
    CHECK(pqr_residual(1, 1, 1, PqrCase::PosPos) != 0);
    CHECK_THROWS_AS(pqr_residual(0, 1, 1, PqrCase::PosPos), std::invalid_argument);

    std::set<std::tuple<long, long, long>> found;
    for (long R : {5L, 13L, 65L}) {
        for (long Q = 1; Q <= 200; ++Q) {
            if (pqr_residual(1, Q, R, PqrCase::PosPos) == 0) found.emplace(1, Q, R);
        }
    }
    CHECK(found == std::set<std::tuple<long, long, long>>{{1, 11, 5}, {1, 3, 13}, {1, 1, 5}});

    auto odd_squarefree = [](long v) { return v % 2 == 1 && *squarefree(v); };
    int negneg = 0;
    for (long P = 1; P <= 100; ++P) {
        if (!odd_squarefree(P)) continue;
        for (long Q = 1; Q <= 100; ++Q) {
            if (!odd_squarefree(Q) || std::gcd(P, Q) != 1) continue;
            for (long R = 1; R <= 100; ++R) {
                if (!odd_squarefree(R) || std::gcd(P, R) != 1 || std::gcd(Q, R) != 1) continue;
                negneg += pqr_residual(P, Q, R, PqrCase::NegNeg) == 0;
            }
        }
    }
    CHECK(negneg == 0);
    CHECK(std::string(to_string(PqrCase::NegNeg)) == "NegNeg");
}

TEST_CASE("curve tables") {
    CHECK(curve_tables_selfcheck());
    CHECK(elliptic_points().size() == 8);
    CHECK(curve_point_ok({5, 20}));
    CHECK(curve_point_ok({1573, 62348}));
    CHECK_FALSE(curve_point_ok({5, 21}));
    CHECK(quartic_value_ok(-11));
    CHECK_FALSE(quartic_value_ok(2));
    const std::set<long> as(quartic_a_values().begin(), quartic_a_values().end());
    CHECK(as == std::set<long>{-1, 0, -9, -11, 4});
    // A = -11 is the only table value that is 1 mod 4.
    int ones = 0;
    for (long A : as) ones += mod(Int(A), 4) == 1;
    CHECK(ones == 1);
}
