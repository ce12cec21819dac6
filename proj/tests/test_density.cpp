#include <doctest.h>

#include <optional>

#include "rquint/density.hpp"
#include "rquint/primes.hpp"
#include "support.hpp"

using namespace rquint;

namespace {

FactoredPoly wreath_G() { return parse_factored("-1,4|5,12|5,-8,16"); }

FactoredPoly family_G(long k) {
    return FactoredPoly({IntPoly{1 - 16 * k, 8}, IntPoly{16 * k + 5, 8}, IntPoly{-64 * k * k - 16 * k - 5, 32}});
}

}  // namespace

TEST_CASE("validation of factored inputs") {
    CHECK_THROWS_AS(FactoredPoly({}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredPoly({IntPoly{3}}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredPoly({IntPoly{1, 0, 0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredPoly({IntPoly{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredPoly({IntPoly{-1, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredPoly({IntPoly{1, 1}, IntPoly{-1, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredPoly({IntPoly{-1, 1}, IntPoly{-1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(parse_factored("1,1|"), std::invalid_argument);
    CHECK_NOTHROW(FactoredPoly({IntPoly{-1, 1}, IntPoly{1, 1}}));
    const auto G = wreath_G();
    CHECK(G.degree() == 4);
    CHECK(G.expand() == IntPoly{-1, 4} * IntPoly{5, 12} * IntPoly{5, -8, 16});
}

TEST_CASE("small degree irreducibility") {
    CHECK(small_degree_irreducible(IntPoly{5, 12}));
    CHECK(small_degree_irreducible(IntPoly{1, 0, 1}));
    CHECK_FALSE(small_degree_irreducible(IntPoly{-4, 0, 1}));
    CHECK(small_degree_irreducible(IntPoly{-2, 0, 0, 1}));
    CHECK_FALSE(small_degree_irreducible(IntPoly{-1, 0, 0, 1}));
    CHECK_FALSE(small_degree_irreducible(IntPoly{1, 0, 0, 8}));  // root -1/2
    CHECK_FALSE(small_degree_irreducible(IntPoly{0, 1, 0, 1}));
    CHECK(small_degree_irreducible(IntPoly{3, 0, 0, 2}));
    CHECK_THROWS_AS(small_degree_irreducible(IntPoly{1, 0, 0, 0, 1}), std::invalid_argument);
    // Against Kronecker's method after making the cubic monic by scaling.
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const IntPoly c = test::random_monic(rng, 3, 30);
        CHECK(small_degree_irreducible(c) == !oracle::kronecker_factor(c).has_value());
    }
}

TEST_CASE("rho examples") {
    CHECK(rho_ell2(wreath_G(), 2) == 0);
    const FactoredPoly t({IntPoly{0, 1}});
    CHECK(rho_ell2(t, 3) == 0);
    const FactoredPoly g({IntPoly{-1, 1}, IntPoly{1, 1}, IntPoly{1, 0, 1}});
    CHECK(rho_ell2(g, 5) == oracle::rho_enumerate(g.expand(), 5));
    CHECK_THROWS_AS(rho_ell2(t, 4), std::invalid_argument);
    CHECK_THROWS_AS(rho_ell2(t, 65537), std::invalid_argument);
}

TEST_CASE("obstruction candidates") {
    const auto c = obstruction_candidates(wreath_G());
    REQUIRE(c.size() == 2);
    CHECK(c[0].ell == 2);
    CHECK(c[1].ell == 3);
    CHECK(c[1].linear_factors == 1);  // 2(t+2)(t^2+t+2) mod 3
    CHECK(c[0].linear_factors == 0);  // every factor is 1 mod 2
    CHECK_FALSE(c[0].within_bound);
    CHECK_FALSE(c[1].within_bound);
    CHECK_FALSE(c[0].obstructed);
    CHECK_FALSE(c[1].obstructed);
    CHECK(obstruction_scan(wreath_G()).empty());
    CHECK_FALSE(has_local_obstruction(wreath_G(), 2));

    for (long k = -2; k <= 2; ++k) {
        const auto f = obstruction_candidates(family_G(k));
        REQUIRE(f.size() == 1);
        CHECK(f[0].ell == 2);
        CHECK(obstruction_scan(family_G(k)).empty());
    }
    CHECK(obstruction_scan(FactoredPoly({IntPoly{0, 1}})).empty());
}

TEST_CASE("an obstructed polynomial") {
    // (t-1)(t+1) vanishes mod 4 at both units 1 and 3.
    const FactoredPoly g({IntPoly{-1, 1}, IntPoly{1, 1}});
    CHECK(rho_ell2(g, 2) == 2);
    CHECK(has_local_obstruction(g, 2));
    const auto c = obstruction_candidates(g);
    REQUIRE(c.size() == 1);
    CHECK(c[0].linear_factors == 2);
    CHECK(c[0].within_bound);
    CHECK(obstruction_scan(g) == std::vector<std::uint64_t>{2});
    CHECK(cg_truncated(g, 100) == 0);
    // Only p = 2 gives (p-1)(p+1) = 3 squarefree; odd p give a multiple of 8.
    CHECK(ng_count(g, 1000).count == 1);
}

TEST_CASE("truncated product") {
    CHECK(cg_truncated(FactoredPoly({IntPoly{-1, 1}}), 2) == mpq_class(1, 2));
    CHECK_THROWS_AS(cg_truncated(wreath_G(), 1), std::invalid_argument);
    mpq_class prev = 1;
    for (std::uint64_t L = 2; L <= 100; ++L) {
        const mpq_class v = cg_truncated(wreath_G(), L);
        CHECK(v <= prev);
        CHECK(v > 0);
        prev = v;
    }
    CHECK(decimal_string(mpq_class(1, 3), 5) == "0.33333");
    CHECK(decimal_string(mpq_class(1), 3) == "1.000");
    CHECK(decimal_string(mpq_class(1, 200), 2) == "0.00");
}

TEST_CASE("prime counts") {
    const auto t = ng_count(FactoredPoly({IntPoly{0, 1}}), 10);
    CHECK(t.count == 4);
    CHECK(t.certified);
    const auto g = ng_count(wreath_G(), 10000);
    CHECK(g.certified);
    CHECK(g.count >= 10);
    CHECK_THROWS_AS(ng_count(wreath_G(), 1), std::invalid_argument);
    // Brute force while G(p) stays below 10^12.
    std::uint64_t brute = 0;
    for (auto p : primes_up_to(180)) brute += oracle::squarefree_trial(wreath_G().eval(Int(static_cast<unsigned long>(p))));
    CHECK(ng_count(wreath_G(), 180).count == brute);
}

TEST_CASE("rho and linear factor counts agree with the oracles") {
    std::mt19937_64 rng(62);
    int made = 0;
    while (made < 200) {
        std::vector<IntPoly> fs;
        const int nf = static_cast<int>(test::random_long(rng, 1, 3));
        for (int i = 0; i < nf; ++i) {
            std::vector<Int> c;
            const int d = static_cast<int>(test::random_long(rng, 1, 2));
            for (int j = 0; j <= d; ++j) c.push_back(test::random_long(rng, -9, 9));
            fs.emplace_back(std::move(c));
        }
        std::optional<FactoredPoly> G;
        try {
            G.emplace(fs);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++made;
        for (std::uint64_t ell : {2ULL, 3ULL, 5ULL, 7ULL}) {
            const auto rho = rho_ell2(*G, ell);
            CHECK(rho == oracle::rho_enumerate(G->expand(), ell));
            CHECK(rho <= ell * (ell - 1));
            unsigned roots = 0;
            for (const auto& f : G->factors()) roots += oracle::roots_with_multiplicity(f, ell);
            CHECK(linear_factor_count(*G, ell) == roots);
            for (std::uint64_t z : {0ULL, 1ULL, 5ULL, 17ULL}) {
                Int v = G->eval(Int(static_cast<unsigned long>(z)));
                mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), ell * ell);
                CHECK(G->eval_mod(z, ell * ell) == v.get_ui());
            }
        }
    }
}

TEST_CASE("density report") {
    const auto r = density_report(wreath_G(), 100, 1000);
    CHECK(r.obstruction_primes.empty());
    CHECK(r.truncation_bound == 100);
    CHECK(r.rho_table.size() == 25);
    for (const auto& e : r.rho_table) {
        CHECK(e.rho <= e.phi);
        CHECK(e.phi == e.ell * (e.ell - 1));
    }
    CHECK(r.cg > 0);
    CHECK(r.cg < 1);
    CHECK(r.cg == cg_truncated(wreath_G(), 100));
    CHECK(r.cg_decimal.substr(0, 2) == "0.");
    CHECK(r.certified);
    CHECK(r.ng.X == 1000);
}
