#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "rquint/dedekind.hpp"
#include "rquint/density.hpp"
#include "rquint/galois.hpp"
#include "rquint/lucas_pell.hpp"
#include "rquint/modpoly.hpp"
#include "rquint/primes.hpp"
#include "rquint/quintinomial.hpp"
#include "rquint/search.hpp"

namespace rquint::acceptance {

namespace {

// Collects the first failure message and a failure count.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
    std::string summary(const std::string& success) const {
        if (failures == 0) return success;
        return std::to_string(failures) + " of " + std::to_string(checks) + " checks failed; first: " + first;
    }
};

struct Outcome {
    bool correct;
    std::string detail;
};

Outcome finish(const Tally& t, const std::string& success) { return {t.failures == 0, t.summary(success)}; }

std::string pair_str(const Int& A, const Int& B) { return "(" + A.get_str() + "," + B.get_str() + ")"; }

long mod_ui(const Int& v, unsigned long m) { return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), m)); }

// A = B = 1 (mod 4) with |A|, |B| <= bound.
std::vector<long> residue_one_values(long bound) {
    std::vector<long> v;
    for (long a = -bound; a <= bound; ++a) {
        if (((a % 4) + 4) % 4 == 1) v.push_back(a);
    }
    return v;
}

Outcome discriminant_formula(const Options& o) {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> coef(-10000, 10000);
    Tally t;
    std::size_t sylvester = 0;
    for (int n = 2; n <= 4; ++n) {
        for (int i = 0; i < 200; ++i) {
            long A = 0, B = 0;
            while (A == 0 || B == 0) {
                A = coef(rng);
                B = coef(rng);
            }
            const QuinParams p(n, A, B);
            const IntPoly T = build(p);
            const Int formula = disc_formula(p);
            t.expect(formula == discriminant(T), "n=" + std::to_string(n) + " " + pair_str(A, B));
            // The Sylvester determinant is slow at degree 16; a prefix suffices.
            if (n < 4 || i < 10) {
                t.expect(formula == oracle::discriminant(T), "Sylvester n=" + std::to_string(n) + " " + pair_str(A, B));
                ++sylvester;
            }
        }
    }
    return finish(t, "600 random pairs agree exactly, " + std::to_string(sylvester) +
                         " also against the Sylvester determinant");
}

Outcome quartic_grid_irreducible(const Options&) {
    Tally t;
    const auto vals = residue_one_values(101);
    for (long A : vals) {
        for (long B : vals) {
            const QuinInvariants inv = invariants(A, B);
            t.expect(quartic_irreducible(A, B).irreducible, "reducible " + pair_str(A, B));
            t.expect(!oracle::kronecker_factor(build(QuinParams(2, A, B))), "oracle factor " + pair_str(A, B));
            t.expect(mod_ui(inv.W1 * inv.W2, 8) == 5 && mod_ui(inv.W3, 8) == 5, "residues " + pair_str(A, B));
        }
    }
    return finish(t, std::to_string(vals.size() * vals.size()) + " quartics irreducible with W1W2 = W3 = 5 (mod 8)");
}

Outcome monogenic_iff_squarefree(const Options& o) {
    Tally t;
    const auto vals = residue_one_values(101);
    std::size_t mono = 0;
    for (long A : vals) {
        for (long B : vals) {
            const QuinInvariants inv = invariants(A, B);
            const bool sf = oracle::squarefree_trial(inv.W1) && oracle::squarefree_trial(inv.W2) &&
                            oracle::squarefree_trial(inv.W3);
            const MonoStatus s = is_monogenic(QuinParams(2, A, B), o.seed).status;
            t.expect(s == MonoStatus::Monogenic || s == MonoStatus::NotMonogenic, "undecided " + pair_str(A, B));
            t.expect((s == MonoStatus::Monogenic) == sf, "mismatch at " + pair_str(A, B));
            mono += s == MonoStatus::Monogenic;
        }
    }
    return finish(t, std::to_string(vals.size() * vals.size()) + " pairs agree (" + std::to_string(mono) +
                         " monogenic)");
}

Outcome cyclic_monogenic_unique(const Options& o) {
    Tally t;
    const auto recs = grid_classify(2, {-201, 201}, {-201, 201}, ResidueFilter::Mod4_11, o.seed, kDefaultBudget, o.jobs);
    std::vector<std::string> hits;
    for (const auto& r : recs) {
        t.expect(r.verdict.status != MonoStatus::Undecided, "undecided " + pair_str(r.params.A, r.params.B));
        if (r.verdict.status == MonoStatus::Monogenic && r.galois.label == GaloisLabel::C4) {
            hits.push_back(pair_str(r.params.A, r.params.B));
            t.expect(r.field_disc == Int(125), "disc at " + hits.back());
        }
    }
    t.expect(hits.size() == 1 && hits[0] == "(1,1)", std::to_string(hits.size()) + " hits");
    const IntPoly phi5{1, 1, 1, 1, 1};
    t.expect(build(QuinParams(2, 1, 1)) == phi5 && oracle::discriminant(phi5) == 125, "cyclotomic check");
    return finish(t, std::to_string(recs.size()) + " pairs; only (1,1) is monogenic and cyclic, disc 125");
}

Outcome dihedral_family(const Options& o) {
    Tally t;
    std::string sample;
    for (long k : {0L, 1L}) {
        const auto fam = prime_family_first_squarefree(k, 10, o.seed);
        std::vector<SearchRecord> recs;
        for (const auto& f : fam) {
            const auto& r = f.record;
            const std::string at = "k=" + std::to_string(k) + " t=" + f.t.get_str();
            t.expect(r.verdict.status == MonoStatus::Monogenic, "not monogenic " + at);
            t.expect(r.galois.label == GaloisLabel::D4, "not D4 " + at);
            const GaloisClass fp = frobenius_fingerprint(r.params.A, r.params.B, 2000);
            t.expect(fp.certified && fp.label == GaloisLabel::D4, "no transposition " + at);
            recs.push_back(r);
        }
        t.expect(fam.size() == 10, "short family");
        if (fam.size() == 10) {
            const FieldPartition part = distinct_fields(recs);
            t.expect(part.all_distinct && part.classes.size() == 10, "coinciding discriminants k=" + std::to_string(k));
        }
        sample += (sample.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + " t<=" +
                  (fam.empty() ? std::string("?") : fam.back().t.get_str());
    }
    return finish(t, "20 records monogenic with D4, 10 distinct discriminants per k (" + sample + ")");
}

Outcome octic_families(const Options& o) {
    Tally t;
    // Both families over |s|, |t| <= 6.
    for (long s = -6; s <= 6; ++s) {
        for (long tt = -6; tt <= 6; ++tt) {
            const Int S = s, T = tt;
            const Int A = 4 * T - 4 * S * S - 4 * S + 1;
            const Int Bs[2] = {4 * T * T + 4 * T - 8 * S * S - 8 * S + 1, 4 * T * T + 4 * T + 8 * S * S + 8 * S + 5};
            const Int C = 2 * S + 1, D = 2 * T + 1;
            const IntPoly products[2] = {build(QuinParams(2, C, D)) * build(QuinParams(2, -C, D)),
                                         build_g_quartic(C, D) * build_g_quartic(-C, D)};
            for (int c = 0; c < 2; ++c) {
                const std::string at = "case " + std::to_string(c + 1) + " s=" + S.get_str() + " t=" + T.get_str();
                const IntPoly target = build(QuinParams(3, A, Bs[c]));
                t.expect(products[c] == target, "product " + at);
                const auto cert = octic_family_membership(A, Bs[c]);
                t.expect(cert && cert->product() == target, "membership " + at);
            }
        }
    }
    // Non-members: the grid minus every family pair it could contain.
    const auto vals = residue_one_values(101);
    std::set<std::pair<long, long>> members;
    for (long s = 0; s <= 60; ++s) {
        for (long tt = -4000; tt <= 4000; ++tt) {
            const long A = 4 * tt - 4 * s * s - 4 * s + 1;
            if (A < -101 || A > 101) continue;
            for (long B : {4 * tt * tt + 4 * tt - 8 * s * s - 8 * s + 1, 4 * tt * tt + 4 * tt + 8 * s * s + 8 * s + 5}) {
                if (B >= -101 && B <= 101) members.insert({A, B});
            }
        }
    }
    std::vector<std::pair<long, long>> outside;
    for (long A : vals) {
        for (long B : vals) {
            if (!members.count({A, B})) outside.push_back({A, B});
        }
    }
    std::mt19937_64 rng(o.seed);
    std::shuffle(outside.begin(), outside.end(), rng);
    outside.resize(std::min<std::size_t>(outside.size(), 500));
    t.expect(outside.size() == 500, "fewer than 500 non-members");
    for (const auto& [A, B] : outside) {
        t.expect(!octic_family_membership(A, B), "false member " + pair_str(A, B));
    }
    // Brute-force factor search over the small grid, members included.
    std::size_t reducible = 0, small = 0;
    for (long A : residue_one_values(21)) {
        for (long B : residue_one_values(21)) {
            const bool brute = oracle::kronecker_factor(build(QuinParams(3, A, B))).has_value();
            const bool fam = octic_family_membership(A, B).has_value();
            t.expect(brute == fam, "brute force disagrees at " + pair_str(A, B));
            reducible += brute;
            ++small;
        }
    }
    return finish(t, "338 family products exact; 500 non-members rejected; brute force agrees on " +
                         std::to_string(small) + " pairs (" + std::to_string(reducible) + " reducible)");
}

Outcome equal_coefficient_octics(const Options& o) {
    Tally t;
    const ModPoly expected = ModPoly(2, {0, 1}) * ModPoly(2, {1, 1}) * ModPoly(2, {1, 1}) * ModPoly(2, {1, 1, 1, 1, 1});
    t.expect(expected == ModPoly(2, {0, 1, 1, 0, 0, 0, 1, 1}), "x(x+1)^2 Phi5 mod 2");
    std::size_t count = 0;
    for (long A : residue_one_values(401)) {
        if (A == 1) continue;
        const QuinParams p(3, A, A);
        const std::string at = "A=" + std::to_string(A);
        t.expect(irreducible(p).irreducible, "reducible " + at);
        if (A >= -41 && A <= 41) t.expect(!oracle::kronecker_factor(build(p)), "oracle factor " + at);
        const DedekindOutcome out = dedekind_check(build(p), 2, o.seed);
        t.expect(out.divides_index, "2 does not divide the index " + at);
        t.expect(mod_reduce(out.F, std::uint64_t{2}) == expected, "F mod 2 " + at);
        ++count;
    }
    const IntPoly phi5{1, 1, 1, 1, 1}, phi10{1, -1, 1, -1, 1};
    t.expect(build(QuinParams(3, 1, 1)) == phi5 * phi10, "A=1 split");
    t.expect(!irreducible(QuinParams(3, 1, 1)).irreducible, "A=1 irreducible");
    return finish(t, std::to_string(count) + " octics irreducible with 2 | index and F = x(x+1)^2 Phi5 mod 2; A=1 splits");
}

Outcome wreath_family(const Options&) {
    Tally t;
    std::size_t count = 0;
    bool has9 = false;
    for (std::uint64_t p : primes_up_to(249)) {
        const Int P(static_cast<unsigned long>(p));
        const Int G = (4 * P - 1) * (12 * P + 5) * (16 * P * P - 8 * P + 5);
        const auto sf = squarefree(G);
        t.expect(sf.has_value(), "undecided G(" + P.get_str() + ")");
        if (!sf.value_or(false)) continue;
        const Int A = 4 * P + 1;
        const QuinInvariants inv = invariants(A, A);
        t.expect(G == -inv.W1 * inv.W2 * inv.W3, "G(p) != -W1W2W3 at A=" + A.get_str());
        t.expect(octic_wreath(A, A).label == GaloisLabel::WreathC2sqC2, "not wreath at A=" + A.get_str());
        has9 = has9 || A == 9;
        ++count;
    }
    t.expect(count >= 10, "only " + std::to_string(count) + " values");
    t.expect(has9, "A=9 missing");
    return finish(t, std::to_string(count) + " values A=4p+1 <= 1000 with G(p) squarefree, all wreath, A=9 included");
}

Outcome off_residue_sample(const Options& o) {
    Tally t;
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> coef(-1000, 1000);
    std::set<std::pair<long, long>> seen;
    std::vector<std::pair<long, long>> pairs;
    while (pairs.size() < 200) {
        const long A = coef(rng), B = coef(rng);
        if (A == 0 || B == 0 || !passes(ResidueFilter::Mod4_Other, A, B) || !seen.insert({A, B}).second) continue;
        const QuinInvariants inv = invariants(A, B);
        if (squarefree(inv.W1 * inv.W2 * inv.W3).value_or(false)) pairs.push_back({A, B});
    }
    for (const auto& [A, B] : pairs) {
        for (int n : {2, 3}) {
            const auto v = is_monogenic(QuinParams(n, A, B), o.seed);
            t.expect(v.status == MonoStatus::Monogenic,
                     std::string(to_string(v.status)) + " at n=" + std::to_string(n) + " " + pair_str(A, B));
        }
    }
    return finish(t, "200 sampled pairs monogenic at n=2 and n=3");
}

Outcome lucas_pell_chain(const Options&) {
    Tally t;
    t.expect(verify_lf_identities(60), "Lucas/Fibonacci identities");
    for (long n = 1; n <= 30; ++n) {
        const auto [X, Y] = pell_solution(n);
        t.expect(X * X - 5 * Y * Y == -4, "Pell n=" + std::to_string(n));
    }
    for (long n = 1; n <= 200; ++n) {
        const Int L = lucas(2 * n - 1), F = fib(2 * n - 1);
        const std::string at = "n=" + std::to_string(n);
        // Residue table of L_{2n-1} and F_{2n-1} mod 4.
        const long l4 = mod_ui(L, 4), f4 = mod_ui(F, 4);
        t.expect((l4 == 1) == (n % 3 == 1) && (l4 == 3) == (n % 3 == 0), "L residue " + at);
        t.expect((f4 == 1) == (n % 3 != 2) && f4 != 3, "F residue " + at);
        // Every sign choice on the Pell curve landing in the residue class.
        std::vector<std::pair<Int, Int>> admissible;
        for (const Int& X : {L, Int(-L)}) {
            for (const Int& Y : {F, Int(-F)}) {
                const Int B = 5 * Y - 4;
                if (hypothesis_mod4(X, B)) admissible.emplace_back(X, B);
            }
        }
        const auto ab = ab_from_pell(n);
        if (n % 3 == 2) {
            t.expect(!ab && admissible.empty(), "expected no pair " + at);
        } else {
            t.expect(ab && admissible.size() == 1 && admissible[0] == *ab, "pair table " + at);
        }
        if (ab && n <= 55) {
            const Int& A = ab->first;
            const Int& B = ab->second;
            if (n % 6 == 1) {
                const Int l = lucas(n - 2);
                t.expect(B + 2 - 2 * A == l * l, "square W1 " + at);
            }
            if (n % 6 == 4) {
                const Int l = lucas(n + 1);
                t.expect(B + 2 + 2 * A == l * l, "square W2 " + at);
            }
        }
        if (ab && n >= 2 && n <= 30) {
            const QuinInvariants inv = invariants(ab->first, ab->second);
            const auto s1 = squarefree(inv.W1), s2 = squarefree(inv.W2);
            t.expect(s1 && s2 && !(*s1 && *s2), "W1, W2 both squarefree " + at);
        }
    }
    const auto ab4 = ab_from_pell(4);
    t.expect(ab4 && ab4->first == 29 && ab4->second == 61 && ab4->second + 2 + 2 * ab4->first == 121, "(29,61)");
    // Relations among P, Q, R.
    for (auto [P, Q, R] : {std::tuple{1, 11, 5}, std::tuple{1, 3, 13}, std::tuple{1, 1, 5}}) {
        t.expect(pqr_residual(P, Q, R, PqrCase::PosPos) == 0, "PosPos triple");
    }
    std::set<std::pair<long, long>> found;
    for (long R : {5L, 13L, 65L}) {
        for (long Q = 1; Q <= 200; ++Q) {
            if (pqr_residual(1, Q, R, PqrCase::PosPos) == 0) found.insert({Q, R});
        }
    }
    t.expect(found == std::set<std::pair<long, long>>{{11, 5}, {3, 13}, {1, 5}}, "P=1 search");
    std::vector<long> odd_sf;
    for (long v = 1; v <= 100; v += 2) {
        if (oracle::squarefree_trial(v)) odd_sf.push_back(v);
    }
    auto coprime = [](long a, long b) { return std::gcd(a, b) == 1; };
    std::size_t triples = 0;
    for (long P : odd_sf) {
        for (long Q : odd_sf) {
            if (!coprime(P, Q)) continue;
            for (long R : odd_sf) {
                if (!coprime(P, R) || !coprime(Q, R)) continue;
                ++triples;
                t.expect(pqr_residual(P, Q, R, PqrCase::NegNeg) != 0, "NegNeg solution");
            }
        }
    }
    t.expect(curve_tables_selfcheck(), "curve tables");
    return finish(t, "identities |N|<=60, Pell n<=30, pair table n<=200, square identities, 3 PosPos triples, 0 NegNeg in " +
                         std::to_string(triples) + " triples");
}

// Primitive irreducible polynomials of degree 1..3 with coefficients in
// [-5, 5] and positive leading coefficient.
std::vector<IntPoly> small_irreducibles() {
    std::vector<IntPoly> out;
    for (int d = 1; d <= 3; ++d) {
        std::vector<long> c(static_cast<std::size_t>(d + 1), -5);
        c.back() = 1;
        while (true) {
            std::vector<Int> ci(c.begin(), c.end());
            IntPoly p(ci);
            if (content_and_primitive(p).first == 1 && small_degree_irreducible(p)) out.push_back(p);
            std::size_t i = 0;
            while (i < c.size()) {
                const long hi = 5;
                if (c[i] < hi) {
                    ++c[i];
                    break;
                }
                c[i] = (i + 1 == c.size()) ? 1 : -5;
                ++i;
            }
            if (i == c.size()) break;
        }
    }
    return out;
}

Outcome density_checks(const Options& o) {
    Tally t;
    const FactoredPoly G6 = parse_factored("-1,4|5,12|5,-8,16");
    t.expect(obstruction_scan(G6).empty(), "obstruction for the equal-coefficient G");
    for (long k : {-2L, -1L, 0L, 1L, 2L}) {
        const Int K = k;
        const FactoredPoly G3({IntPoly(std::vector<Int>{1 - 16 * K, 8}), IntPoly(std::vector<Int>{16 * K + 5, 8}),
                               IntPoly(std::vector<Int>{-64 * K * K - 16 * K - 5, 32})});
        t.expect(obstruction_scan(G3).empty(), "obstruction for the family G at k=" + std::to_string(k));
    }
    const mpq_class cg = cg_truncated(G6, 100);
    t.expect(cg > 0 && cg < 1, "C_G out of (0,1)");
    const NgCount ng = ng_count(G6, 10000, kDefaultBudget);
    t.expect(ng.certified && ng.count >= 10, "N_G(10^4) = " + std::to_string(ng.count));

    // Exhaustive sweep: every obstruction satisfies l <= (N_l + 2)/2.
    const auto irr = small_irreducibles();
    std::vector<std::vector<std::size_t>> combos;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start, int deg) -> void {
        if (!cur.empty()) combos.push_back(cur);
        for (std::size_t i = start; i < irr.size(); ++i) {
            const int d = irr[i].degree();
            if (deg + d > 4) continue;
            cur.push_back(i);
            self(self, i + 1, deg + d);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::size_t obstructed = 0;
    std::uint64_t sampled = 0;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        Tally local;
        std::size_t local_obstructed = 0;
        std::uint64_t local_sampled = 0;
        for (std::size_t i = next++; i < combos.size(); i = next++) {
            std::vector<IntPoly> fs;
            for (std::size_t j : combos[i]) fs.push_back(irr[j]);
            const FactoredPoly G(fs);
            // A unit-wide obstruction at l forces l - 1 <= deg G roots mod l.
            for (std::uint64_t ell : {2u, 3u, 5u}) {
                const std::uint64_t rho = rho_ell2(G, ell);
                if (i % 997 == 0) {
                    ++local_sampled;
                    local.expect(rho == oracle::rho_enumerate(G.expand(), ell), "rho oracle");
                }
                if (rho != ell * (ell - 1)) continue;
                ++local_obstructed;
                const unsigned n_ell = linear_factor_count(G, ell);
                local.expect(n_ell == oracle::roots_with_multiplicity(G.expand(), ell), "N_l oracle");
                local.expect(2 * ell <= n_ell + 2, "obstruction above (N_l + 2)/2");
                local.expect(2 * ell <= static_cast<std::uint64_t>(G.degree()) + 2, "outside the candidate range");
            }
        }
        std::lock_guard lock(mu);
        obstructed += local_obstructed;
        sampled += local_sampled;
        t.checks += local.checks;
        if (local.failures && !t.failures) t.first = local.first;
        t.failures += local.failures;
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, o.jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::ostringstream os;
    os << "no obstruction for either G; C_G(100) = " << decimal_string(cg, 6) << "; N_G(10^4) = " << ng.count
       << "; bound l <= (N_l + 2)/2 holds over " << combos.size() << " polynomials (" << obstructed << " obstructions)";
    return finish(t, os.str());
}

Outcome fuzzed_properties(const Options& o) {
    Tally t;
    std::mt19937_64 rng(o.seed);
    const std::uint64_t small_primes[] = {2, 3, 5, 7, 11, 13};
    // Lift independence of the criterion.
    std::size_t divides = 0;
    for (int i = 0; i < 500; ++i) {
        IntPoly T;
        if (i % 2 == 0) {
            std::uniform_int_distribution<long> coef(-60, 60);
            long A = 0, B = 0;
            while (A == 0 || B == 0) {
                A = coef(rng);
                B = coef(rng);
            }
            T = build(QuinParams(2 + static_cast<int>(rng() % 2), A, B));
        } else {
            std::uniform_int_distribution<long> coef(-20, 20);
            const std::size_t deg = 2 + rng() % 5;
            std::vector<Int> c;
            for (std::size_t j = 0; j < deg; ++j) c.push_back(coef(rng));
            c.push_back(1);
            T = IntPoly(c);
        }
        const std::uint64_t q = small_primes[rng() % 6];
        const DedekindOutcome a = dedekind_check(T, q, o.seed, LiftConvention::Canonical);
        const DedekindOutcome b = dedekind_check(T, q, o.seed, LiftConvention::Symmetric);
        t.expect(a.divides_index == b.divides_index && a.gcd_witness == b.gcd_witness,
                 "lifts disagree for " + T.to_string() + " at q=" + std::to_string(q));
        divides += a.divides_index;
    }
    // Factor reassembly.
    const std::uint64_t moduli[] = {2, 3, 5, 7, 11, 13, 101, 1000000007ULL, 2305843009213693951ULL};
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t q = moduli[rng() % 9];
        const std::size_t deg = 1 + rng() % 10;
        std::vector<std::uint64_t> c;
        for (std::size_t j = 0; j <= deg; ++j) c.push_back(rng() % q);
        if (c.back() == 0) c.back() = 1;
        const ModPoly p(q, c);
        const ModFactorization f = factor_mod(p, o.seed + static_cast<std::uint64_t>(i));
        const std::string at = "q=" + std::to_string(q) + " p=" + p.to_string();
        t.expect(f.expand(q) == p, "reassembly " + at);
        for (std::size_t j = 0; j < f.factors.size(); ++j) {
            const ModPoly& g = f.factors[j].poly;
            t.expect(g.leading() == 1 && g.degree() >= 1, "factor not monic " + at);
            if (q <= 13) t.expect(oracle::irreducible_mod(g.coeffs(), q), "factor reducible " + at);
            if (j > 0) t.expect(!(f.factors[j - 1].poly == g), "repeated factor " + at);
        }
        if (q <= 13 && deg <= 8) {
            auto brute = oracle::trial_factor(p.monic().coeffs(), q);
            std::vector<std::pair<std::vector<std::uint64_t>, unsigned>> mine;
            for (const auto& fac : f.factors) mine.emplace_back(fac.poly.coeffs(), fac.multiplicity);
            std::sort(brute.begin(), brute.end());
            std::sort(mine.begin(), mine.end());
            t.expect(brute == mine, "trial division disagrees " + at);
        }
    }
    return finish(t, "500 lift comparisons agree (" + std::to_string(divides) +
                         " with q | index); 500 factorizations reassemble");
}

struct Criterion {
    const char* title;
    double limit;
    Outcome (*run)(const Options&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"closed-form discriminant equals the subresultant value, n = 2, 3, 4", 30, discriminant_formula},
    {"quartics irreducible with W1W2 = W3 = 5 (mod 8) on the residue-(1,1) grid", 10, quartic_grid_irreducible},
    {"quartic monogenic iff W1, W2, W3 squarefree on the residue-(1,1) grid", 60, monogenic_iff_squarefree},
    {"(1,1) is the only monogenic cyclic quartic for |A|,|B| <= 201", 300, cyclic_monogenic_unique},
    {"A=8k+1, B=8p+1 family: monogenic D4 with distinct fields", 60, dihedral_family},
    {"octic reducibility families are exact and complete", 300, octic_families},
    {"F_{3,A,A} irreducible and never monogenic for A != 1; F_{3,1,1} splits", 60, equal_coefficient_octics},
    {"A=4p+1 with G(p) squarefree gives the wreath product group", 60, wreath_family},
    {"off-residue pairs with W1W2W3 squarefree are monogenic at n = 2, 3", 120, off_residue_sample},
    {"Lucas/Fibonacci identities, Pell pairs and (P,Q,R) relations", 30, lucas_pell_chain},
    {"squarefree-value density: obstructions, C_G and N_G", 300, density_checks},
    {"lift independence and factor reassembly under fuzzing", 60, fuzzed_properties},
};

}  // namespace

std::string Result::line() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s / %.0f s", seconds, limit_seconds);
    std::string status = passed() ? "PASS" : "FAIL";
    char id_buf[8];
    std::snprintf(id_buf, sizeof id_buf, "AC-%02d", id);
    std::string out = status + " " + id_buf + " " + title + " (" + buf + "): " + detail;
    if (correct && seconds >= limit_seconds) out += " [time limit exceeded]";
    return out;
}

Result run_criterion(int id, const Options& opts) {
    if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
    const Criterion& c = kCriteria[id - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = c.run(opts);
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {id, c.title, out.correct, secs, c.limit, out.detail};
}

std::vector<Result> run_all(const Options& opts, const std::function<void(const Result&)>& on_result) {
    std::vector<Result> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id, opts));
        if (on_result) on_result(out.back());
    }
    return out;
}

}  // namespace rquint::acceptance
