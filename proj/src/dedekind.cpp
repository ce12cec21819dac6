#include "rquint/dedekind.hpp"

#include <map>
#include <stdexcept>

namespace rquint {

const char* to_string(MonoStatus s) {
    switch (s) {
        case MonoStatus::Monogenic: return "Monogenic";
        case MonoStatus::NotMonogenic: return "NotMonogenic";
        case MonoStatus::Reducible: return "Reducible";
        case MonoStatus::Undecided: return "Undecided";
    }
    return "?";
}

MonoStatus mono_status_from_string(const std::string& s) {
    for (MonoStatus m : {MonoStatus::Monogenic, MonoStatus::NotMonogenic, MonoStatus::Reducible, MonoStatus::Undecided}) {
        if (s == to_string(m)) return m;
    }
    throw std::invalid_argument("unknown monogenicity status '" + s + "'");
}

DedekindOutcome dedekind_check(const IntPoly& T, std::uint64_t q, std::uint64_t seed, LiftConvention lift) {
    if (T.is_zero() || T.leading() != 1) throw std::invalid_argument("dedekind_check requires a monic polynomial");
    const ModPoly tbar = mod_reduce(T, q);  // validates q
    const ModFactorization fac = factor_mod(tbar, seed);

    auto lifted = [lift](const ModPoly& p) { return lift == LiftConvention::Canonical ? p.lift() : p.lift_symmetric(); };

    IntPoly h1 = IntPoly::constant(1);
    ModPoly h1bar = ModPoly::one(q);
    for (const auto& f : fac.factors) {
        h1 *= lifted(f.poly);
        h1bar = h1bar * f.poly;
    }
    auto [h2bar, rem] = divmod(tbar, h1bar);
    if (!rem.is_zero()) throw std::logic_error("radical does not divide T mod q");
    IntPoly h2 = lifted(h2bar);

    IntPoly diff = h1 * h2 - T;
    const Int qz(std::to_string(q));
    std::vector<Int> fc = diff.coeffs();
    for (auto& c : fc) {
        if (!mpz_divisible_p(c.get_mpz_t(), qz.get_mpz_t())) {
            throw std::logic_error("h1*h2 - T is not divisible by q");
        }
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), qz.get_mpz_t());
    }
    IntPoly F(std::move(fc));

    ModPoly g = gcd_mod(gcd_mod(mod_reduce(F, q), h1bar), h2bar);
    const bool divides = g.degree() > 0;
    return DedekindOutcome{q, divides, std::move(g), std::move(h1), std::move(h2), std::move(F)};
}

MonogenicityVerdict is_monogenic(const QuinParams& params, std::uint64_t seed, std::uint64_t budget) {
    MonogenicityVerdict v;
    Irreducibility irr{};
    try {
        irr = irreducible(params);
    } catch (const std::invalid_argument& e) {
        v.status = MonoStatus::Undecided;
        v.reason = e.what();
        return v;
    }
    if (!irr.irreducible) {
        v.status = MonoStatus::Reducible;
        v.certificate = std::move(irr.certificate);
        v.reason = "reducible over Q (" + irr.method + ")";
        return v;
    }

    const QuinInvariants inv = invariants(params.A, params.B);
    const unsigned long quarter = 1UL << (params.n - 2);
    // Valuation of the closed-form discriminant at each candidate prime.
    std::map<Int, unsigned long> valuation;
    const std::pair<const Int*, unsigned long> parts[] = {{&inv.W1, 1}, {&inv.W2, 1}, {&inv.W3, 2}};
    for (const auto& [w, weight] : parts) {
        IntFactorization f = factor_integer_partial(*w, budget);
        if (!f.complete()) {
            v.status = MonoStatus::Undecided;
            v.reason = "factorization budget exhausted; unfactored cofactor " + f.cofactor.get_str();
            v.budget_exhausted = true;
            return v;
        }
        for (const auto& pp : f.factors) valuation[pp.prime] += quarter * weight * pp.exponent;
    }
    if (params.n >= 3) valuation[Int(2)] += (1UL << params.n) * static_cast<unsigned long>(params.n - 2);

    const IntPoly T = build(params);
    for (const auto& [prime, e] : valuation) {
        if (e < 2) continue;
        if (mpz_sizeinbase(prime.get_mpz_t(), 2) > 64) {
            v.status = MonoStatus::Undecided;
            v.reason = "prime " + prime.get_str() + " exceeds the 64-bit modulus range";
            return v;
        }
        const auto q = static_cast<std::uint64_t>(std::stoull(prime.get_str()));
        DedekindOutcome out = dedekind_check(T, q, seed);
        v.checked_primes.push_back(q);
        if (out.divides_index) v.obstruction_primes.push_back(q);
        v.outcomes.push_back(std::move(out));
    }
    if (v.obstruction_primes.empty()) {
        v.status = MonoStatus::Monogenic;
        v.reason = "no prime with q^2 | disc divides the index";
    } else {
        v.status = MonoStatus::NotMonogenic;
        v.reason = "index divisible by the obstruction primes";
    }
    return v;
}

}  // namespace rquint
