#include "rquint/factor_int.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rquint/primes.hpp"

namespace rquint {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> table = primes_up_to(kTrialLimit);
    return table;
}

bool probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's cycle finding with batched gcds. Consumes one budget unit per
// polynomial step; returns false when the budget is gone.
bool brent_rho(const Int& n, std::uint64_t& budget, Int& divisor) {
    constexpr unsigned long kBatch = 128;
    auto step = [&n](Int& v, unsigned long c) {
        v *= v;
        v += c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, ys, q = 1, g = 1, diff;
        unsigned long r = 1;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                if (budget == 0) return false;
                --budget;
                step(y, c);
            }
            unsigned long k = 0;
            do {
                ys = y;
                const unsigned long lim = std::min(kBatch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    if (budget == 0) return false;
                    --budget;
                    step(y, c);
                    diff = x - y;
                    q *= abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                if (budget == 0) return false;
                --budget;
                step(ys, c);
                diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) {
            divisor = g;
            return true;
        }
    }
}

// Returns (root, k) with n = root^k and k maximal, or (n, 1).
std::pair<Int, unsigned> perfect_power(const Int& n) {
    if (!mpz_perfect_power_p(n.get_mpz_t())) return {n, 1};
    const auto bits = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
    for (unsigned k = bits; k >= 2; --k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return {root, k};
    }
    return {n, 1};
}

}  // namespace

IntFactorization factor_integer_partial(const Int& m, std::uint64_t budget) {
    if (m == 0) throw std::invalid_argument("factor_integer of zero");
    IntFactorization out;
    out.sign = m < 0 ? -1 : 1;
    Int n = abs(m);
    std::map<Int, unsigned> found;

    for (std::uint64_t p : trial_primes()) {
        if (n == 1) break;
        if (Int(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) found[Int(static_cast<unsigned long>(p))] += e;
    }

    // Composite work list of (value, exponent multiplier).
    const Int kTrialSquare = Int(static_cast<unsigned long>(kTrialLimit)) * static_cast<unsigned long>(kTrialLimit);
    std::vector<std::pair<Int, unsigned>> work;
    if (n > 1) work.emplace_back(n, 1);
    while (!work.empty()) {
        auto [v, mult] = work.back();
        work.pop_back();
        if (v == 1) continue;
        // No prime below 10^6 survives trial division, so anything up to
        // 10^12 is prime.
        if (v <= kTrialSquare || probable_prime(v)) {
            found[v] += mult;
            continue;
        }
        auto [root, k] = perfect_power(v);
        if (k > 1) {
            work.emplace_back(root, mult * k);
            continue;
        }
        Int d;
        if (!brent_rho(v, budget, d)) {
            out.cofactor *= ipow(v, mult);
            continue;
        }
        work.emplace_back(d, mult);
        work.emplace_back(v / d, mult);
    }
    for (auto& [p, e] : found) out.factors.push_back({p, e});
    return out;
}

std::optional<IntFactorization> factor_integer(const Int& m, std::uint64_t budget) {
    IntFactorization f = factor_integer_partial(m, budget);
    if (!f.complete()) return std::nullopt;
    return f;
}

std::optional<bool> squarefree(const Int& m, std::uint64_t budget) {
    if (m == 0) throw std::invalid_argument("squarefree of zero");
    IntFactorization f = factor_integer_partial(m, budget);
    for (const auto& pp : f.factors) {
        if (pp.exponent >= 2) return false;
    }
    if (!f.complete()) {
        if (mpz_perfect_power_p(f.cofactor.get_mpz_t())) return false;
        return std::nullopt;
    }
    return true;
}

}  // namespace rquint
