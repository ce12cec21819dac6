#include "rquint/quintinomial.hpp"

#include <stdexcept>

#include "rquint/error.hpp"

namespace rquint {

namespace {

Int mod4(const Int& v) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), 4);
    return r;
}

IntPoly quartic(const Int& A, const Int& B) { return IntPoly(std::vector<Int>{1, A, B, A, 1}); }

bool exact_sqrt(const Int& v, Int& root) {
    if (v < 0 || !mpz_perfect_square_p(v.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return true;
}

bool halve(const Int& v, Int& out) {
    if (!mpz_even_p(v.get_mpz_t())) return false;
    mpz_divexact_ui(out.get_mpz_t(), v.get_mpz_t(), 2);
    return true;
}

bool divide(const Int& num, const Int& den, Int& out) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return true;
}

std::vector<IntPoly> substitute_all(const std::vector<IntPoly>& fs, unsigned k) {
    std::vector<IntPoly> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(f.substitute_power(k));
    return out;
}

// w = S0^2 - x S1^2 for the monic quartic w with S0 = x^2 + p x + r,
// S1 = u x + v. Coefficient matching gives r^2 = 1, u^2 = 2p - A,
// v^2 = 2pr - A and p^2 + 2r - 2uv = B. Since S0(z^2) + z S1(z^2) divides
// w(z^2), Mignotte bounds |p| by 6 ||w||.
std::optional<std::pair<IntPoly, IntPoly>> capelli_condition1(const Int& A, const Int& B) {
    const IntPoly w = quartic(A, B);
    const Int bound = 6 * coefficient_norm_ceil(w);
    for (int r : {1, -1}) {
        for (Int p = -bound; p <= bound; ++p) {
            Int u, v;
            if (!exact_sqrt(2 * p - A, u) || !exact_sqrt(2 * p * r - A, v)) continue;
            for (const Int& vv : {v, Int(-v)}) {
                if (p * p + 2 * r - 2 * u * vv != B) continue;
                IntPoly s0(std::vector<Int>{Int(r), p, 1});
                IntPoly s1(std::vector<Int>{vv, u});
                IntPoly x = IntPoly::monomial(1, 1);
                if (s0 * s0 - x * s1 * s1 == w) return std::make_pair(s0, s1);
            }
        }
    }
    return std::nullopt;
}

// Smallest E >= 0 with E^4 >= c^4 base^power, i.e. ceil(c base^(power/4)).
Int fourth_root_bound(unsigned long c, const Int& base, unsigned long power) {
    Int x;
    mpz_pow_ui(x.get_mpz_t(), base.get_mpz_t(), power);
    x *= ipow(Int(c), 4);
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), 4);
    if (ipow(r, 4) < x) ++r;
    return r;
}

// w(x^2) = S0^2 - x S1^2 with S0 = x^4 + a x^3 + b x^2 + c x + d and
// S1 = e x^3 + f x^2 + g x + h. U(z) = S0(z^2) + z S1(z^2) is a monic
// factor of w(z^4) with U(0) = d = +-1. Roots of w satisfy
// 1/M <= |rho| <= M with M = 1 + max(|A|, |B|) (Cauchy, and w is
// reciprocal), so roots of U have modulus in [1/R, R] with R = M^(1/4).
// Hence |e| <= 8R, |h| = |sum of reciprocal roots| <= 8R, |f| <= 56R^3.
// The x^7 and x^1 equations force a = e^2/2 and c = d h^2/2, so a is even
// and b = (A - a^2 + 2ef)/2 needs A even. For e != 0 the x^6 and x^5
// equations make b and g functions of f, and the x^4 equation becomes
//   4f^3 - 4f(2c + a beta) + e beta^2 + 4e(2ac + 2d - 2eh - B) = 0,
// beta = A - a^2 + 2ef = 2b.
std::optional<std::pair<IntPoly, IntPoly>> capelli_condition2(const Int& A, const Int& B) {
    const IntPoly w = quartic(A, B);
    if (mpz_odd_p(A.get_mpz_t())) return std::nullopt;
    const IntPoly target = w.substitute_power(2);
    const Int M = 1 + (abs(A) > abs(B) ? Int(abs(A)) : Int(abs(B)));
    const Int eh_bound = fourth_root_bound(8, M, 1);
    const Int f_bound = fourth_root_bound(56, M, 3);
    const IntPoly x = IntPoly::monomial(1, 1);

    auto accept = [&](const Int& a, const Int& b, const Int& c, const Int& d, const Int& e, const Int& f,
                      const Int& g, const Int& h) -> std::optional<std::pair<IntPoly, IntPoly>> {
        IntPoly s0(std::vector<Int>{d, c, b, a, 1});
        IntPoly s1(std::vector<Int>{h, g, f, e});
        if (s0 * s0 - x * s1 * s1 == target) return std::make_pair(s0, s1);
        return std::nullopt;
    };

    for (int d : {1, -1}) {
        for (Int e = 0; e <= eh_bound; e += 2) {
            const Int a = e * e / 2;
            for (Int h = -eh_bound - mpz_odd_p(eh_bound.get_mpz_t()); h <= eh_bound; h += 2) {
                const Int c = d * h * h / 2;
                if (e != 0) {
                    const IntPoly beta(std::vector<Int>{A - a * a, 2 * e});
                    const IntPoly fpoly = x;
                    IntPoly cubic = IntPoly::monomial(4, 3);
                    cubic -= 4 * fpoly * (IntPoly::constant(2 * c) + a * beta);
                    cubic += e * beta * beta;
                    cubic += IntPoly::constant(4 * e * (2 * a * c + 2 * d - 2 * e * h - B));
                    for (const Int& f : integer_roots(cubic, -f_bound, f_bound)) {
                        Int b, g;
                        if (!halve(A - a * a + 2 * e * f, b)) continue;
                        if (!divide(2 * c + 2 * a * b - f * f, 2 * e, g)) continue;
                        if (auto hit = accept(a, b, c, Int(d), e, f, g, h)) return hit;
                    }
                } else {
                    Int b;
                    if (!halve(A, b)) continue;
                    Int f;
                    if (!exact_sqrt(2 * c, f)) continue;
                    for (const Int& ff : {f, Int(-f)}) {
                        std::vector<Int> gs;
                        if (ff != 0) {
                            Int g;
                            if (divide(b * b + 2 * d - B, 2 * ff, g)) gs.push_back(g);
                        } else {
                            Int g;
                            if (exact_sqrt(2 * b * c, g)) {
                                gs.push_back(g);
                                gs.push_back(-g);
                            }
                        }
                        for (const Int& g : gs) {
                            if (auto hit = accept(a, b, c, Int(d), e, ff, g, h)) return hit;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

QuinParams::QuinParams(int n_, Int A_, Int B_) : n(n_), A(std::move(A_)), B(std::move(B_)) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (A == 0 || B == 0) throw std::invalid_argument("A*B must be nonzero");
}

const char* to_string(CertKind k) {
    switch (k) {
        case CertKind::LinearRoot: return "LinearRoot";
        case CertKind::QuadraticSplit: return "QuadraticSplit";
        case CertKind::FamilyCase1: return "FamilyCase1";
        case CertKind::FamilyCase2: return "FamilyCase2";
        case CertKind::CapelliCase1: return "CapelliCase1";
        case CertKind::CapelliCase2: return "CapelliCase2";
    }
    return "?";
}

CertKind cert_kind_from_string(const std::string& s) {
    for (CertKind k : {CertKind::LinearRoot, CertKind::QuadraticSplit, CertKind::FamilyCase1, CertKind::FamilyCase2,
                       CertKind::CapelliCase1, CertKind::CapelliCase2}) {
        if (s == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown certificate kind '" + s + "'");
}

ReducibilityCert::ReducibilityCert(CertKind kind_, IntPoly target_, std::vector<IntPoly> factors_,
                                   std::optional<std::pair<Int, Int>> st_,
                                   std::optional<std::pair<IntPoly, IntPoly>> s0s1_)
    : kind(kind_), target(std::move(target_)), factors(std::move(factors_)), st(std::move(st_)),
      s0s1(std::move(s0s1_)) {
    if (factors.size() < 2) throw std::logic_error("certificate needs at least two factors");
    for (const auto& f : factors) {
        if (f.degree() < 1) throw std::logic_error("certificate factor is constant");
    }
    if (product() != target) throw std::logic_error("certificate factors do not reproduce the target");
}

IntPoly ReducibilityCert::product() const {
    IntPoly acc = IntPoly::constant(1);
    for (const auto& f : factors) acc *= f;
    return acc;
}

bool hypothesis_mod4(const Int& A, const Int& B) { return mod4(A) == 1 && mod4(B) == 1; }

IntPoly build(const QuinParams& params) {
    if (params.n > kMaxBuildN) {
        throw std::invalid_argument("n = " + std::to_string(params.n) + " exceeds the build limit " +
                                    std::to_string(kMaxBuildN));
    }
    const std::size_t quarter = std::size_t{1} << (params.n - 2);
    std::vector<Int> c(4 * quarter + 1);
    c[0] = 1;
    c[quarter] = params.A;
    c[2 * quarter] = params.B;
    c[3 * quarter] = params.A;
    c[4 * quarter] = 1;
    return IntPoly(std::move(c));
}

IntPoly build_g_quartic(const Int& C, const Int& D) { return IntPoly(std::vector<Int>{1, -C, D, C, 1}); }

QuinInvariants invariants(const Int& A, const Int& B) {
    QuinInvariants inv;
    inv.W1 = B + 2 - 2 * A;
    inv.W2 = B + 2 + 2 * A;
    inv.W3 = A * A - 4 * B + 8;
    mpz_gcd(inv.P.get_mpz_t(), inv.W1.get_mpz_t(), inv.W3.get_mpz_t());
    mpz_gcd(inv.Q.get_mpz_t(), inv.W1.get_mpz_t(), inv.W2.get_mpz_t());
    mpz_gcd(inv.R.get_mpz_t(), inv.W2.get_mpz_t(), inv.W3.get_mpz_t());
    return inv;
}

Int disc_formula(const QuinParams& params) {
    if (params.n > kMaxBuildN) throw std::invalid_argument("n exceeds the build limit");
    const QuinInvariants inv = invariants(params.A, params.B);
    const unsigned long quarter = 1UL << (params.n - 2);
    const unsigned long two_exp = (1UL << params.n) * static_cast<unsigned long>(params.n - 2);
    Int power_of_two;
    mpz_ui_pow_ui(power_of_two.get_mpz_t(), 2, two_exp);
    return power_of_two * ipow(inv.W1 * inv.W2 * inv.W3 * inv.W3, quarter);
}

Irreducibility quartic_irreducible(const Int& A, const Int& B) {
    const IntPoly w = quartic(A, B);
    const QuinInvariants inv = invariants(A, B);
    // A monic reciprocal quartic with constant term 1 can only have the
    // rational roots +1 and -1, where it takes the values W2 and W1.
    for (int root : {1, -1}) {
        const Int& value = root == 1 ? inv.W2 : inv.W1;
        if (value != 0) continue;
        IntPoly lin{-root, 1};
        auto rest = divide_exact(w, lin);
        return {false, ReducibilityCert(CertKind::LinearRoot, w, {lin, *rest}), "quartic-system"};
    }
    // (x^2 + a x + 1)(x^2 + c x + 1): a + c = A, ac = B - 2, discriminant W3.
    Int s;
    if (exact_sqrt(inv.W3, s)) {
        IntPoly f1(std::vector<Int>{1, (A + s) / 2, 1});
        IntPoly f2(std::vector<Int>{1, (A - s) / 2, 1});
        return {false, ReducibilityCert(CertKind::QuadraticSplit, w, {f1, f2}), "quartic-system"};
    }
    // (x^2 + a x - 1)(x^2 + c x - 1) has x^3 and x coefficients a + c and
    // -(a + c), so it needs A = 0 and then ac = B + 2 with c = -a.
    if (A == 0 && exact_sqrt(-4 * B - 8, s)) {
        IntPoly f1(std::vector<Int>{-1, s / 2, 1});
        IntPoly f2(std::vector<Int>{-1, -s / 2, 1});
        return {false, ReducibilityCert(CertKind::QuadraticSplit, w, {f1, f2}), "quartic-system"};
    }
    return {true, std::nullopt, "quartic-system"};
}

std::optional<ReducibilityCert> octic_family_membership(const Int& A, const Int& B) {
    if (!hypothesis_mod4(A, B)) {
        throw std::invalid_argument("octic_family_membership requires A = B = 1 (mod 4)");
    }
    const IntPoly target = build(QuinParams(3, A, B));
    const Int base = (A - 1) / 4;
    const Int absB = abs(B);
    Int prev1, prev2;
    // s and -1-s give the same family member, so s >= 0 suffices. Both
    // candidates are convex quadratics in u = s^2 + s, so once one has risen
    // above |B| from one s to the next it never comes back.
    for (long s = 0;; ++s) {
        const Int u = Int(s) * s + s;
        const Int t = base + u;
        const Int b1 = 4 * t * t + 4 * t - 8 * u + 1;
        const Int b2 = 4 * t * t + 4 * t + 8 * u + 5;
        const Int c = 2 * s + 1;
        const Int d = 2 * t + 1;
        if (b1 == B) {
            return ReducibilityCert(CertKind::FamilyCase1, target, {quartic(c, d), quartic(-c, d)},
                                    std::make_pair(Int(s), t));
        }
        if (b2 == B) {
            return ReducibilityCert(CertKind::FamilyCase2, target, {build_g_quartic(c, d), build_g_quartic(-c, d)},
                                    std::make_pair(Int(s), t));
        }
        if (s > 0 && b1 > absB && b1 > prev1 && b2 > absB && b2 > prev2) break;
        prev1 = b1;
        prev2 = b2;
    }
    return std::nullopt;
}

std::optional<ReducibilityCert> capelli_reducible(const Int& A, const Int& B, int k) {
    if (k < 1) throw std::invalid_argument("capelli_reducible requires k >= 1");
    if (k + 2 > kMaxBuildN) throw std::invalid_argument("k exceeds the build limit");
    if (!quartic_irreducible(A, B).irreducible) {
        throw ReducibleError("F_{2," + A.get_str() + "," + B.get_str() + "} is reducible");
    }
    const IntPoly target = build(QuinParams(k + 2, A, B));
    const IntPoly x = IntPoly::monomial(1, 1);
    if (auto w = capelli_condition1(A, B)) {
        // w(x^2) = (S0(x^2) - x S1(x^2)) (S0(x^2) + x S1(x^2)).
        const IntPoly s0 = w->first.substitute_power(2);
        const IntPoly xs1 = x * w->second.substitute_power(2);
        auto fs = substitute_all({s0 - xs1, s0 + xs1}, 1U << (k - 1));
        return ReducibilityCert(CertKind::CapelliCase1, target, std::move(fs), std::nullopt, *w);
    }
    if (k >= 2) {
        if (auto w = capelli_condition2(A, B)) {
            const IntPoly s0 = w->first.substitute_power(2);
            const IntPoly xs1 = x * w->second.substitute_power(2);
            auto fs = substitute_all({s0 - xs1, s0 + xs1}, 1U << (k - 2));
            return ReducibilityCert(CertKind::CapelliCase2, target, std::move(fs), std::nullopt, *w);
        }
    }
    return std::nullopt;
}

Irreducibility irreducible(const QuinParams& params) {
    if (params.n > kMaxIrreducibilityN) {
        throw std::invalid_argument("irreducibility decisions are limited to n <= " +
                                    std::to_string(kMaxIrreducibilityN));
    }
    Irreducibility base = quartic_irreducible(params.A, params.B);
    if (params.n == 2) return base;
    if (params.n == 3 && hypothesis_mod4(params.A, params.B)) {
        auto cert = octic_family_membership(params.A, params.B);
        if (cert) return {false, std::move(cert), "octic-family"};
        return {true, std::nullopt, "octic-family"};
    }
    if (!base.irreducible) {
        const auto& c = *base.certificate;
        const unsigned k = 1U << (params.n - 2);
        ReducibilityCert lifted(c.kind, build(params), substitute_all(c.factors, k));
        return {false, std::move(lifted), "quartic-system"};
    }
    if (auto cert = capelli_reducible(params.A, params.B, params.n - 2)) {
        return {false, std::move(cert), "capelli"};
    }
    return {true, std::nullopt, "capelli"};
}

}  // namespace rquint
