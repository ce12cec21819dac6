#include "rquint/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rquint/primes.hpp"

namespace rquint {

namespace {

using u64 = std::uint64_t;

u64 add_mod(u64 a, u64 b, u64 q) { return a >= q - b ? a - (q - b) : a + b; }
u64 sub_mod(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + (q - b); }
u64 inv_mod(u64 a, u64 q) {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    return powmod_u64(a, q - 2, q);
}

void check_prime(u64 q) {
    if (!is_prime_u64(q)) throw std::invalid_argument("modulus " + std::to_string(q) + " is not prime");
}

void check_same(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
}

}  // namespace

ModPoly::ModPoly(u64 q) : q_(q) { check_prime(q); }

ModPoly::ModPoly(u64 q, std::vector<u64> coeffs) : q_(q), c_(std::move(coeffs)) {
    check_prime(q);
    for (auto& c : c_) c %= q_;
    normalize();
}

ModPoly::ModPoly(u64 q, std::vector<u64> coeffs, bool) : q_(q), c_(std::move(coeffs)) { normalize(); }

ModPoly ModPoly::one(u64 q) { return ModPoly(q, {1}); }
ModPoly ModPoly::x(u64 q) { return ModPoly(q, {0, 1}); }

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(inv_mod(c_.back(), q_));
}

ModPoly ModPoly::scaled(u64 c) const {
    c %= q_;
    std::vector<u64> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = mulmod_u64(c_[i], c, q_);
    return ModPoly(q_, std::move(v), true);
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(q_, {}, true);
    std::vector<u64> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = mulmod_u64(c_[i], i % q_, q_);
    return ModPoly(q_, std::move(v), true);
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
    check_same(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = add_mod(c_[i], o.c_[i], q_);
    normalize();
    return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
    check_same(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = sub_mod(c_[i], o.c_[i], q_);
    normalize();
    return *this;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    check_same(a, b);
    const u64 q = a.q_;
    if (a.is_zero() || b.is_zero()) return ModPoly(q, {}, true);
    std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r[i + j] = add_mod(r[i + j], mulmod_u64(a.c_[i], b.c_[j], q), q);
        }
    }
    return ModPoly(q, std::move(r), true);
}

IntPoly ModPoly::lift() const {
    std::vector<Int> v;
    v.reserve(c_.size());
    for (u64 c : c_) v.emplace_back(Int(std::to_string(c)));
    return IntPoly(std::move(v));
}

IntPoly ModPoly::lift_symmetric() const {
    std::vector<Int> v;
    v.reserve(c_.size());
    const u64 half = q_ / 2;
    for (u64 c : c_) {
        Int z(std::to_string(c));
        if (c > half) z -= Int(std::to_string(q_));
        v.push_back(std::move(z));
    }
    return IntPoly(std::move(v));
}

std::string ModPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    return s;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    check_same(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const u64 q = a.modulus();
    if (a.degree() < b.degree()) return {ModPoly(q), a};
    std::vector<u64> r = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const u64 inv = inv_mod(d.back(), q);
    std::vector<u64> quot(r.size() - db, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        u64 t = mulmod_u64(r[k + db], inv, q);
        quot[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = sub_mod(r[k + j], mulmod_u64(t, d[j], q), q);
    }
    r.resize(db);
    return {ModPoly(q, std::move(quot)), ModPoly(q, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }
ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    ModPoly result = ModPoly::one(base.modulus()) % m;
    ModPoly b = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

ModPoly gcd_mod(const ModPoly& a, const ModPoly& b) {
    check_same(a, b);
    ModPoly x = a;
    ModPoly y = b;
    while (!y.is_zero()) {
        ModPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ModPoly mod_reduce(const IntPoly& p, const Int& q) {
    if (q < 2 || mpz_sizeinbase(q.get_mpz_t(), 2) > 64) {
        throw std::invalid_argument("modulus " + q.get_str() + " outside the supported prime range");
    }
    return mod_reduce(p, static_cast<u64>(std::stoull(q.get_str())));
}

ModPoly mod_reduce(const IntPoly& p, u64 q) {
    check_prime(q);
    Int qz(std::to_string(q));
    std::vector<u64> v;
    v.reserve(p.coeffs().size());
    Int r;
    for (const auto& c : p.coeffs()) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), qz.get_mpz_t());
        v.push_back(std::stoull(r.get_str()));
    }
    return ModPoly(q, std::move(v));
}

ModPoly ModFactorization::expand(u64 q) const {
    ModPoly acc = ModPoly(q, {unit});
    for (const auto& f : factors) {
        for (unsigned i = 0; i < f.multiplicity; ++i) acc = acc * f.poly;
    }
    return acc;
}

namespace {

// In characteristic q the only polynomials with zero derivative are
// polynomials in x^q; their q-th root just drops to every q-th coefficient
// since a^q = a in F_q.
ModPoly qth_root(const ModPoly& p) {
    const u64 q = p.modulus();
    std::vector<u64> v;
    for (std::size_t i = 0; i < p.coeffs().size(); i += q) v.push_back(p.coeffs()[i]);
    return ModPoly(q, std::move(v));
}

void sqf_rec(const ModPoly& f, unsigned scale, std::vector<std::pair<ModPoly, unsigned>>& out) {
    if (f.degree() <= 0) return;
    const u64 q = f.modulus();
    ModPoly d = f.derivative();
    if (d.is_zero()) {
        sqf_rec(qth_root(f), scale * static_cast<unsigned>(q), out);
        return;
    }
    ModPoly c = gcd_mod(f, d);
    ModPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd_mod(w, c);
        ModPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (c.degree() > 0) sqf_rec(qth_root(c), scale * static_cast<unsigned>(q), out);
}

// Splits a squarefree monic f into products of irreducibles of equal degree.
std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) {
    std::vector<std::pair<ModPoly, int>> out;
    const u64 q = f.modulus();
    const Int qz(std::to_string(q));
    const ModPoly x = ModPoly::x(q);
    ModPoly h = x % f;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = powmod(h, qz, f);
        ModPoly g = gcd_mod(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

ModPoly random_poly(u64 q, int below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(0, q - 1);
    std::vector<u64> v(static_cast<std::size_t>(below_degree));
    for (auto& c : v) c = dist(rng);
    return ModPoly(q, std::move(v));
}

void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const u64 q = f.modulus();
    Int exponent;
    if (q != 2) {
        Int qd;
        mpz_ui_pow_ui(qd.get_mpz_t(), q, static_cast<unsigned long>(d));
        exponent = (qd - 1) / 2;
    }
    for (;;) {
        ModPoly a = random_poly(q, f.degree(), rng);
        if (a.degree() <= 0) continue;
        ModPoly b(q);
        if (q == 2) {
            // Absolute trace a + a^2 + ... + a^(2^(d-1)) mod f.
            ModPoly t = a;
            b = a;
            for (int i = 1; i < d; ++i) {
                t = (t * t) % f;
                b += t;
            }
        } else {
            b = powmod(a, exponent, f) - ModPoly::one(q);
        }
        ModPoly g = gcd_mod(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

bool canonical_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

}  // namespace

std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& monic_p) {
    std::vector<std::pair<ModPoly, unsigned>> out;
    sqf_rec(monic_p.monic(), 1, out);
    return out;
}

ModFactorization factor_mod(const ModPoly& p, std::uint64_t seed) {
    if (p.is_zero()) throw std::invalid_argument("factor_mod of zero polynomial");
    ModFactorization result;
    result.unit = p.leading();
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : squarefree_decomposition(p.monic())) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<ModPoly> irr;
            equal_degree(block, d, rng, irr);
            for (auto& f : irr) result.factors.push_back({std::move(f), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const ModFactor& a, const ModFactor& b) { return canonical_less(a.poly, b.poly); });
    return result;
}

std::vector<std::pair<int, unsigned>> factor_pattern(const IntPoly& p, std::uint64_t q) {
    if (p.is_zero()) throw std::invalid_argument("factor_pattern of zero polynomial");
    ModPoly r = mod_reduce(p, q);
    if (r.degree() != p.degree()) {
        throw std::invalid_argument("leading coefficient vanishes mod " + std::to_string(q));
    }
    std::vector<std::pair<int, unsigned>> out;
    for (const auto& f : factor_mod(r).factors) out.emplace_back(f.poly.degree(), f.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rquint
