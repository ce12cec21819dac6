#include "rquint/density.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rquint/modpoly.hpp"
#include "rquint/primes.hpp"

namespace rquint {

namespace {

std::vector<Int> positive_divisors(const Int& m) {
    auto f = factor_integer(m);
    if (!f) throw std::invalid_argument("could not factor " + m.get_str());
    std::vector<Int> divs{1};
    for (const auto& pp : f->factors) {
        const std::size_t n = divs.size();
        Int pk = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

IntPoly sign_normalized(const IntPoly& p) { return p.leading() < 0 ? -p : p; }

void require_small_prime(std::uint64_t ell) {
    if (!is_prime_u64(ell)) throw std::invalid_argument(std::to_string(ell) + " is not prime");
    if (ell >= 65536) throw std::invalid_argument("prime too large for residue enumeration");
}

}  // namespace

bool small_degree_irreducible(const IntPoly& p) {
    const int d = p.degree();
    if (d < 1 || d > 3) throw std::invalid_argument("small_degree_irreducible handles degrees 1..3");
    if (content_and_primitive(p).first != 1) return false;
    if (d == 1) return true;
    if (d == 2) {
        const Int disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
        return !(disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()));
    }
    // A cubic is reducible iff it has a rational root u/v with u | a0, v | a3.
    if (p.coeff(0) == 0) return false;
    const auto us = positive_divisors(abs(p.coeff(0)));
    const auto vs = positive_divisors(abs(p.coeff(3)));
    for (const auto& v : vs) {
        for (const auto& u0 : us) {
            for (const Int& u : {u0, Int(-u0)}) {
                Int acc = 0, vpow = 1;
                // sum a_i u^i v^(3-i), evaluated from the top.
                Int upow = 1;
                std::vector<Int> terms(4);
                for (int i = 0; i <= 3; ++i) {
                    terms[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i)) * upow;
                    upow *= u;
                }
                for (int i = 3; i >= 0; --i) {
                    acc += terms[static_cast<std::size_t>(i)] * vpow;
                    vpow *= v;
                }
                if (acc == 0) return false;
            }
        }
    }
    return true;
}

FactoredPoly::FactoredPoly(std::vector<IntPoly> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("G needs at least one factor");
    std::set<std::vector<Int>> seen;
    for (const auto& f : factors_) {
        if (f.degree() < 1 || f.degree() > 3) {
            throw std::invalid_argument("factor " + f.to_string() + " must have degree 1, 2 or 3");
        }
        if (content_and_primitive(f).first != 1) {
            throw std::invalid_argument("factor " + f.to_string() + " is not primitive");
        }
        if (!small_degree_irreducible(f)) {
            throw std::invalid_argument("factor " + f.to_string() + " is reducible over Z");
        }
        if (!seen.insert(sign_normalized(f).coeffs()).second) {
            throw std::invalid_argument("factor " + f.to_string() + " is repeated");
        }
    }
}

int FactoredPoly::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.degree();
    return d;
}

IntPoly FactoredPoly::expand() const {
    IntPoly acc = IntPoly::constant(1);
    for (const auto& f : factors_) acc *= f;
    return acc;
}

Int FactoredPoly::eval(const Int& t) const {
    Int acc = 1;
    for (const auto& f : factors_) acc *= f.eval(t);
    return acc;
}

std::uint64_t FactoredPoly::eval_mod(std::uint64_t t, std::uint64_t m) const {
    if (m == 0 || m >= (1ULL << 32)) throw std::invalid_argument("eval_mod modulus out of range");
    t %= m;
    std::uint64_t acc = 1 % m;
    Int r;
    for (const auto& f : factors_) {
        std::uint64_t v = 0;
        const auto& c = f.coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            mpz_fdiv_r_ui(r.get_mpz_t(), it->get_mpz_t(), m);
            v = (v * t + r.get_ui()) % m;
        }
        acc = acc * v % m;
    }
    return acc;
}

FactoredPoly parse_factored(const std::string& text) {
    std::vector<IntPoly> fs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('|', start);
        if (end == std::string::npos) end = text.size();
        fs.push_back(parse_poly(std::string_view(text).substr(start, end - start)));
        start = end + 1;
    }
    return FactoredPoly(std::move(fs));
}

std::uint64_t rho_ell2(const FactoredPoly& G, std::uint64_t ell) {
    require_small_prime(ell);
    const std::uint64_t m = ell * ell;
    std::uint64_t count = 0;
    for (std::uint64_t z = 1; z < m; ++z) {
        if (z % ell == 0) continue;
        if (G.eval_mod(z, m) == 0) ++count;
    }
    return count;
}

bool has_local_obstruction(const FactoredPoly& G, std::uint64_t ell) {
    return rho_ell2(G, ell) == ell * (ell - 1);
}

unsigned linear_factor_count(const FactoredPoly& G, std::uint64_t ell) {
    unsigned n = 0;
    for (const auto& f : G.factors()) {
        ModPoly r = mod_reduce(f, ell);
        if (r.degree() < 1) continue;
        for (const auto& fac : factor_mod(r).factors) {
            if (fac.poly.degree() == 1) n += fac.multiplicity;
        }
    }
    return n;
}

std::vector<ObstructionCandidate> obstruction_candidates(const FactoredPoly& G) {
    std::vector<ObstructionCandidate> out;
    const auto limit = static_cast<std::uint64_t>(G.degree() + 2) / 2;
    for (std::uint64_t ell : primes_up_to(limit)) {
        const unsigned n_ell = linear_factor_count(G, ell);
        const bool within = 2 * ell <= n_ell + 2;
        out.push_back({ell, n_ell, within, has_local_obstruction(G, ell)});
    }
    return out;
}

std::vector<std::uint64_t> obstruction_scan(const FactoredPoly& G) {
    std::vector<std::uint64_t> out;
    for (const auto& c : obstruction_candidates(G)) {
        if (c.obstructed) out.push_back(c.ell);
    }
    return out;
}

mpq_class cg_truncated(const FactoredPoly& G, std::uint64_t L) {
    if (L < 2) throw std::invalid_argument("truncation bound must be at least 2");
    mpq_class acc = 1;
    for (std::uint64_t ell : primes_up_to(L)) {
        const std::uint64_t phi = ell * (ell - 1);
        acc *= mpq_class(static_cast<long>(phi - rho_ell2(G, ell)), static_cast<long>(phi));
        acc.canonicalize();
    }
    return acc;
}

NgCount ng_count(const FactoredPoly& G, std::uint64_t X, std::uint64_t budget) {
    if (X < 2) throw std::invalid_argument("X must be at least 2");
    NgCount out{X, 0, 0, true};
    for (std::uint64_t p : primes_up_to(X)) {
        const Int t(static_cast<unsigned long>(p));
        std::vector<Int> values;
        bool zero = false;
        for (const auto& f : G.factors()) {
            values.push_back(f.eval(t));
            zero = zero || values.back() == 0;
        }
        if (zero) continue;  // 0 is divisible by every square
        // The product is squarefree iff every value is squarefree and the
        // values are pairwise coprime.
        bool coprime = true;
        for (std::size_t i = 0; i < values.size() && coprime; ++i) {
            for (std::size_t j = i + 1; j < values.size() && coprime; ++j) {
                Int g;
                mpz_gcd(g.get_mpz_t(), values[i].get_mpz_t(), values[j].get_mpz_t());
                coprime = g == 1;
            }
        }
        if (!coprime) continue;
        bool all = true;
        bool unknown = false;
        for (const auto& v : values) {
            auto sf = squarefree(v, budget);
            if (!sf) {
                unknown = true;
            } else if (!*sf) {
                all = false;
                break;
            }
        }
        if (!all) continue;
        if (unknown) {
            ++out.unknown;
            out.certified = false;
            continue;
        }
        ++out.count;
    }
    return out;
}

std::string decimal_string(const mpq_class& v, int digits) {
    Int scale = ipow(10, static_cast<unsigned long>(digits));
    Int scaled;
    mpz_mul(scaled.get_mpz_t(), v.get_num_mpz_t(), scale.get_mpz_t());
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), v.get_den_mpz_t());
    std::string s = Int(abs(scaled)).get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (scaled < 0 ? "-" : "") + s;
}

DensityReport density_report(const FactoredPoly& G, std::uint64_t L, std::uint64_t X, std::uint64_t budget) {
    DensityReport r;
    r.candidates = obstruction_candidates(G);
    for (const auto& c : r.candidates) {
        if (c.obstructed) r.obstruction_primes.push_back(c.ell);
    }
    for (std::uint64_t ell : primes_up_to(L)) r.rho_table.push_back({ell, rho_ell2(G, ell), ell * (ell - 1)});
    r.cg = cg_truncated(G, L);
    r.cg_decimal = decimal_string(r.cg, 12);
    r.truncation_bound = L;
    r.ng = ng_count(G, X, budget);
    r.certified = r.ng.certified;
    return r;
}

}  // namespace rquint
