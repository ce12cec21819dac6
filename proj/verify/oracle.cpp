#include "oracle.hpp"

#include <stdexcept>

namespace rquint::oracle {

namespace {

Int bareiss_det(std::vector<std::vector<Int>> M) {
    const std::size_t n = M.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && M[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = std::move(v);
            }
        }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

std::uint64_t reduce(const Int& v, std::uint64_t q) { return mpz_fdiv_ui(v.get_mpz_t(), q); }

void trim(SmallPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of f by the monic g over F_q; sets quotient.
SmallPoly rem_monic(SmallPoly f, const SmallPoly& g, std::uint64_t q, SmallPoly* quotient) {
    const std::size_t dg = g.size() - 1;
    SmallPoly quo(f.size() >= g.size() ? f.size() - dg : 0, 0);
    for (std::size_t i = f.size(); i-- > dg;) {
        const std::uint64_t c = f[i] % q;
        if (c == 0) continue;
        quo[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) {
            f[i - dg + j] = (f[i - dg + j] + (q - c) * g[j]) % q;
        }
    }
    f.resize(std::min(f.size(), dg));
    trim(f);
    trim(quo);
    if (quotient) *quotient = std::move(quo);
    return f;
}

// Next monic polynomial of degree d in lexicographic order; false when done.
bool next_monic(SmallPoly& g, std::uint64_t q) {
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        if (++g[i] < q) return true;
        g[i] = 0;
    }
    return false;
}

// Nested search for Kronecker values with integer divided differences.
struct KroneckerSearch {
    const IntPoly& f;
    int m;
    std::vector<Int> nodes;
    std::vector<std::vector<Int>> choices;  // signed divisors of f(node)
    std::vector<Int> values;                // chosen values of g - x^m
    std::vector<std::vector<Int>> table;    // divided difference rows
    std::optional<IntPoly> found;

    void run(std::size_t depth) {
        if (found) return;
        if (depth == nodes.size()) {
            // Newton form -> coefficients.
            IntPoly r;
            for (std::size_t j = nodes.size(); j-- > 0;) {
                r = r * IntPoly(std::vector<Int>{-nodes[j], 1}) + IntPoly::constant(table[j][0]);
            }
            const IntPoly g = r + IntPoly::monomial(1, static_cast<std::size_t>(m));
            if (divide_exact(f, g)) found = g;
            return;
        }
        Int xm = 1;
        for (int i = 0; i < m; ++i) xm *= nodes[depth];
        for (const Int& v : choices[depth]) {
            table[depth].assign(depth + 1, 0);
            table[depth][depth] = v - xm;
            bool ok = true;
            // table[depth][j] = f[x_j .. x_depth]
            for (std::size_t j = depth; j-- > 0 && ok;) {
                Int num = table[depth][j + 1] - table[depth - 1][j];
                Int den = nodes[depth] - nodes[j];
                if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
                    ok = false;
                    break;
                }
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                table[depth][j] = std::move(num);
            }
            if (ok) run(depth + 1);
            if (found) return;
        }
    }
};

std::vector<Int> signed_divisors(const Int& v) {
    std::vector<Int> out;
    Int a = abs(v);
    for (Int d = 1; d * d <= a; ++d) {
        if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
            Int e = a / d;
            out.push_back(d);
            out.push_back(-d);
            if (e != d) {
                out.push_back(e);
                out.push_back(-e);
            }
        }
    }
    return out;
}

}  // namespace

Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m + n == 0) return 1;
    const std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Int>> M(N, std::vector<Int>(N, 0));
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(static_cast<std::size_t>(m - i));
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= n; ++i) M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g.coeff(static_cast<std::size_t>(n - i));
    }
    return bareiss_det(std::move(M));
}

Int discriminant(const IntPoly& f) {
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant needs positive degree");
    Int r = sylvester_resultant(f, f.derivative());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    return (d * (d - 1) / 2) % 2 ? Int(-r) : r;
}

std::optional<IntPoly> kronecker_factor(const IntPoly& f) {
    if (f.degree() < 2 || f.leading() != 1) throw std::invalid_argument("kronecker_factor needs monic degree >= 2");
    for (int m = 1; m <= f.degree() / 2; ++m) {
        KroneckerSearch s{f, m, {}, {}, {}, {}, std::nullopt};
        for (long x = 0; static_cast<int>(s.nodes.size()) < m; x = x > 0 ? -x : 1 - x) {
            const Int v = f.eval(x);
            if (v == 0) return IntPoly(std::vector<Int>{-Int(x), 1});
            s.nodes.push_back(x);
            s.choices.push_back(signed_divisors(v));
        }
        s.table.resize(s.nodes.size());
        s.run(0);
        if (s.found) return s.found;
    }
    return std::nullopt;
}

std::vector<std::pair<SmallPoly, unsigned>> trial_factor(SmallPoly f, std::uint64_t q) {
    for (auto& c : f) c %= q;
    trim(f);
    if (f.empty() || f.back() != 1) throw std::invalid_argument("trial_factor needs a monic polynomial");
    std::vector<std::pair<SmallPoly, unsigned>> out;
    for (std::size_t d = 1; f.size() > 1; ++d) {
        // No factor of degree < d remains, so a cofactor of degree < 2d is
        // irreducible.
        if (2 * d > f.size() - 1) {
            out.emplace_back(f, 1);
            break;
        }
        SmallPoly g(d + 1, 0);
        g[d] = 1;
        do {
            unsigned e = 0;
            SmallPoly quo;
            while (f.size() > d && rem_monic(f, g, q, &quo).empty()) {
                f = quo;
                ++e;
            }
            if (e) out.emplace_back(g, e);
        } while (next_monic(g, q));
    }
    return out;
}

bool irreducible_mod(const SmallPoly& f0, std::uint64_t q) {
    SmallPoly f = f0;
    for (auto& c : f) c %= q;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        SmallPoly g(d + 1, 0);
        g[d] = 1;
        do {
            // f need not be monic; remainder by monic g is still well defined.
            if (rem_monic(f, g, q, nullptr).empty()) return false;
        } while (next_monic(g, q));
    }
    return true;
}

std::uint64_t rho_enumerate(const IntPoly& G, std::uint64_t ell) {
    const std::uint64_t m = ell * ell;
    const Int M(std::to_string(m));
    std::uint64_t count = 0;
    for (std::uint64_t z = 0; z < m; ++z) {
        if (z % ell == 0) continue;
        const Int v = G.eval(Int(std::to_string(z)));
        if (mpz_divisible_p(v.get_mpz_t(), M.get_mpz_t())) ++count;
    }
    return count;
}

unsigned roots_with_multiplicity(const IntPoly& G, std::uint64_t ell) {
    SmallPoly f;
    for (const auto& c : G.coeffs()) f.push_back(reduce(c, ell));
    trim(f);
    if (f.empty()) throw std::invalid_argument("polynomial vanishes mod l");
    unsigned count = 0;
    for (std::uint64_t r = 0; r < ell; ++r) {
        // Divide by (x - r) while r is a root.
        while (f.size() > 1) {
            std::uint64_t acc = 0;
            SmallPoly quo(f.size() - 1, 0);
            for (std::size_t i = f.size(); i-- > 0;) {
                acc = (acc * r + f[i]) % ell;
                if (i > 0) quo[i - 1] = acc;
            }
            if (acc != 0) break;
            f = quo;
            ++count;
        }
    }
    return count;
}

bool squarefree_trial(const Int& m) {
    if (m == 0) return false;
    Int a = abs(m);
    if (a >= Int("1000000000000")) throw std::invalid_argument("squarefree_trial is limited to |m| < 10^12");
    for (unsigned long p = 2; Int(p) * p <= a; ++p) {
        if (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
            mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
            if (mpz_divisible_ui_p(a.get_mpz_t(), p)) return false;
        }
    }
    return true;
}

}  // namespace rquint::oracle
