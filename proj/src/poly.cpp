#include "rquint/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rquint {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
    std::vector<Int> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Int> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::substitute_power(unsigned k) const {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
    if (coeffs_.empty()) return {};
    std::vector<Int> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::negate_variable() const {
    IntPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Int& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += coeffs_[i].get_str();
    }
    return s;
}

std::string IntPoly::pretty(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

IntPoly parse_poly(std::string_view text) {
    std::vector<Int> v;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string tok(text.substr(start, end - start));
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }),
                  tok.end());
        // Accept a unicode minus sign from copy-pasted input.
        for (std::size_t pos; (pos = tok.find("\xE2\x88\x92")) != std::string::npos;) tok.replace(pos, 3, "-");
        if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
        Int c;
        if (tok.empty() || c.set_str(tok, 10) != 0) {
            throw std::invalid_argument("malformed polynomial coefficient '" + tok + "'");
        }
        v.push_back(std::move(c));
        start = end + 1;
    }
    return IntPoly(std::move(v));
}

std::optional<IntPoly> divide_exact(const IntPoly& dividend, const IntPoly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (dividend.is_zero()) return IntPoly{};
    if (dividend.degree() < divisor.degree()) return std::nullopt;
    std::vector<Int> rem = dividend.coeffs();
    const auto& d = divisor.coeffs();
    const std::size_t dd = d.size() - 1;
    std::vector<Int> quot(rem.size() - dd);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int& top = rem[k + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) return std::nullopt;
        mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j) {
            mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), d[j].get_mpz_t());
        }
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (rem[i] != 0) return std::nullopt;
    }
    return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<Int> r = a.coeffs();
    const auto& d = b.coeffs();
    const Int& lc = d.back();
    const std::size_t db = d.size() - 1;
    // Each step multiplies the running remainder by lc(b), so the total
    // factor is lc(b)^(deg a - deg b + 1).
    for (std::size_t top = r.size(); top-- > db;) {
        Int t = r[top];
        for (auto& c : r) c *= lc;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(r[top - db + j].get_mpz_t(), t.get_mpz_t(), d[j].get_mpz_t());
        }
        r.pop_back();
    }
    return IntPoly(std::move(r));
}

Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

namespace {

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly exact_div(const IntPoly& p, const Int& c) {
    std::vector<Int> v = p.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(v));
}

}  // namespace

std::pair<Int, IntPoly> content_and_primitive(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("content of zero polynomial");
    Int c = content(p);
    return {c, exact_div(p, c)};
}

Int resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    IntPoly a = p;
    IntPoly b = q;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    }
    Int ca = content(a);
    Int cb = content(b);
    a = exact_div(a, ca);
    b = exact_div(b, cb);
    Int t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));

    Int g = 1;
    Int h = 1;
    while (b.degree() > 0) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return 0;
        Int divisor = g * ipow(h, static_cast<unsigned long>(delta));
        b = exact_div(r, divisor);
        g = a.leading();
        // h <- g^delta / h^(delta-1), exact by the subresultant theorem.
        Int num = ipow(g, static_cast<unsigned long>(delta));
        Int den = ipow(h, static_cast<unsigned long>(delta - 1));
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    // b is a nonzero constant here.
    const auto da = static_cast<unsigned long>(a.degree());
    Int num = ipow(b.leading(), da);
    Int den = da ? ipow(h, da - 1) : Int(1);
    Int res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return sign * t * res;
}

Int discriminant(const IntPoly& p) {
    const int d = p.degree();
    if (d < 2) throw std::invalid_argument("discriminant requires degree >= 2");
    Int r = resultant(p, p.derivative());
    Int out;
    mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) out = -out;
    return out;
}

}  // namespace rquint

namespace rquint {

IntPoly shift_by_one(const IntPoly& p) {
    // Horner evaluation at (x + 1).
    IntPoly acc;
    const IntPoly xp1{1, 1};
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xp1 + IntPoly::constant(*it);
    return acc;
}

namespace {

int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

// Runs [s, e] covering [lo, hi] on which k -> p(k) is monotone.
std::vector<std::pair<Int, Int>> monotone_runs(const IntPoly& p, const Int& lo, const Int& hi) {
    if (p.degree() <= 1 || hi <= lo) return {{lo, hi}};
    const IntPoly step = shift_by_one(p) - p;  // p(k+1) - p(k)
    std::vector<Int> cuts;
    for (const auto& [s, e] : monotone_runs(step, lo, hi - 1)) {
        const Int ds = step.eval(s);
        const Int de = step.eval(e);
        if (ds == de) continue;
        const bool increasing = ds < de;
        auto past = [&](const Int& k) {
            const Int v = step.eval(k);
            return increasing ? v >= 0 : v <= 0;
        };
        if (past(s) || !past(e)) continue;
        // First k in (s, e] where the step changes direction.
        Int a = s, b = e;
        while (b - a > 1) {
            Int mid = (a + b) / 2;
            if (past(mid)) b = mid; else a = mid;
        }
        cuts.push_back(b);
    }
    std::vector<std::pair<Int, Int>> runs;
    Int start = lo;
    for (const auto& c : cuts) {
        if (c > start && c < hi) {
            runs.emplace_back(start, c);
            start = c;
        }
    }
    runs.emplace_back(start, hi);
    return runs;
}

}  // namespace

std::vector<Int> integer_roots(const IntPoly& p, const Int& lo, const Int& hi) {
    if (p.is_zero()) throw std::invalid_argument("integer_roots of zero polynomial");
    std::vector<Int> roots;
    if (hi < lo || p.degree() == 0) return roots;
    for (const auto& [s, e] : monotone_runs(p, lo, hi)) {
        const Int ps = p.eval(s);
        const Int pe = p.eval(e);
        if (sgn(ps) * sgn(pe) > 0) continue;
        // Monotone run with a sign change or a zero at an endpoint: bisect
        // for the first k where the value reaches zero from ps's side.
        const bool increasing = ps < pe;
        Int a = s, b = e;
        auto reached = [&](const Int& k) {
            const Int v = p.eval(k);
            return increasing ? v >= 0 : v <= 0;
        };
        if (!reached(a)) {
            while (b - a > 1) {
                Int mid = (a + b) / 2;
                if (reached(mid)) b = mid; else a = mid;
            }
            a = b;
        }
        for (Int k = a; k <= e && p.eval(k) == 0; ++k) roots.push_back(k);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Int coefficient_norm_ceil(const IntPoly& p) {
    Int sum = 0;
    for (const auto& c : p.coeffs()) sum += c * c;
    Int r;
    mpz_sqrt(r.get_mpz_t(), sum.get_mpz_t());
    if (r * r < sum) ++r;
    return r;
}

}  // namespace rquint
