#pragma once

// Dense univariate polynomials over Z with exact GMP coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rquint {

using Int = mpz_class;

/// Polynomial with integer coefficients stored in ascending degree order.
/// The zero polynomial is the empty coefficient vector; otherwise the last
/// stored coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero past the degree.
    Int coeff(std::size_t i) const;
    const Int& leading() const;

    Int eval(const Int& x) const;
    IntPoly derivative() const;
    /// p(x^k).
    IntPoly substitute_power(unsigned k) const;
    /// p(-x).
    IntPoly negate_variable() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Int& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
    friend IntPoly operator*(const Int& c, IntPoly a) { return a *= c; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Comma-separated ascending coefficients ("1,1,1,1,1").
    std::string to_string() const;
    /// Human-readable descending form ("x^4 + x^3 - 2*x + 1").
    std::string pretty(char var = 'x') const;

private:
    void normalize();

    std::vector<Int> coeffs_;
};

/// Parses the comma-separated ascending coefficient format. Throws
/// std::invalid_argument on malformed input.
IntPoly parse_poly(std::string_view text);

/// Exact division; nullopt unless divisor divides dividend in Z[x].
std::optional<IntPoly> divide_exact(const IntPoly& dividend, const IntPoly& divisor);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Resultant via the subresultant PRS; matches the Sylvester determinant
/// Res(p, q) with p's coefficients in the first rows.
Int resultant(const IntPoly& p, const IntPoly& q);

/// (-1)^(d(d-1)/2) Res(p, p') / lc(p); requires degree >= 2.
Int discriminant(const IntPoly& p);

/// Positive content and primitive part; the sign stays on the primitive part.
std::pair<Int, IntPoly> content_and_primitive(const IntPoly& p);

Int ipow(const Int& base, unsigned long exp);

/// p(x + 1).
IntPoly shift_by_one(const IntPoly& p);

/// All integers k in [lo, hi] with p(k) = 0, ascending. Exact: the search
/// splits [lo, hi] into runs where the integer sequence p(k) is monotone
/// (via the sign pattern of the forward difference) and bisects each run.
/// Throws on the zero polynomial.
std::vector<Int> integer_roots(const IntPoly& p, const Int& lo, const Int& hi);

/// Ceiling of the Euclidean norm of the coefficient vector.
Int coefficient_norm_ceil(const IntPoly& p);

}  // namespace rquint
