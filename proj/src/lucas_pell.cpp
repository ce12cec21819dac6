#include "rquint/lucas_pell.hpp"

#include <stdexcept>
#include <string>

#include "rquint/galois.hpp"
#include "rquint/quintinomial.hpp"

namespace rquint {

namespace {

void check_index(long N) {
    if (N > kMaxLucasIndex || N < -kMaxLucasIndex) {
        throw std::out_of_range("index " + std::to_string(N) + " exceeds " + std::to_string(kMaxLucasIndex));
    }
}

// (x_N) for x_0 = a, x_1 = b and N >= 0.
Int forward(long N, const Int& a, const Int& b) {
    Int x = a, y = b;
    for (long i = 0; i < N; ++i) {
        Int z = x + y;
        x = std::move(y);
        y = std::move(z);
    }
    return x;
}

bool odd(long N) { return N % 2 != 0; }

}  // namespace

Int lucas(long N) {
    check_index(N);
    Int v = forward(N < 0 ? -N : N, 2, 1);
    if (N < 0 && odd(N)) v = -v;
    return v;
}

Int fib(long N) {
    check_index(N);
    Int v = forward(N < 0 ? -N : N, 0, 1);
    if (N < 0 && !odd(N)) v = -v;
    return v;
}

bool verify_lf_identities(long Nmax) {
    if (Nmax < 1) throw std::invalid_argument("Nmax must be at least 1");
    check_index(2 * Nmax + 1);
    for (long N = -Nmax; N <= Nmax; ++N) {
        const Int L = lucas(N), F = fib(N);
        if (lucas(N + 1) != L + lucas(N - 1) || fib(N + 1) != F + fib(N - 1)) return false;
        if (5 * F != 2 * lucas(N + 1) - L) return false;
        const Int sign = odd(N) ? -1 : 1;
        if (lucas(2 * N) + 2 * sign != L * L) return false;
    }
    return true;
}

std::pair<Int, Int> pell_solution(long n) {
    if (n < 1) throw std::invalid_argument("pell_solution needs n >= 1");
    Int X = lucas(2 * n - 1), Y = fib(2 * n - 1);
    if (X * X - 5 * Y * Y != -4) throw std::logic_error("Pell contract violated");
    return {std::move(X), std::move(Y)};
}

std::optional<std::pair<Int, Int>> ab_from_pell(long n) {
    auto [L, F] = pell_solution(n);
    Int A, B = 5 * F - 4;
    switch (n % 3) {
        case 0: A = -L; break;
        case 1: A = L; break;
        default: return std::nullopt;
    }
    if (!hypothesis_mod4(A, B)) throw std::logic_error("pair off the residue class");
    const Int y = (B + 4) / 5;
    if (A * A - 5 * y * y != -4) throw std::logic_error("pair off the Pell curve");
    return std::make_pair(std::move(A), std::move(B));
}

const char* to_string(PqrCase c) { return c == PqrCase::PosPos ? "PosPos" : "NegNeg"; }

Int pqr_residual(const Int& P, const Int& Q, const Int& R, PqrCase c) {
    if (P < 1 || Q < 1 || R < 1) throw std::invalid_argument("P, Q, R must be positive");
    const Int base = P * P * Q * Q - 2 * P * Q * Q * R + Q * Q * R * R + 256;
    if (c == PqrCase::PosPos) return base - 32 * P * Q - 32 * Q * R - 16 * P * R;
    return base + 32 * P * Q - 16 * P * R + 32 * Q * R;
}

const std::vector<CurvePoint>& elliptic_points() {
    static const std::vector<CurvePoint> pts{{0, 0},   {1, 8},    {5, 20},   {13, 52},
                                             {16, 68}, {45, 300}, {65, 520}, {1573, 62348}};
    return pts;
}

const std::vector<long>& quartic_a_values() {
    static const std::vector<long> vals{-1, 0, -9, -11, 4};
    return vals;
}

bool curve_point_ok(const CurvePoint& pt) {
    const Int R = pt.R, y = pt.y;
    return y * y == R * R * R - 2 * R * R + 65 * R;
}

bool quartic_value_ok(long A) {
    const Int a = A;
    return is_perfect_square((a + 9) * (a + 1) * (a * a + 6 * a + 25));
}

bool curve_tables_selfcheck() {
    for (const auto& pt : elliptic_points()) {
        if (!curve_point_ok(pt)) return false;
    }
    for (long A : quartic_a_values()) {
        if (!quartic_value_ok(A)) return false;
    }
    return true;
}

}  // namespace rquint
