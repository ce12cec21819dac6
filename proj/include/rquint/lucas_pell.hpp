#pragma once

// Lucas and Fibonacci numbers with signed indices, the solutions of
// X^2 - 5Y^2 = -4, the coefficient pairs (A, B) they induce, the (P, Q, R)
// relations and the embedded curve point tables.

#include <optional>
#include <utility>
#include <vector>

#include "rquint/poly.hpp"

namespace rquint {

inline constexpr long kMaxLucasIndex = 10000;

/// Throws std::out_of_range when |N| exceeds kMaxLucasIndex.
Int lucas(long N);
Int fib(long N);

/// 5 F_N = 2 L_{N+1} - L_N and L_{2N} + 2(-1)^N = L_N^2 for all |N| <= Nmax,
/// plus the two-sided recurrence.
bool verify_lf_identities(long Nmax);

/// (L_{2n-1}, F_{2n-1}); asserts X^2 - 5Y^2 = -4.
std::pair<Int, Int> pell_solution(long n);

/// The pair (A, B) attached to the n-th solution, or nullopt when n = 2
/// (mod 3). Asserts A = B = 1 (mod 4) and A^2 - 5((B+4)/5)^2 = -4.
std::optional<std::pair<Int, Int>> ab_from_pell(long n);

enum class PqrCase { PosPos, NegNeg };

const char* to_string(PqrCase c);

Int pqr_residual(const Int& P, const Int& Q, const Int& R, PqrCase c);

struct CurvePoint {
    long R;
    long y;
};

/// Points on y^2 = R^3 - 2R^2 + 65R.
const std::vector<CurvePoint>& elliptic_points();
/// A with (A+9)(A+1)(A^2+6A+25) a square.
const std::vector<long>& quartic_a_values();

bool curve_point_ok(const CurvePoint& pt);
bool quartic_value_ok(long A);
bool curve_tables_selfcheck();

}  // namespace rquint
