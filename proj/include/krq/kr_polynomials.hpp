#pragma once

// Ideal-counting polynomials C_n(q): the number of codimension-n ideals of
// F_q[Z + Z]. Three independent constructions are provided so that each can
// check the others.

#include "krq/laurent.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace krq {

enum class Route { Coefficients, Divisors, GeneratingFunction };

std::string_view to_string(Route route);
/// Accepts "coeffs", "divisors", "gf". Throws std::invalid_argument otherwise.
Route parse_route(std::string_view name);

inline constexpr std::int64_t kDefaultGfCap = 500;

/// c[0] multiplies q^n; c[i] (i >= 1) multiplies q^(n+i) + q^(n-i).
struct KrCoefficients {
    std::int64_t n;
    std::vector<Integer> c;
};

/// Accumulates every representation n = r(r+1)/2, n = r(r+2i+1)/2 and
/// n = r(r+2i-1)/2, iterating r (O(sqrt n)) and solving for i.
KrCoefficients kr_coefficients(std::int64_t n);

/// C_n(q) from the coefficient expansion. Requires n >= 1.
LaurentPoly cn_via_coefficients(std::int64_t n);

/// q^-n C_n(q) as (1 - 1/q) sum_r (q^(2n/r - r) - 1) / q^((2n/r - r - 1)/2),
/// r over the odd divisors of 2n. Requires n >= 1.
LaurentPoly cn_via_divisors(std::int64_t n);

/// q^-n C_n(q) for n = 1..max_n, read off the product expansion modulo
/// t^(max_n + 1). Throws std::invalid_argument if max_n exceeds cap.
std::vector<LaurentPoly> cn_via_gf(std::int64_t max_n, std::int64_t cap = kDefaultGfCap);

/// C_n(q) itself (non-negative exponents) through the chosen route.
LaurentPoly cn_polynomial(std::int64_t n, Route route = Route::Divisors);

/// Exact C_n(q0).
Rational cn_eval(std::int64_t n, const Rational& q0, Route route = Route::Divisors);

/// C_n(q0)/q0^n - (1 - 1/q0) q0^n, evaluated from the divisor route.
Rational deviation(std::int64_t n, const Rational& q0);

}  // namespace krq
