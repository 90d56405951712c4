#include "krq/kr_polynomials.hpp"

#include "krq/numtheory.hpp"
#include "krq/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace krq {

std::string_view to_string(Route route)
{
    switch (route) {
    case Route::Coefficients: return "coeffs";
    case Route::Divisors: return "divisors";
    case Route::GeneratingFunction: return "gf";
    }
    return "?";
}

Route parse_route(std::string_view name)
{
    if (name == "coeffs") return Route::Coefficients;
    if (name == "divisors") return Route::Divisors;
    if (name == "gf") return Route::GeneratingFunction;
    throw std::invalid_argument("unknown route: " + std::string(name));
}

namespace {

void require_positive(std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("n must be >= 1");
}

long alternating(std::int64_t r) { return (r % 2 == 0) ? 1 : -1; }

}  // namespace

KrCoefficients kr_coefficients(std::int64_t n)
{
    require_positive(n);
    KrCoefficients out{n, std::vector<Integer>(static_cast<std::size_t>(n) + 1)};
    const std::int64_t two_n = 2 * n;
    for (std::int64_t r = 1; r * (r + 1) <= two_n; ++r) {
        if (r * (r + 1) == two_n) out.c[0] += 2 * alternating(r);
        // n = r(r + 2i + 1)/2  <=>  2ir = 2n - r(r + 1)
        const std::int64_t upper = two_n - r * (r + 1);
        if (upper > 0 && upper % (2 * r) == 0) out.c[upper / (2 * r)] += alternating(r);
        // n = r(r + 2i - 1)/2  <=>  2ir = 2n - r(r - 1)
        const std::int64_t lower = two_n - r * (r - 1);
        if (lower > 0 && lower % (2 * r) == 0) out.c[lower / (2 * r)] -= alternating(r);
    }
    return out;
}

LaurentPoly cn_via_coefficients(std::int64_t n)
{
    const KrCoefficients kc = kr_coefficients(n);
    std::vector<Term> terms;
    terms.push_back({n, kc.c[0]});
    for (std::int64_t i = 1; i <= n; ++i) {
        const Integer& c = kc.c[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        terms.push_back({n + i, c});
        terms.push_back({n - i, c});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly cn_via_divisors(std::int64_t n)
{
    require_positive(n);
    const std::int64_t two_n = 2 * n;
    std::vector<Term> terms;
    for (const Integer& divisor : odd_divisors(Integer(static_cast<long>(two_n)))) {
        const std::int64_t r = to_int64(divisor);
        const std::int64_t e = two_n / r - r;
        // r odd and 2n/r even, so e is odd and the half-exponents are integers.
        if ((e - 1) % 2 != 0) throw std::logic_error("odd-divisor term with half-integer exponent");
        const std::int64_t up = (e + 1) / 2;
        const std::int64_t down = (e - 1) / 2;
        // (1 - 1/q)(q^up - q^-down) = q^up - q^down - q^-down + q^-up
        terms.push_back({up, 1});
        terms.push_back({down, -1});
        terms.push_back({-down, -1});
        terms.push_back({-up, 1});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

std::vector<LaurentPoly> cn_via_gf(std::int64_t max_n, std::int64_t cap)
{
    if (max_n < 0) throw std::invalid_argument("generating-function order must be >= 0");
    if (max_n > cap)
        throw std::invalid_argument("generating-function order " + std::to_string(max_n) +
                                    " exceeds cap " + std::to_string(cap));
    const TruncatedSeries series = ideal_count_product(static_cast<std::size_t>(max_n));
    return {series.coefficients().begin() + 1, series.coefficients().end()};
}

LaurentPoly cn_polynomial(std::int64_t n, Route route)
{
    switch (route) {
    case Route::Coefficients: return cn_via_coefficients(n);
    case Route::Divisors: return cn_via_divisors(n).shifted(n);
    case Route::GeneratingFunction:
        require_positive(n);
        return cn_via_gf(n, std::max(n, kDefaultGfCap)).back().shifted(n);
    }
    throw std::logic_error("unreachable route");
}

Rational cn_eval(std::int64_t n, const Rational& q0, Route route)
{
    return laurent_eval(cn_polynomial(n, route), q0);
}

Rational deviation(std::int64_t n, const Rational& q0)
{
    // Subtract (1 - 1/q) q^n = q^n - q^(n-1) symbolically before evaluating.
    LaurentPoly d = cn_via_divisors(n);
    d -= LaurentPoly::from_terms({{n, 1}, {n - 1, -1}});
    return laurent_eval(d, q0);
}

}  // namespace krq
