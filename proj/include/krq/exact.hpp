#pragma once

// Exact integers and rationals. Both are GMP values; rationals are kept in
// canonical form (lowest terms, positive denominator) at all times.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace krq {

using Integer = mpz_class;
using Rational = mpq_class;

class ZeroEvaluationPoint : public std::domain_error {
public:
    ZeroEvaluationPoint()
        : std::domain_error("evaluation at q = 0 of a polynomial with negative exponents") {}
};

/// Builds num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a" or "a/b" (optional leading sign, decimal digits only).
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text; integers print without the "/1".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer pow(const Integer& base, std::uint64_t exponent);

/// base^exponent for any integer exponent. Negative exponents need base != 0.
Rational pow(const Rational& base, std::int64_t exponent);

inline int sign(const Integer& value) { return sgn(value); }
inline int sign(const Rational& value) { return sgn(value); }

/// Compares |a| with |b|: negative, zero or positive.
inline int compare_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline Rational abs(const Rational& value) { return ::abs(value); }
inline Integer abs(const Integer& value) { return ::abs(value); }

/// Exact conversion; throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& value);

}  // namespace krq
