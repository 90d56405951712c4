#pragma once

#include "krq/exact.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace krq {

struct Term {
    std::int64_t exponent;
    Integer coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Integer Laurent polynomial in q. Terms are kept sorted by exponent with no
/// zero coefficients, so the empty term list is the zero polynomial and
/// equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;

    /// Sorts, merges equal exponents and drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);
    static LaurentPoly monomial(Integer coefficient, std::int64_t exponent);
    static LaurentPoly constant(Integer value) { return monomial(std::move(value), 0); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    std::optional<std::int64_t> min_exponent() const;
    std::optional<std::int64_t> max_exponent() const;
    Integer coefficient(std::int64_t exponent) const;

    /// Multiplies by q^offset.
    LaurentPoly shifted(std::int64_t offset) const;
    /// Substitutes q -> 1/q (negates every exponent).
    LaurentPoly reflected() const;

    /// *this += scale * q^shift * other, in one merge pass.
    void add_scaled_shifted(const LaurentPoly& other, long scale, std::int64_t shift);

    /// Exact division by (q - 1). Returns the quotient and the remainder,
    /// which is the value at q = 1.
    std::pair<LaurentPoly, Integer> divide_by_q_minus_one() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Integer& scalar);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= Integer(-1); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::vector<Term> terms_;
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Exact value at q = q0. Throws ZeroEvaluationPoint when q0 == 0 and a has a
/// negative exponent.
Rational laurent_eval(const LaurentPoly& a, const Rational& q0);

/// Smallest exponent at which a and b differ, if any.
std::optional<std::int64_t> first_difference(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace krq
