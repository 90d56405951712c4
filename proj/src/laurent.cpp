#include "krq/laurent.hpp"

#include <algorithm>
#include <map>

namespace krq {

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    LaurentPoly out;
    out.terms_.reserve(terms.size());
    for (auto& term : terms) {
        if (!out.terms_.empty() && out.terms_.back().exponent == term.exponent) {
            out.terms_.back().coefficient += term.coefficient;
            if (out.terms_.back().coefficient == 0) out.terms_.pop_back();
        } else if (term.coefficient != 0) {
            out.terms_.push_back(std::move(term));
        }
    }
    return out;
}

LaurentPoly LaurentPoly::monomial(Integer coefficient, std::int64_t exponent)
{
    LaurentPoly out;
    if (coefficient != 0) out.terms_.push_back({exponent, std::move(coefficient)});
    return out;
}

std::optional<std::int64_t> LaurentPoly::min_exponent() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exponent;
}

std::optional<std::int64_t> LaurentPoly::max_exponent() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.back().exponent;
}

Integer LaurentPoly::coefficient(std::int64_t exponent) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, std::int64_t e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
    return 0;
}

LaurentPoly LaurentPoly::shifted(std::int64_t offset) const
{
    LaurentPoly out = *this;
    for (auto& term : out.terms_) term.exponent += offset;
    return out;
}

LaurentPoly LaurentPoly::reflected() const
{
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.terms_.push_back({-it->exponent, it->coefficient});
    return out;
}

void LaurentPoly::add_scaled_shifted(const LaurentPoly& other, long scale, std::int64_t shift)
{
    if (scale == 0 || other.terms_.empty()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto mine = terms_.begin();
    auto theirs = other.terms_.begin();
    Integer scratch;
    while (mine != terms_.end() || theirs != other.terms_.end()) {
        if (theirs == other.terms_.end() ||
            (mine != terms_.end() && mine->exponent < theirs->exponent + shift)) {
            merged.push_back(std::move(*mine));
            ++mine;
            continue;
        }
        const std::int64_t e = theirs->exponent + shift;
        scratch = theirs->coefficient * scale;
        ++theirs;
        if (mine != terms_.end() && mine->exponent == e) {
            scratch += mine->coefficient;
            ++mine;
        }
        if (scratch != 0) merged.push_back({e, scratch});
    }
    terms_ = std::move(merged);
}

std::pair<LaurentPoly, Integer> LaurentPoly::divide_by_q_minus_one() const
{
    if (terms_.empty()) return {LaurentPoly{}, Integer(0)};
    // Synthetic division of q^-lo * P by (q - 1), walking exponents downwards.
    const std::int64_t lo = terms_.front().exponent;
    std::vector<Term> quotient;
    Integer carry = 0;
    auto it = terms_.rbegin();
    for (std::int64_t e = terms_.back().exponent; e > lo; --e) {
        if (it != terms_.rend() && it->exponent == e) {
            carry += it->coefficient;
            ++it;
        }
        if (carry != 0) quotient.push_back({e - 1, carry});
    }
    carry += terms_.front().coefficient;
    std::reverse(quotient.begin(), quotient.end());
    LaurentPoly q;
    q.terms_ = std::move(quotient);
    return {std::move(q), carry};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    add_scaled_shifted(other, 1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other)
{
    add_scaled_shifted(other, -1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) term.coefficient *= scalar;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return laurent_mul(a, b); }

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    const std::int64_t lo = *a.min_exponent() + *b.min_exponent();
    const std::int64_t hi = *a.max_exponent() + *b.max_exponent();
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;

    std::vector<Term> out;
    if (span <= 4 * a.size() * b.size() + 64) {
        std::vector<Integer> dense(span);
        for (const auto& x : a.terms())
            for (const auto& y : b.terms())
                mpz_addmul(dense[x.exponent + y.exponent - lo].get_mpz_t(),
                           x.coefficient.get_mpz_t(), y.coefficient.get_mpz_t());
        for (std::uint64_t i = 0; i < span; ++i)
            if (dense[i] != 0) out.push_back({lo + static_cast<std::int64_t>(i), std::move(dense[i])});
    } else {
        std::map<std::int64_t, Integer> sparse;
        for (const auto& x : a.terms())
            for (const auto& y : b.terms())
                sparse[x.exponent + y.exponent] += x.coefficient * y.coefficient;
        for (auto& [e, c] : sparse)
            if (c != 0) out.push_back({e, std::move(c)});
    }
    return LaurentPoly::from_terms(std::move(out));
}

Rational laurent_eval(const LaurentPoly& a, const Rational& q0)
{
    if (a.is_zero()) return 0;
    const std::int64_t lo = *a.min_exponent();
    const std::int64_t hi = *a.max_exponent();
    if (q0 == 0) {
        if (lo < 0) throw ZeroEvaluationPoint();
        return Rational(a.coefficient(0));
    }
    // Horner over the numerator x and denominator y of q0 separately:
    // acc = sum_e c_e x^(e-lo) y^(hi-e), then value = acc * x^lo / y^hi.
    const Integer x = q0.get_num();
    const Integer y = q0.get_den();
    const auto terms = a.terms();
    Integer acc = 0;
    Integer y_power = 1;
    std::int64_t previous = hi;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto gap = static_cast<std::uint64_t>(previous - it->exponent);
        if (gap > 0) {
            acc *= pow(x, gap);
            if (y != 1) y_power *= pow(y, gap);
        }
        acc += it->coefficient * y_power;
        previous = it->exponent;
    }
    Integer num = acc;
    Integer den = 1;
    if (lo >= 0) num *= pow(x, static_cast<std::uint64_t>(lo));
    else den *= pow(x, static_cast<std::uint64_t>(-lo));
    if (hi >= 0) den *= pow(y, static_cast<std::uint64_t>(hi));
    else num *= pow(y, static_cast<std::uint64_t>(-hi));
    return make_rational(num, den);
}

std::optional<std::int64_t> first_difference(const LaurentPoly& a, const LaurentPoly& b)
{
    const LaurentPoly diff = a - b;
    return diff.min_exponent();
}

}  // namespace krq
