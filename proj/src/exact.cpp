#include "krq/exact.hpp"

#include <cctype>

namespace krq {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

Integer parse_integer(std::string_view text)
{
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    if (start == text.size()) throw std::invalid_argument("empty integer literal");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
    // mpz_class rejects a leading '+'.
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const Integer& value) { return value.get_str(10); }

Integer pow(const Integer& base, std::uint64_t exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational pow(const Rational& base, std::int64_t exponent)
{
    const std::uint64_t magnitude = exponent < 0 ? -static_cast<std::uint64_t>(exponent)
                                                 : static_cast<std::uint64_t>(exponent);
    const Integer num = pow(Integer(base.get_num()), magnitude);
    const Integer den = pow(Integer(base.get_den()), magnitude);
    if (exponent >= 0) return Rational(num, den);  // already coprime
    if (num == 0) throw ZeroEvaluationPoint();
    return make_rational(den, num);
}

std::int64_t to_int64(const Integer& value)
{
    if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return value.get_si();
}

}  // namespace krq
