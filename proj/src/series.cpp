#include "krq/series.hpp"

#include <stdexcept>

namespace krq {

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_(order + 1)
{
    coefficients_[0] = LaurentPoly::constant(1);
}

void TruncatedSeries::multiply_by(SeriesFactor factor, std::size_t m)
{
    if (m == 0) throw std::invalid_argument("series factor step must be positive");
    const std::size_t top = order();
    if (m > top) return;

    switch (factor) {
    case SeriesFactor::OneMinusTmSquared:
        // s[n] <- s[n] - 2 s[n-m] + s[n-2m]; descending so sources are still old.
        for (std::size_t n = top; n >= m; --n) {
            coefficients_[n].add_scaled_shifted(coefficients_[n - m], -2, 0);
            if (n >= 2 * m) coefficients_[n].add_scaled_shifted(coefficients_[n - 2 * m], 1, 0);
        }
        break;
    case SeriesFactor::InverseOneMinusQTm:
    case SeriesFactor::InverseOneMinusQInvTm: {
        // Geometric series: s[n] <- s[n] + q^(+-1) s'[n-m], ascending so the
        // source is already updated.
        const std::int64_t shift = factor == SeriesFactor::InverseOneMinusQTm ? 1 : -1;
        for (std::size_t n = m; n <= top; ++n)
            coefficients_[n].add_scaled_shifted(coefficients_[n - m], 1, shift);
        break;
    }
    }
}

TruncatedSeries series_mul_factor(TruncatedSeries s, SeriesFactor factor, std::size_t m)
{
    s.multiply_by(factor, m);
    return s;
}

TruncatedSeries ideal_count_product(std::size_t order)
{
    TruncatedSeries s(order);
    for (std::size_t m = 1; m <= order; ++m) {
        s.multiply_by(SeriesFactor::OneMinusTmSquared, m);
        s.multiply_by(SeriesFactor::InverseOneMinusQTm, m);
        s.multiply_by(SeriesFactor::InverseOneMinusQInvTm, m);
    }
    return s;
}

}  // namespace krq
