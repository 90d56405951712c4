#pragma once

#include "krq/laurent.hpp"

#include <cstdint>
#include <vector>

namespace krq {

/// The three factor shapes of the ideal-count product
/// prod_m (1 - t^m)^2 / ((1 - q t^m)(1 - q^-1 t^m)).
enum class SeriesFactor {
    OneMinusTmSquared,     // (1 - t^m)^2
    InverseOneMinusQTm,    // 1 / (1 - q t^m)
    InverseOneMinusQInvTm  // 1 / (1 - q^-1 t^m)
};

/// Power series in t with Laurent-polynomial coefficients, exact modulo
/// t^(order + 1). The order is fixed at construction.
class TruncatedSeries {
public:
    /// The constant series 1.
    explicit TruncatedSeries(std::size_t order);

    std::size_t order() const { return coefficients_.size() - 1; }
    const LaurentPoly& coefficient(std::size_t n) const { return coefficients_.at(n); }
    const std::vector<LaurentPoly>& coefficients() const { return coefficients_; }

    /// In-place multiplication by the factor with step m (m >= 1). Factors with
    /// m > order are the identity modulo t^(order + 1).
    void multiply_by(SeriesFactor factor, std::size_t m);

private:
    std::vector<LaurentPoly> coefficients_;
};

TruncatedSeries series_mul_factor(TruncatedSeries s, SeriesFactor factor, std::size_t m);

/// Applies all three factors for m = 1..order.
TruncatedSeries ideal_count_product(std::size_t order);

}  // namespace krq
