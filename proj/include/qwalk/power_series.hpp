#pragma once

#include "qwalk/rational_function.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qwalk {

/// Truncated power series c_0 + c_1 t + ... + c_K t^K.
struct PowerSeries {
    std::vector<Rational> coeffs;

    std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

/// Taylor coefficients of r at t = 0 up to t^order, by long division.
inline PowerSeries series_expand(const RationalFunction& r, std::size_t order) {
    const Polynomial& num = r.numerator();
    const Polynomial& den = r.denominator();
    const Rational d0 = den.coefficient(0);
    if (d0 == 0) throw std::domain_error("series_expand: pole at the origin");

    // c_k = (a_k - sum_{j=1..k} d_j c_{k-j}) / d_0
    PowerSeries s;
    s.coeffs.resize(order + 1);
    const auto dd = static_cast<std::size_t>(den.degree());
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = num.coefficient(k);
        for (std::size_t j = 1; j <= std::min(k, dd); ++j) acc -= den.coefficient(j) * s.coeffs[k - j];
        s.coeffs[k] = acc / d0;
    }
    return s;
}

}  // namespace qwalk
