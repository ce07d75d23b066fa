#pragma once

/**
 * @file int_matrix.hpp
 * @brief Dense square matrices of arbitrary-precision integers, their exact
 * characteristic polynomials, and the all-ones adjugate-sum ratio.
 */

#include "qwalk/rational_function.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qwalk {

class IntMatrix {
public:
    IntMatrix() = default;

    explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order) {}

    IntMatrix(std::size_t order, std::vector<Integer> row_major) : order_(order), entries_(std::move(row_major)) {
        if (entries_.size() != order * order) throw std::invalid_argument("IntMatrix: entry count != order^2");
    }

    static IntMatrix identity(std::size_t order) {
        IntMatrix m(order);
        for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix all_ones(std::size_t order) {
        return IntMatrix(order, std::vector<Integer>(order * order, Integer(1)));
    }

    std::size_t order() const { return order_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    Integer sum() const {
        Integer s = 0;
        for (const auto& e : entries_) s += e;
        return s;
    }

    Integer trace() const {
        Integer s = 0;
        for (std::size_t i = 0; i < order_; ++i) s += (*this)(i, i);
        return s;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i + 1; j < order_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
        a.check_same(b);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
        return a;
    }

    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
        a.check_same(b);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
        return a;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        a.check_same(b);
        const std::size_t n = a.order_;
        IntMatrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<Integer> apply(const std::vector<Integer>& x) const {
        if (x.size() != order_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
        std::vector<Integer> y(order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j < order_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    void check_same(const IntMatrix& o) const {
        if (order_ != o.order_) throw std::invalid_argument("IntMatrix: order mismatch");
    }

    std::size_t order_ = 0;
    std::vector<Integer> entries_;
};

/// det(x I - M), by the Faddeev-LeVerrier recursion. Every division by k is
/// exact over the integers, so the result is monic with integer coefficients.
inline Polynomial char_poly(const IntMatrix& m) {
    const std::size_t n = m.order();
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    // B_k = M B_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M B_k)/k
    IntMatrix b(n);
    Integer prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next = m * b;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += prev;
        b = std::move(next);
        Integer tr = (m * b).trace();
        Integer c = -tr / static_cast<unsigned long>(k);
        coeffs[n - k] = c;
        prev = c;
    }
    return Polynomial(std::move(coeffs));
}

/// Sum of the entries of (x I - M)^{-1}, as
/// [det(x I - M + J) - det(x I - M)] / det(x I - M).
inline RationalFunction sum_adjugate_ratio(const IntMatrix& m) {
    const Polynomial base = char_poly(m);
    const Polynomial shifted = char_poly(m - IntMatrix::all_ones(m.order()));
    return {shifted - base, base};
}

}  // namespace qwalk
