#pragma once

/**
 * @file rational_function.hpp
 * @brief Reduced quotients of rational-coefficient polynomials.
 *
 * Canonical form: gcd(num, den) = 1 and den monic. The zero function is
 * 0/1. Every constructor and operator returns canonical values, so two
 * rational functions are equal as functions iff they compare equal.
 */

#include "qwalk/polynomial.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qwalk {

class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}

    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}

    explicit RationalFunction(const Rational& c) : RationalFunction(Polynomial::constant(c)) {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        canonicalize();
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    Polynomial to_polynomial() const {
        if (!is_polynomial())
            throw std::domain_error("RationalFunction::to_polynomial: nontrivial denominator " +
                                    den_.to_string());
        return num_;
    }

    RationalFunction operator-() const { return {-num_, den_}; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        // cross-cancel first to keep intermediate degrees down
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        return {(a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1)};
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by the zero function");
        return a * b.reciprocal();
    }

    RationalFunction reciprocal() const {
        if (is_zero()) throw std::domain_error("RationalFunction: reciprocal of zero");
        return {den_, num_};
    }

    RationalFunction pow(std::size_t e) const { return {num_.pow(e), den_.pow(e)}; }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    // r(a*x + b)
    RationalFunction affine_substitute(const Rational& a, const Rational& b) const {
        return {qwalk::affine_substitute(num_, a, b), qwalk::affine_substitute(den_, a, b)};
    }

    // r(1/x)
    RationalFunction reciprocal_argument() const {
        if (is_zero()) return {};
        int dn = num_.degree(), dd = den_.degree();
        Polynomial n = num_.reversed(static_cast<std::size_t>(dn));
        Polynomial d = den_.reversed(static_cast<std::size_t>(dd));
        if (dd >= dn) n = n.shifted_up(static_cast<std::size_t>(dd - dn));
        else d = d.shifted_up(static_cast<std::size_t>(dn - dd));
        return {std::move(n), std::move(d)};
    }

    std::string to_string(std::string_view var = "x") const {
        if (is_polynomial()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        Rational lc = den_.leading();
        if (lc != 1) {
            num_ *= 1 / lc;
            den_ *= 1 / lc;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction operator+(const RationalFunction& a, const Polynomial& b) { return a + RationalFunction(b); }
inline RationalFunction operator*(const RationalFunction& a, const Polynomial& b) { return a * RationalFunction(b); }
inline RationalFunction operator*(const Polynomial& a, const RationalFunction& b) { return RationalFunction(a) * b; }

/// p(r): with r = u/v and d = deg p, (sum p_i u^i v^(d-i)) / v^d, reduced.
inline RationalFunction compose(const Polynomial& p, const RationalFunction& r) {
    if (p.is_zero()) return {};
    const Polynomial& u = r.numerator();
    const Polynomial& v = r.denominator();
    const auto d = static_cast<std::size_t>(p.degree());
    auto cs = p.coefficients();
    // Horner on the homogenized form: acc <- acc*u + c_i v^(d-i)
    Polynomial acc;
    Polynomial vpow = Polynomial::constant(1);
    std::vector<Polynomial> vpows(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        vpows[i] = vpow;
        vpow *= v;
    }
    for (std::size_t i = d + 1; i-- > 0;) acc = acc * u + cs[i] * vpows[d - i];
    return {acc, vpows[d]};
}

/// outer(inner), both rational functions; fails if the composed denominator vanishes.
inline RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner) {
    RationalFunction top = compose(outer.numerator(), inner);
    RationalFunction bottom = compose(outer.denominator(), inner);
    if (bottom.is_zero()) throw std::domain_error("compose: denominator vanishes identically");
    return top / bottom;
}

}  // namespace qwalk
