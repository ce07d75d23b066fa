#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficients are stored in ascending degree order; the zero polynomial is
 * the empty coefficient list and every other value has a nonzero leading
 * coefficient. Arithmetic is exact (GMP rationals), so equality is exact.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwalk {

using Integer = mpz_class;
using Rational = mpq_class;

class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        for (auto& c : coeffs_) c.canonicalize();
        trim();
    }

    Polynomial(std::initializer_list<Rational> coeffs)
        : Polynomial(std::vector<Rational>(coeffs)) {}

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    static Polynomial monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> cs(degree + 1);
        cs[degree] = c;
        return Polynomial(std::move(cs));
    }

    // a*x + b
    static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

    static Polynomial identity() { return linear(1, 0); }

    bool is_zero() const { return coeffs_.empty(); }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    bool is_constant() const { return coeffs_.size() <= 1; }

    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    bool has_integer_coefficients() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Rational& c) { return c.get_den() == 1; });
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        Rational lc = leading();
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c /= lc;
        return r;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> cs(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * static_cast<long>(i);
        return Polynomial(std::move(cs));
    }

    // x^width * p(1/x); width must be at least degree()
    Polynomial reversed(std::size_t width) const {
        if (is_zero()) return {};
        if (static_cast<int>(width) < degree())
            throw std::invalid_argument("Polynomial::reversed: width below degree");
        std::vector<Rational> cs(width + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[width - i] = coeffs_[i];
        return Polynomial(std::move(cs));
    }

    // multiply by x^k
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Rational> cs(k, Rational(0));
        cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(cs));
    }

    // exact division by x^k; throws if a low coefficient is nonzero
    Polynomial shifted_down(std::size_t k) const {
        for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i)
            if (coeffs_[i] != 0) throw std::domain_error("Polynomial::shifted_down: not divisible by x^k");
        if (k >= coeffs_.size()) return {};
        return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double evaluate(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(cs));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial division by zero");
        if (degree() < d.degree()) return {Polynomial{}, *this};
        std::vector<Rational> rem = coeffs_;
        const std::size_t dd = d.coeffs_.size() - 1;
        std::vector<Rational> quot(rem.size() - dd);
        const Rational& lc = d.coeffs_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            Rational c = rem[k + dd] / lc;
            quot[k] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * d.coeffs_[j];
        }
        rem.resize(dd);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

    bool divides(const Polynomial& other) const { return (other % *this).is_zero(); }

    // Quotient that must be exact.
    Polynomial exact_div(const Polynomial& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("Polynomial::exact_div: nonzero remainder");
        return q;
    }

    Polynomial pow(std::size_t e) const {
        Polynomial result = constant(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    std::string to_string(std::string_view var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            Rational mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool unit = (mag == 1);
            if (!unit || i == 0) os << mag.get_str();
            if (i > 0) {
                if (!unit) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Monic gcd over the rationals; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// p(a*x + b), expanded.
inline Polynomial affine_substitute(const Polynomial& p, const Rational& a, const Rational& b) {
    // Horner in the ring: acc = acc * (a x + b) + c_i
    const Polynomial lin = Polynomial::linear(a, b);
    Polynomial acc;
    auto cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * lin + Polynomial::constant(cs[i]);
    return acc;
}

/// p(q(x)).
inline Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial acc;
    auto cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * q + Polynomial::constant(cs[i]);
    return acc;
}

}  // namespace qwalk
