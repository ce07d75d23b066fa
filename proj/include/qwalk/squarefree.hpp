#pragma once

#include "qwalk/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qwalk {

struct SquarefreeFactor {
    Polynomial factor;  // monic, squarefree
    std::size_t multiplicity;

    friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// p = unit * prod factor_j^j with pairwise coprime monic squarefree factors.
struct SquarefreeDecomposition {
    Rational unit;
    std::vector<SquarefreeFactor> factors;  // ascending multiplicity, trivial factors omitted

    // the factor of multiplicity j, or 1 if absent
    Polynomial part(std::size_t multiplicity) const {
        for (const auto& f : factors)
            if (f.multiplicity == multiplicity) return f.factor;
        return Polynomial::constant(1);
    }

    Polynomial expand() const {
        Polynomial p = Polynomial::constant(unit);
        for (const auto& f : factors) p *= f.factor.pow(f.multiplicity);
        return p;
    }
};

/// Yun's algorithm over the rationals.
inline SquarefreeDecomposition squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    SquarefreeDecomposition out{p.leading(), {}};
    const Polynomial f = p.monic();
    if (f.degree() == 0) return out;

    const Polynomial df = f.derivative();
    const Polynomial g = gcd(f, df);
    Polynomial c = f.exact_div(g);
    Polynomial d = df.exact_div(g) - c.derivative();
    for (std::size_t i = 1; c.degree() > 0; ++i) {
        Polynomial a = gcd(c, d);
        if (a.degree() > 0) out.factors.push_back({a, i});
        c = c.exact_div(a);
        d = d.exact_div(a) - c.derivative();
    }
    return out;
}

}  // namespace qwalk
