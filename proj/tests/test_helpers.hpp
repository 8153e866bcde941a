#pragma once

#include <random>
#include <string>
#include <vector>

#include "liealg/polynomial.hpp"
#include "liealg/rational.hpp"

namespace testutil {

using liealg::Monomial;
using liealg::MultiPoly;
using liealg::Rational;
using liealg::Var;

inline MultiPoly pv(const std::string& name) {
    return MultiPoly::variable(liealg::var(name));
}

inline MultiPoly pc(long num, long den = 1) {
    return MultiPoly::constant(Rational(num, den));
}

// Small random polynomial over the given variables; deterministic per rng.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars,
                             int max_terms = 4, int max_degree = 3) {
    MultiPoly p;
    const int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<Var, unsigned>> factors;
        const int deg = static_cast<int>(rng() % (max_degree + 1));
        for (int d = 0; d < deg; ++d) {
            const Var v = vars[rng() % vars.size()];
            factors.emplace_back(v, 1u);
        }
        const long num = static_cast<long>(rng() % 11) - 5;
        const long den = 1 + static_cast<long>(rng() % 4);
        p.add_term(Rational(num, den), Monomial(std::move(factors)));
    }
    return p;
}

inline Rational random_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 21) - 10;
    const long den = 1 + static_cast<long>(rng() % 6);
    return Rational(num, den);
}

}  // namespace testutil
