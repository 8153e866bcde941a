#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liealg/rational.hpp"
#include "liealg/variables.hpp"

namespace liealg {

// Power product with no zero exponents, factors sorted by variable id.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<Var, unsigned>> factors);

    static Monomial one() { return Monomial(); }
    static Monomial of(Var v, unsigned exp = 1);

    bool is_one() const { return factors_.empty(); }
    unsigned total_degree() const;
    unsigned exponent(Var v) const;

    Monomial times(const Monomial& o) const;
    // Divides the exponent of v by one; v must occur.
    Monomial without_one(Var v) const;

    const std::vector<std::pair<Var, unsigned>>& factors() const { return factors_; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }

    // x1*x2^2 with factors in significance order
    std::string to_string() const;

private:
    std::vector<std::pair<Var, unsigned>> factors_;
};

// Graded lexicographic order, higher total degree first, ties broken by the
// exponent on the most significant (lowest id) differing variable.
// Returns <0, 0, >0 like strcmp with "a before b in descending order" < 0.
int compare_monomials_desc(const Monomial& a, const Monomial& b);

struct MonomialDescLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_monomials_desc(a, b) < 0;
    }
};

class EpsilonSeries;

// Multivariate polynomial with exact rational coefficients. Terms are kept
// in descending monomial order; no zero coefficients are stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescLess>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(Rational c);
    static MultiPoly variable(Var v);
    static MultiPoly term(Rational c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Leading term in the monomial order; polynomial must be nonzero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    unsigned total_degree() const;  // 0 for the zero polynomial
    bool is_homogeneous() const;
    Rational coefficient(const Monomial& m) const;
    std::set<Var> variables() const;

    void add_term(const Rational& c, const Monomial& m);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
        return !(a == b);
    }

    // Canonical text form: "h^2 - p1^2 - p2^2 - p3^2", "m*h - 1/2*p1^2", "0".
    std::string to_string() const;

private:
    TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

// Formal partial derivative.
MultiPoly poly_partial(const MultiPoly& p, Var v);

// Substitutes the given variables by zero.
MultiPoly poly_substitute_zero(const MultiPoly& p, const std::set<Var>& vars);

// Substitutes the given variables by other variables scaled by a rational.
MultiPoly poly_substitute_linear(const MultiPoly& p,
                                 const std::map<Var, std::pair<Rational, Var>>& images);

// Image of one variable under an epsilon-graded substitution x -> eps^k * x'.
struct EpsilonImage {
    int exponent = 0;
    Var image;
};

// Homomorphic substitution of every variable by eps^k * image.
// Throws UnmappedVariable if some variable of p has no image.
EpsilonSeries poly_substitute(const MultiPoly& p, const std::map<Var, EpsilonImage>& images);

// Finite Laurent series in the contraction parameter with polynomial
// coefficients; no zero coefficients stored.
class EpsilonSeries {
public:
    EpsilonSeries() = default;
    explicit EpsilonSeries(std::map<int, MultiPoly> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, MultiPoly>& coefficients() const { return coeffs_; }
    int min_exponent() const;  // throws EmptySeries when empty
    int max_exponent() const;

    void add(int exponent, const MultiPoly& p);

    friend EpsilonSeries operator+(const EpsilonSeries& a, const EpsilonSeries& b);
    friend EpsilonSeries operator*(const EpsilonSeries& a, const EpsilonSeries& b);

    // Series shifted by eps^delta.
    EpsilonSeries shifted(int delta) const;

    friend bool operator==(const EpsilonSeries& a, const EpsilonSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    std::map<int, MultiPoly> coeffs_;
};

// (shift, limit): eps^shift * s tends to `limit`; shift = -min_exponent.
std::pair<int, MultiPoly> eps_limit(const EpsilonSeries& s);

// Coefficient polynomial at eps^k (zero if absent).
MultiPoly eps_coefficient(const EpsilonSeries& s, int k);

}  // namespace liealg
