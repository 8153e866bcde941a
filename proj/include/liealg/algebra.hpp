#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "liealg/matrix.hpp"
#include "liealg/rational.hpp"

namespace liealg {

// Element of a Lie algebra as a generator-name -> coefficient map.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(std::map<std::string, Rational> coeffs);

    static AlgebraElement generator(const std::string& name);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::string, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(const std::string& name) const;

    void add(const std::string& name, const Rational& c);

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement scaled(const Rational& c) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;  // "1*j3", "-1*hbar - 1*m", "0"

private:
    std::map<std::string, Rational> coeffs_;
};

// One input bracket [left, right] = sum of coeff * gen.
struct BracketSpec {
    std::string left;
    std::string right;
    std::vector<std::pair<Rational, std::string>> terms;
};

// Finite-dimensional Lie algebra over the rationals, presented by structure
// constants: [X_a, X_b] = sum_c f^c_{ab} X_c, stored for a < b only with
// antisymmetry supplied by the accessor. Construction does not enforce the
// Jacobi identity; jacobi_check validates it separately.
class LieAlgebra {
public:
    LieAlgebra() = default;

    const std::string& name() const { return name_; }
    const std::vector<std::string>& generators() const { return generators_; }
    int dimension() const { return static_cast<int>(generators_.size()); }

    bool has_generator(const std::string& g) const;
    int generator_index(const std::string& g) const;  // throws UnknownGenerator

    // Dual coordinate names, aligned with generators(); defaults to the
    // generator names.
    const std::vector<std::string>& dual_names() const { return dual_names_; }
    LieAlgebra with_dual_names(std::vector<std::string> duals) const;
    LieAlgebra renamed(const std::string& new_name) const;

    // f^c_{ab} for arbitrary index order (antisymmetry applied).
    Rational structure_constant(int a, int b, int c) const;

    // Stored constants, keyed (a, b, c) with a < b.
    const std::map<std::tuple<int, int, int>, Rational>& constants() const {
        return constants_;
    }

    // [X_a, X_b] as an element, for generator indices.
    AlgebraElement bracket_basis(int a, int b) const;

    friend LieAlgebra make_algebra(const std::string& name,
                                   const std::vector<std::string>& generators,
                                   const std::vector<BracketSpec>& brackets);

private:
    std::string name_;
    std::vector<std::string> generators_;
    std::vector<std::string> dual_names_;
    std::map<std::string, int> index_;
    std::map<std::tuple<int, int, int>, Rational> constants_;
};

// Builds an algebra from a bracket table; unlisted pairs commute.
// Throws DuplicateGenerator, DuplicateBracketPair, UnknownGeneratorInBracket.
LieAlgebra make_algebra(const std::string& name,
                        const std::vector<std::string>& generators,
                        const std::vector<BracketSpec>& brackets);

// Bilinear extension of the structure constants.
// Throws ForeignGenerator if u or v mention generators outside L.
AlgebraElement bracket(const LieAlgebra& L, const AlgebraElement& u, const AlgebraElement& v);

// Triples (a, b, c) violating [[a,b],c] + [[b,c],a] + [[c,a],b] = 0.
std::vector<std::array<std::string, 3>> jacobi_check(const LieAlgebra& L);

// Direct sum with a one-dimensional center.
LieAlgebra trivial_central_extension(const LieAlgebra& L, const std::string& central_name);

// Invertible change of generators: new_i = sum_j matrix[i][j] * old_j.
struct BasisChange {
    RationalMatrix matrix;
    std::vector<std::string> new_names;
};

// Throws SingularBasisChange.
LieAlgebra change_basis(const LieAlgebra& L, const BasisChange& bc);

// Restriction to a bracket-closed generator subset (parent order kept).
// Throws NotClosed with a witness pair.
LieAlgebra subalgebra(const LieAlgebra& L, const std::vector<std::string>& subset);

// Structure-constant equality under an explicit generator relabeling
// (bijection from L1 generators to L2 generators). Throws NotBijective.
bool same_structure(const LieAlgebra& L1, const LieAlgebra& L2,
                    const std::map<std::string, std::string>& relabel);

}  // namespace liealg
