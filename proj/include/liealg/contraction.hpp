#pragma once

#include <map>
#include <string>
#include <tuple>

#include "liealg/algebra.hpp"
#include "liealg/rational.hpp"

namespace liealg {

// Integer epsilon-grading: X'_a = eps^{n_a} X_a. Must cover exactly the
// generators of the algebra it is applied to.
struct GradedScaling {
    std::map<std::string, int> exponents;

    int exponent(const std::string& g) const;
    GradedScaling plus(const GradedScaling& o) const;  // pointwise sum
    GradedScaling shifted(int delta) const;            // every exponent + delta
};

// Structure constants of the rescaled algebra: each f^c_{ab} carries the
// epsilon exponent n_a + n_b - n_c.
struct ScaledConstant {
    int exponent;
    Rational value;
};

struct ScaledAlgebra {
    LieAlgebra base;
    GradedScaling scaling;
    std::map<std::tuple<int, int, int>, ScaledConstant> scaled_constants;
};

// Tags every nonzero structure constant with its epsilon exponent.
// Throws IncompleteScaling when the scaling does not cover the generators.
ScaledAlgebra rescale(const LieAlgebra& L, const GradedScaling& s);

// The eps -> 0 limit: keeps exactly the exponent-zero constants. Throws
// IllDefinedContraction listing every bracket with a negative exponent.
// The result is Jacobi-validated.
LieAlgebra contraction_limit(const ScaledAlgebra& sa);

// contraction_limit followed by same_structure against `reference`.
bool contract_and_compare(const LieAlgebra& L, const GradedScaling& s,
                          const LieAlgebra& reference,
                          const std::map<std::string, std::string>& relabel);

// Parses an inline scaling spec like "J=0,P=1,K=1,Hbar=0,M=2" against the
// generators of L. Group names expand to their index families (P -> p1,p2,p3;
// K matches the unique boost family kp*/kg*/k*); "all" covers everything.
GradedScaling parse_scale_spec(const LieAlgebra& L, const std::string& spec);

// Parses a relabeling spec like "KP=KG,Hbar=H" between two algebras, with the
// same family expansion on both sides; unmentioned generators map to
// themselves when the target has them.
std::map<std::string, std::string> parse_map_spec(const LieAlgebra& from,
                                                  const LieAlgebra& to,
                                                  const std::string& spec);

}  // namespace liealg
