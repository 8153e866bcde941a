#pragma once

#include <string>
#include <vector>

#include "liealg/algebra.hpp"
#include "liealg/contraction.hpp"
#include "liealg/polynomial.hpp"

namespace liealg {

// First-order linear differential operator sum_i coeff_i(x) d/dx_i with
// degree-one coefficient polynomials: the coadjoint realization of a
// generator acting on functions of the dual coordinates.
class DiffOperator {
public:
    struct Term {
        MultiPoly coefficient;  // homogeneous of degree 1
        Var target;
    };

    DiffOperator() = default;
    explicit DiffOperator(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly apply(const MultiPoly& p) const;

    DiffOperator negated() const;

    std::string to_string() const;  // "j3*d/d(j2) - j2*d/d(j3)"

private:
    std::vector<Term> terms_;
};

// X_a acting on duals: sum_{b,c} f^c_{ab} x_c d/dx_b.
// Throws UnknownGenerator.
DiffOperator coadjoint_operator(const LieAlgebra& L, const std::string& generator);

// True iff every coadjoint operator annihilates p.
// Throws ForeignVariable when p uses variables outside L's duals.
bool is_invariant(const LieAlgebra& L, const MultiPoly& p);

// Homogeneous invariants of a fixed degree in canonical normalization:
// reduced row echelon over monomial columns, integer content 1, positive
// leading coefficient, sorted by leading monomial.
struct InvariantBasis {
    std::string algebra;
    int degree = 0;
    std::vector<MultiPoly> polynomials;
};

// Basis of homogeneous degree-d polynomials annihilated by every coadjoint
// operator, via the nullspace of the stacked linear system.
InvariantBasis invariant_space(const LieAlgebra& L, int degree);

// JSON object with the basis as canonical polynomial strings plus metadata:
// {"algebra", "degree", "new" (fresh-generators flag), "polynomials"}.
std::string serialize_invariant_basis(const InvariantBasis& basis, bool fresh_only);

// Degree-d invariants modulo products of lower-degree invariants; `lower`
// must cover every degree below d.
InvariantBasis new_invariants(const LieAlgebra& L, int degree,
                              const std::vector<InvariantBasis>& lower);

// Number of functionally independent invariants: dim - generic rank of the
// commutator matrix [sum_c f^c_{ab} x_c] at a seeded pseudo-random rational
// point; two independent samples must agree. Throws RankUnstable after the
// retry budget.
int invariant_count(const LieAlgebra& L, unsigned long seed);

struct ContractedInvariant {
    int shift = 0;          // eps^shift * rescaled invariant has a finite limit
    MultiPoly limit;        // leading coefficient polynomial
    EpsilonSeries expansion;  // shifted so the leading term sits at eps^0
};

// Pushes an invariant through a contraction: dual coordinates scale inversely
// to the generators (x_a -> eps^{-n_a} x_a). Checks invariance of the input
// (NotInvariant) and of the limit on the contracted algebra; propagates
// IllDefinedContraction from the target contraction.
ContractedInvariant contract_invariant(const LieAlgebra& L, const GradedScaling& s,
                                       const MultiPoly& p);

// Center-of-mass substitution p1 = p2 = p3 = 0 over the kinematical
// coordinates. Throws ForeignVariable for non-catalog variables.
MultiPoly evaluate_at_rest(const MultiPoly& p);

// Resolves a printed polynomial with ambiguous term signs: candidates are
// base + sum of +-group over all sign assignments; returns the assignments
// (as sign vectors) whose candidate is invariant, with the candidates.
struct SignResolution {
    std::vector<int> signs;  // +1 / -1 per group
    MultiPoly polynomial;
};
std::vector<SignResolution> resolve_sign_variants(const LieAlgebra& L,
                                                  const MultiPoly& base,
                                                  const std::vector<MultiPoly>& groups);

}  // namespace liealg
