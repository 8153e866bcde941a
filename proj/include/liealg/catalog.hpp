#pragma once

#include <string>
#include <vector>

#include "liealg/algebra.hpp"
#include "liealg/invariants.hpp"
#include "liealg/polynomial.hpp"

namespace liealg {

// A reference polynomial attached to a catalog algebra. Printed variants of
// the quartic Casimirs are kept verbatim (they carry transcription errors);
// resolved forms are the oracle-checked invariants.
struct ReferenceInvariant {
    std::string label;
    MultiPoly polynomial;
    std::string anchor;       // reference tag, e.g. "eq-5.2"
    bool printed_variant;     // true: verbatim printing, verified by the report
};

struct CatalogEntry {
    LieAlgebra algebra;
    std::vector<ReferenceInvariant> reference_invariants;
    int expected_invariant_count = 0;
};

// Builtin names: so3, iso3_h, galilei, extended_galilei, poincare,
// poincare_lorentz4, extended_poincare, extended_poincare_hbar.
// Throws UnknownCatalogName.
CatalogEntry load_builtin(const std::string& name);

// Reference lookup by label; throws Error when absent.
const ReferenceInvariant& find_reference(const CatalogEntry& entry, const std::string& label);

bool is_builtin(const std::string& name);

std::vector<std::pair<std::string, int>> list_builtins();

// The printed coadjoint operator table for the trivially extended Poincare
// algebra over the hbar basis, transcribed verbatim (typos included) for the
// machine audit; ordered like the generators of extended_poincare_hbar.
std::vector<std::pair<std::string, DiffOperator>> printed_appendix_operators();

// The relabeling used to compare the tensor-basis Poincare presentation with
// the kinematical one: j23 -> j1, ..., m01 -> kp1, ..., p0 -> h.
std::map<std::string, std::string> lorentz4_relabel();

// The contraction grading (J:0, P:1, K:1, Hbar:0, M:2) over the hbar basis.
GradedScaling canonical_contraction_scaling();

// Relabeling kp -> kg, hbar -> h between the contracted hbar basis and the
// extended Galilei table.
std::map<std::string, std::string> contraction_relabel();

}  // namespace liealg
