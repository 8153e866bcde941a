#pragma once

#include <string>

#include "liealg/algebra.hpp"
#include "liealg/contraction.hpp"

namespace liealg {

// Algebra file format: {"name": ..., "generators": [...], "brackets":
// [{"left", "right", "terms": [{"coeff", "gen"}]}]}. Unknown fields are
// rejected; save/load round-trips bit-exactly.
std::string save_algebra(const LieAlgebra& L);
LieAlgebra parse_algebra(const std::string& text);
LieAlgebra load_algebra_file(const std::string& path);
void write_algebra_file(const LieAlgebra& L, const std::string& path);

// Scaling file format: {"algebra": name, "exponents": {gen: int, ...}}.
std::string save_scaling(const std::string& algebra_name, const GradedScaling& s);
std::pair<std::string, GradedScaling> parse_scaling(const std::string& text);
std::pair<std::string, GradedScaling> load_scaling_file(const std::string& path);

}  // namespace liealg
