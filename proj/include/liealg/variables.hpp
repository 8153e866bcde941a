#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liealg {

// Interned symbolic variable. Identifiers double as the significance rank of
// the monomial order: lower id = more significant. The kinematical dual
// coordinates are pre-interned in canonical order (m, h, hbar, j1..j3,
// p1..p3, k1..k3); any other name is interned on first use, after all
// earlier ones.
struct Var {
    std::uint32_t id = 0;

    friend bool operator==(Var a, Var b) { return a.id == b.id; }
    friend bool operator!=(Var a, Var b) { return a.id != b.id; }
    friend bool operator<(Var a, Var b) { return a.id < b.id; }
};

// Returns the interned variable for `name`, creating it if needed.
Var var(std::string_view name);

// True if `name` is already interned (does not create).
bool var_exists(std::string_view name);

const std::string& var_name(Var v);

// Names of the pre-seeded kinematical coordinates.
const std::vector<std::string>& seeded_variable_names();

}  // namespace liealg
