#pragma once

#include <map>
#include <utility>
#include <vector>

#include "liealg/rational.hpp"

namespace liealg {

// Sparse rational matrix; absent entries are zero.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

private:
    int rows_;
    int cols_;
    std::map<std::pair<int, int>, Rational> entries_;
};

// Basis of the right nullspace in reduced echelon form. Each tuple is scaled
// to integer entries with content 1; the entry at the tuple's free column is
// positive (the reduced-echelon +1 slot, kept under positive scaling).
// Deterministic; a full-rank matrix yields an empty list.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Rank over the rationals via fraction-free elimination.
int generic_rank(const RationalMatrix& m);

}  // namespace liealg
