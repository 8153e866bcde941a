#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace liealg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define LIEALG_ERROR(NAME)                       \
    struct NAME : Error {                        \
        using Error::Error;                      \
    }

LIEALG_ERROR(UnmappedVariable);
LIEALG_ERROR(EmptySeries);
LIEALG_ERROR(DuplicateGenerator);
LIEALG_ERROR(DuplicateBracketPair);
LIEALG_ERROR(UnknownGeneratorInBracket);
LIEALG_ERROR(UnknownGenerator);
LIEALG_ERROR(ForeignGenerator);
LIEALG_ERROR(ForeignVariable);
LIEALG_ERROR(SingularBasisChange);
LIEALG_ERROR(NotBijective);
LIEALG_ERROR(IncompleteScaling);
LIEALG_ERROR(NotInvariant);
LIEALG_ERROR(RankUnstable);
LIEALG_ERROR(UnknownCatalogName);
LIEALG_ERROR(ParseError);

#undef LIEALG_ERROR

// Subalgebra extraction witness: a pair whose bracket leaves the span.
struct NotClosed : Error {
    NotClosed(std::string msg, std::string left, std::string right)
        : Error(std::move(msg)), witness_left(std::move(left)), witness_right(std::move(right)) {}
    std::string witness_left;
    std::string witness_right;
};

// Raised when a rescaled algebra has a negative epsilon exponent; carries
// every offending bracket (a, b, c).
struct IllDefinedContraction : Error {
    IllDefinedContraction(std::string msg,
                          std::vector<std::array<std::string, 3>> triples)
        : Error(std::move(msg)), offending(std::move(triples)) {}
    std::vector<std::array<std::string, 3>> offending;
};

}  // namespace liealg
