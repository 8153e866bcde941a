#include "doctest.h"
#include "liealg/algebra_io.hpp"
#include "liealg/catalog.hpp"
#include "liealg/errors.hpp"

using namespace liealg;

TEST_CASE("algebra file format round-trips bit-exactly") {
    for (const char* name : {"so3", "extended_galilei", "poincare_lorentz4"}) {
        const LieAlgebra L = load_builtin(name).algebra;
        const std::string text = save_algebra(L);
        const LieAlgebra back = parse_algebra(text);
        CHECK(back.generators() == L.generators());
        std::map<std::string, std::string> ident;
        for (const auto& g : L.generators()) ident[g] = g;
        CHECK(same_structure(back, L, ident));
        CHECK(save_algebra(back) == text);
    }
}

TEST_CASE("algebra parser rejects unknown fields and bad input") {
    CHECK_THROWS_AS(parse_algebra("{"), ParseError);
    CHECK_THROWS_AS(parse_algebra("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_algebra(R"({"name":"x","generators":[]})"), ParseError);
    CHECK_THROWS_AS(
        parse_algebra(R"({"name":"x","generators":[],"brackets":[],"extra":1})"),
        ParseError);
    CHECK_THROWS_AS(parse_algebra(R"({"name":"x","generators":["a","b"],
        "brackets":[{"left":"a","right":"b","terms":[{"coeff":"1","gen":"b","x":0}]}]})"),
                    ParseError);
    // rational coefficients survive the trip
    const LieAlgebra L = parse_algebra(R"({"name":"t","generators":["a","b","c"],
        "brackets":[{"left":"a","right":"b","terms":[{"coeff":"-3/2","gen":"c"}]}]})");
    CHECK(L.structure_constant(0, 1, 2) == Rational(-3, 2));
}

TEST_CASE("scaling file format") {
    GradedScaling s;
    s.exponents = {{"j1", 0}, {"p1", 1}, {"m", 2}};
    const std::string text = save_scaling("demo", s);
    const auto [name, back] = parse_scaling(text);
    CHECK(name == "demo");
    CHECK(back.exponents == s.exponents);
    CHECK(save_scaling(name, back) == text);
    CHECK_THROWS_AS(parse_scaling(R"({"algebra":"x"})"), ParseError);
    CHECK_THROWS_AS(parse_scaling(R"({"algebra":"x","exponents":{},"y":0})"), ParseError);
    CHECK_THROWS_AS(parse_scaling(R"({"algebra":"x","exponents":{"a":"b"}})"), ParseError);
}
