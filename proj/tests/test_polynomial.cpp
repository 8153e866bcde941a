#include <random>

#include "doctest.h"
#include "liealg/errors.hpp"
#include "liealg/polynomial.hpp"
#include "test_helpers.hpp"

using namespace liealg;
using testutil::pc;
using testutil::pv;

TEST_CASE("poly_add examples") {
    CHECK(poly_add(pv("x"), -pv("x")).is_zero());
    const MultiPoly h2 = pv("h") * pv("h");
    const MultiPoly p12 = pv("p1") * pv("p1");
    CHECK(poly_add(h2 - p12, p12) == h2);
    const MultiPoly half_mh = (pv("m") * pv("h")).scaled(Rational(1, 2));
    CHECK(poly_add(half_mh, half_mh) == pv("m") * pv("h"));
}

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(pv("m"), pv("m")) == MultiPoly::term(Rational(1), Monomial::of(var("m"), 2)));
    const MultiPoly h = pv("h"), m = pv("m");
    CHECK(poly_mul(h + m, h - m) == h * h - m * m);
    CHECK(poly_mul(MultiPoly::zero(), pv("p1")).is_zero());
}

TEST_CASE("poly_partial examples") {
    const MultiPoly j2 = pv("j2");
    CHECK(poly_partial(j2 * j2, var("j2")) == j2.scaled(Rational(2)));
    const MultiPoly h2mp = pv("h") * pv("h") - pv("p1") * pv("p1");
    CHECK(poly_partial(h2mp, var("p1")) == pv("p1").scaled(Rational(-2)));
    CHECK(poly_partial(pv("m"), var("h")).is_zero());
}

TEST_CASE("canonical text form") {
    const MultiPoly c2p = pv("h") * pv("h") - pv("p1") * pv("p1") - pv("p2") * pv("p2") -
                          pv("p3") * pv("p3");
    CHECK(c2p.to_string() == "h^2 - p1^2 - p2^2 - p3^2");

    MultiPoly c2g = pv("m") * pv("h");
    for (const char* p : {"p1", "p2", "p3"})
        c2g = c2g - (pv(p) * pv(p)).scaled(Rational(1, 2));
    CHECK(c2g.to_string() == "m*h - 1/2*p1^2 - 1/2*p2^2 - 1/2*p3^2");

    const MultiPoly so3 = pv("j1") * pv("j1") + pv("j2") * pv("j2") + pv("j3") * pv("j3");
    CHECK(so3.to_string() == "j1^2 + j2^2 + j3^2");

    CHECK(MultiPoly::zero().to_string() == "0");
    CHECK(pc(-3, 2).to_string() == "-3/2");
    CHECK((-pv("j1") + pv("j2")).to_string() == "-j1 + j2");
}

TEST_CASE("poly_substitute examples") {
    // p1 -> eps^-1 p1 sends p1^2 to eps^-2 p1^2
    const MultiPoly p1sq = pv("p1") * pv("p1");
    std::map<Var, EpsilonImage> images;
    images[var("p1")] = {-1, var("p1")};
    const EpsilonSeries s = poly_substitute(p1sq, images);
    CHECK(s.min_exponent() == -2);
    CHECK(eps_coefficient(s, -2) == p1sq);

    std::map<Var, EpsilonImage> mimg;
    mimg[var("m")] = {-2, var("m")};
    const EpsilonSeries sm = poly_substitute(pv("m"), mimg);
    CHECK(sm.min_exponent() == -2);
    CHECK(eps_coefficient(sm, -2) == pv("m"));

    std::map<Var, EpsilonImage> ident;
    ident[var("h")] = {0, var("h")};
    const MultiPoly h2 = pv("h") * pv("h");
    const EpsilonSeries sh = poly_substitute(h2, ident);
    CHECK(sh.min_exponent() == 0);
    CHECK(eps_coefficient(sh, 0) == h2);

    CHECK_THROWS_AS(poly_substitute(pv("h") + pv("m"), ident), UnmappedVariable);
}

TEST_CASE("eps_limit and eps_coefficient") {
    EpsilonSeries s;
    s.add(-2, pv("m"));
    auto [shift, limit] = eps_limit(s);
    CHECK(shift == 2);
    CHECK(limit == pv("m"));

    EpsilonSeries c2;
    const MultiPoly msq = pv("m") * pv("m");
    MultiPoly mid = (pv("hbar") * pv("m")).scaled(Rational(2));
    for (const char* p : {"p1", "p2", "p3"}) mid = mid - pv(p) * pv(p);
    c2.add(-4, msq);
    c2.add(-2, mid);
    c2.add(0, pv("hbar") * pv("hbar"));
    auto [shift2, limit2] = eps_limit(c2);
    CHECK(shift2 == 4);
    CHECK(limit2 == msq);

    EpsilonSeries flat;
    flat.add(0, pv("j1"));
    auto [shift3, limit3] = eps_limit(flat);
    CHECK(shift3 == 0);
    CHECK(limit3 == pv("j1"));

    const EpsilonSeries shifted = c2.shifted(4);
    CHECK(eps_coefficient(shifted, 2) == mid);
    CHECK(eps_coefficient(shifted, 17).is_zero());
    CHECK(eps_coefficient(shifted, shifted.min_exponent()) == eps_limit(shifted).second);

    CHECK_THROWS_AS(eps_limit(EpsilonSeries()), EmptySeries);
}

TEST_CASE("ring axioms and substitution homomorphism on random polynomials") {
    std::mt19937_64 rng(12345);
    const std::vector<Var> vars = {var("h"), var("m"), var("p1"), var("j1")};
    std::map<Var, EpsilonImage> images;
    images[var("h")] = {0, var("h")};
    images[var("m")] = {-2, var("m")};
    images[var("p1")] = {-1, var("p1")};
    images[var("j1")] = {1, var("j1")};

    for (int i = 0; i < 200; ++i) {
        const MultiPoly a = testutil::random_poly(rng, vars);
        const MultiPoly b = testutil::random_poly(rng, vars);
        const MultiPoly c = testutil::random_poly(rng, vars);

        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);

        const Var v = vars[rng() % vars.size()];
        CHECK(poly_partial(a * b, v) ==
              poly_partial(a, v) * b + a * poly_partial(b, v));

        CHECK(poly_substitute(a * b, images) ==
              poly_substitute(a, images) * poly_substitute(b, images));
        CHECK(poly_substitute(a + b, images) ==
              poly_substitute(a, images) + poly_substitute(b, images));
    }
}

TEST_CASE("coefficients remain normalized after arithmetic") {
    std::mt19937_64 rng(777);
    const std::vector<Var> vars = {var("h"), var("m")};
    for (int i = 0; i < 100; ++i) {
        const MultiPoly a = testutil::random_poly(rng, vars);
        const MultiPoly b = testutil::random_poly(rng, vars);
        const MultiPoly combined = a * b + a;
        for (const auto& [mono, coeff] : combined.terms()) {
            CHECK(!coeff.is_zero());
            CHECK(coeff.denominator() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), coeff.numerator().get_mpz_t(),
                    coeff.denominator().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("monomial order is graded lexicographic over the seeded order") {
    const Monomial mh = Monomial::of(var("m")).times(Monomial::of(var("h")));
    const Monomial p1sq = Monomial::of(var("p1"), 2);
    const Monomial h2 = Monomial::of(var("h"), 2);
    const Monomial j1sq = Monomial::of(var("j1"), 2);
    const Monomial j2sq = Monomial::of(var("j2"), 2);
    CHECK(compare_monomials_desc(mh, p1sq) < 0);   // m*h before p1^2
    CHECK(compare_monomials_desc(h2, p1sq) < 0);   // h^2 before p1^2
    CHECK(compare_monomials_desc(j1sq, j2sq) < 0); // j1^2 before j2^2
    CHECK(compare_monomials_desc(Monomial::of(var("m"), 2), mh) < 0);
    // degree dominates
    CHECK(compare_monomials_desc(Monomial::of(var("k3"), 3), h2) < 0);
}
