"""Smoke tests for the python bindings."""

import sys

import liealg


def check(condition, message):
    if not condition:
        print("FAIL:", message)
        sys.exit(1)
    print("ok:", message)


def main():
    names = dict(liealg.list_builtins())
    check(names["extended_poincare"] == 11, "catalog lists extended_poincare with dim 11")
    check(names["so3"] == 3, "catalog lists so3 with dim 3")

    poi = liealg.load_builtin("poincare")
    check(poi.dimension == 10, "poincare has 10 generators")
    check(str(poi.bracket("p1", "kp1")) == "-1*h", "[p1, kp1] = -h")
    check(poi.jacobi_violations() == [], "poincare passes the Jacobi check")

    gal = liealg.load_builtin("extended_galilei")
    check(str(gal.bracket("p1", "kg1")) == "-1*m", "central extension bracket")

    basis = liealg.invariant_space(poi, 2)
    check(len(basis) == 1 and str(basis[0]) == "h^2 - p1^2 - p2^2 - p3^2",
          "quadratic Poincare Casimir")

    check(liealg.invariant_count(poi, seed=1) == 2, "poincare has two invariants")
    check(liealg.invariant_count(gal, seed=1) == 3, "extended galilei has three")

    pe = liealg.load_builtin("extended_poincare_hbar")
    scale = liealg.parse_scale_spec(pe, "J=0,P=1,K=1,Hbar=0,M=2")
    relabel = {g: g for g in pe.generators}
    relabel.update({"kp1": "kg1", "kp2": "kg2", "kp3": "kg3", "hbar": "h"})
    check(liealg.contract_and_compare(pe, scale, gal, relabel),
          "contraction lands on extended_galilei")

    refs = {label: poly for label, poly, _, printed in liealg.reference_invariants(
        "extended_poincare_hbar") if not printed}
    shift, limit, expansion = liealg.contract_invariant(pe, scale, refs["C1PE"])
    check(shift == 2 and str(limit) == "m", "C1PE contracts to the central charge")

    shift, limit, expansion = liealg.contract_invariant(pe, scale, refs["C2PE"])
    check(shift == 4 and str(limit) == "m^2", "C2PE contracts to m^2")
    check(str(expansion[2]) == "2*m*hbar - p1^2 - p2^2 - p3^2",
          "subleading term is twice the internal-energy Casimir")

    try:
        bad = {g: 0 for g in poi.generators}
        bad["h"] = 1
        liealg.contraction_limit(poi, bad)
        check(False, "ill-defined contraction must raise")
    except liealg.IllDefinedContractionError:
        check(True, "ill-defined contraction raises")

    text = liealg.save_algebra(gal)
    back = liealg.parse_algebra(text)
    check(liealg.save_algebra(back) == text, "algebra file format round-trips")

    rest = liealg.evaluate_at_rest(refs["C2PE"])
    check(str(rest) == "m^2 + 2*m*hbar + hbar^2", "rest-frame substitution")

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
