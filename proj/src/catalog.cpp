#include "liealg/catalog.hpp"

#include <sstream>

#include "liealg/errors.hpp"

namespace liealg {

namespace {

int eps3(int i, int j, int k) { return (i - j) * (j - k) * (k - i) / 2; }

std::string idx(const std::string& fam, int i) { return fam + std::to_string(i); }

// [F_i, X_j] = eps_ijk X_k for a rotation family acting on a vector family.
void add_rotation_action(std::vector<BracketSpec>& bs, const std::string& rot,
                         const std::string& vec) {
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (rot == vec && j <= i) continue;
            if (i == j) continue;
            for (int k = 1; k <= 3; ++k) {
                const int e = eps3(i, j, k);
                if (e != 0)
                    bs.push_back({idx(rot, i), idx(vec, j), {{Rational(e), idx(vec, k)}}});
            }
        }
}

std::vector<std::string> kinematical_generators(const std::string& boost, bool extended,
                                                const std::string& energy) {
    std::vector<std::string> g = {"j1", "j2", "j3", "p1", "p2", "p3"};
    for (int i = 1; i <= 3; ++i) g.push_back(idx(boost, i));
    g.push_back(energy);
    if (extended) g.push_back("m");
    return g;
}

std::vector<std::string> kinematical_duals(bool extended, const std::string& energy) {
    std::vector<std::string> d = {"j1", "j2", "j3", "p1", "p2", "p3", "k1", "k2", "k3"};
    d.push_back(energy);
    if (extended) d.push_back("m");
    return d;
}

LieAlgebra build_so3() {
    std::vector<BracketSpec> bs;
    add_rotation_action(bs, "j", "j");
    return make_algebra("so3", {"j1", "j2", "j3"}, bs);
}

LieAlgebra build_iso3_h() {
    std::vector<BracketSpec> bs;
    add_rotation_action(bs, "j", "j");
    add_rotation_action(bs, "j", "p");
    return make_algebra("iso3_h", {"j1", "j2", "j3", "p1", "p2", "p3", "h"}, bs);
}

LieAlgebra build_galilei(bool extended) {
    std::vector<BracketSpec> bs;
    add_rotation_action(bs, "j", "j");
    add_rotation_action(bs, "j", "p");
    add_rotation_action(bs, "j", "kg");
    for (int i = 1; i <= 3; ++i)
        bs.push_back({"h", idx("kg", i), {{Rational(-1), idx("p", i)}}});
    if (extended)
        for (int i = 1; i <= 3; ++i)
            bs.push_back({idx("p", i), idx("kg", i), {{Rational(-1), "m"}}});
    const std::string name = extended ? "extended_galilei" : "galilei";
    return make_algebra(name, kinematical_generators("kg", extended, "h"), bs)
        .with_dual_names(kinematical_duals(extended, "h"));
}

LieAlgebra build_poincare() {
    std::vector<BracketSpec> bs;
    add_rotation_action(bs, "j", "j");
    add_rotation_action(bs, "j", "p");
    add_rotation_action(bs, "j", "kp");
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            BracketSpec spec{idx("kp", i), idx("kp", j), {}};
            for (int k = 1; k <= 3; ++k) {
                const int e = eps3(i, j, k);
                if (e != 0) spec.terms.emplace_back(Rational(-e), idx("j", k));
            }
            bs.push_back(std::move(spec));
        }
    for (int i = 1; i <= 3; ++i)
        bs.push_back({"h", idx("kp", i), {{Rational(-1), idx("p", i)}}});
    for (int i = 1; i <= 3; ++i)
        bs.push_back({idx("p", i), idx("kp", i), {{Rational(-1), "h"}}});
    return make_algebra("poincare", kinematical_generators("kp", false, "h"), bs)
        .with_dual_names(kinematical_duals(false, "h"));
}

LieAlgebra build_extended_poincare() {
    return trivial_central_extension(build_poincare(), "m").renamed("extended_poincare");
}

LieAlgebra build_extended_poincare_hbar() {
    const LieAlgebra ext = build_extended_poincare();
    const int n = ext.dimension();
    RationalMatrix matrix(n, n);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        const std::string& g = ext.generators()[i];
        matrix.set(i, i, Rational(1));
        names.push_back(g == "h" ? "hbar" : g);
    }
    // hbar = h - m
    matrix.set(ext.generator_index("h"), ext.generator_index("m"), Rational(-1));
    LieAlgebra hb = change_basis(ext, BasisChange{matrix, names});
    return hb.renamed("extended_poincare_hbar")
        .with_dual_names(kinematical_duals(true, "hbar"));
}

// Tensor-basis Poincare presentation over the metric (+,-,-,-):
//   [M_uv, P_r] = eta_ur P_v - eta_vr P_u
//   [M_uv, M_rs] = eta_ur M_vs - eta_us M_vr - eta_vr M_us + eta_vs M_ur
// stored over generators p0..p3, boosts m0i = M_0i and rotations
// J_ij = -M_ij (named j23, j31, j12), so that the J_k = (1/2)eps_kij J_ij,
// K_i = M_0i relabeling reproduces the kinematical table exactly.
LieAlgebra build_poincare_lorentz4() {
    const int eta[4] = {1, -1, -1, -1};

    // Stored rotation names by axis: j23 <-> axis 1, j31 <-> 2, j12 <-> 3.
    auto rotation_name = [](int axis) {
        switch (axis) {
            case 1: return std::string("j23");
            case 2: return std::string("j31");
            default: return std::string("j12");
        }
    };

    // Expresses the tensor component M_ab (a != b) over stored generators.
    auto tensor = [&](int a, int b) -> std::pair<Rational, std::string> {
        if (a == 0) return {Rational(1), "m0" + std::to_string(b)};
        if (b == 0) return {Rational(-1), "m0" + std::to_string(a)};
        for (int k = 1; k <= 3; ++k) {
            const int e = eps3(a, b, k);
            if (e != 0) return {Rational(-e), rotation_name(k)};
        }
        throw Error("internal: bad tensor component");
    };

    struct GenDesc {
        std::string name;
        bool is_momentum;
        int a = 0, b = 0;   // tensor indices for M generators
        int mu = 0;         // index for P generators
        Rational coeff{1};  // stored generator = coeff * tensor component
    };
    std::vector<GenDesc> gens;
    for (int mu = 0; mu <= 3; ++mu)
        gens.push_back({"p" + std::to_string(mu), true, 0, 0, mu, Rational(1)});
    for (int i = 1; i <= 3; ++i)
        gens.push_back({"m0" + std::to_string(i), false, 0, i, 0, Rational(1)});
    for (int axis = 1; axis <= 3; ++axis) {
        const int a = axis == 1 ? 2 : (axis == 2 ? 3 : 1);
        const int b = axis == 1 ? 3 : (axis == 2 ? 1 : 2);
        // stored j_ab = -M_ab
        gens.push_back({rotation_name(axis), false, a, b, 0, Rational(-1)});
    }

    auto bracket_MP = [&](int u, int v, int r) {
        std::vector<std::pair<Rational, std::string>> terms;
        if (eta[u] != 0 && u == r)
            terms.emplace_back(Rational(eta[u]), "p" + std::to_string(v));
        if (eta[v] != 0 && v == r)
            terms.emplace_back(Rational(-eta[v]), "p" + std::to_string(u));
        return terms;
    };
    auto bracket_MM = [&](int u, int v, int r, int s) {
        std::vector<std::pair<Rational, std::string>> terms;
        auto add = [&](int sign, int metric, int a, int b) {
            if (metric == 0 || a == b) return;
            auto [c, g] = tensor(a, b);
            terms.emplace_back(Rational(sign * metric) * c, g);
        };
        if (u == r) add(+1, eta[u], v, s);
        if (u == s) add(-1, eta[u], v, r);
        if (v == r) add(-1, eta[v], u, s);
        if (v == s) add(+1, eta[v], u, r);
        return terms;
    };

    std::vector<std::string> names;
    for (const auto& g : gens) names.push_back(g.name);
    std::vector<BracketSpec> bs;
    for (std::size_t x = 0; x < gens.size(); ++x)
        for (std::size_t y = x + 1; y < gens.size(); ++y) {
            const auto& A = gens[x];
            const auto& B = gens[y];
            std::vector<std::pair<Rational, std::string>> terms;
            if (A.is_momentum && B.is_momentum) {
                // [P, P] = 0
            } else if (!A.is_momentum && B.is_momentum) {
                terms = bracket_MP(A.a, A.b, B.mu);
            } else if (A.is_momentum && !B.is_momentum) {
                terms = bracket_MP(B.a, B.b, A.mu);
                for (auto& [c, g] : terms) c = -c;
            } else {
                terms = bracket_MM(A.a, A.b, B.a, B.b);
            }
            const Rational scale = A.coeff * B.coeff;
            BracketSpec spec{A.name, B.name, {}};
            for (auto& [c, g] : terms) {
                const Rational v = c * scale;
                if (!v.is_zero()) spec.terms.emplace_back(v, g);
            }
            if (!spec.terms.empty()) bs.push_back(std::move(spec));
        }
    return make_algebra("poincare_lorentz4", names, bs);
}

MultiPoly pv(const std::string& name) { return MultiPoly::variable(var(name)); }

MultiPoly dot(const std::string& a, const std::string& b) {
    MultiPoly r;
    for (int i = 1; i <= 3; ++i) r = r + pv(idx(a, i)) * pv(idx(b, i));
    return r;
}

// j . (p x k) = eps_ijk j_k p_i k_j summed over all indices
MultiPoly triple_product() {
    MultiPoly r;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                const int e = eps3(i, j, k);
                if (e != 0)
                    r = r + pv(idx("j", k)).scaled(Rational(e)) * pv(idx("p", i)) * pv(idx("k", j));
            }
    return r;
}

MultiPoly half() { return MultiPoly::constant(Rational(1, 2)); }

// Quartic Casimir shape A^2 J.J + s1 (J.P)^2 + s2 (P.P)(K.K) + s3 (P.K)^2
// + s4 * 2A J.(PxK); the printed variants disagree on the signs.
MultiPoly quartic(const MultiPoly& A, int s1, int s2, int s3, int s4) {
    const MultiPoly jp = dot("j", "p");
    MultiPoly r = A * A * dot("j", "j");
    r = r + (jp * jp).scaled(Rational(s1));
    r = r + (dot("p", "p") * dot("k", "k")).scaled(Rational(s2));
    const MultiPoly pk = dot("p", "k");
    r = r + (pk * pk).scaled(Rational(s3));
    r = r + (A * triple_product()).scaled(Rational(2 * s4));
    return r;
}

// Oracle-resolved quartic: base A^2 J.J plus the sign-ambiguous groups.
MultiPoly resolved_quartic(const LieAlgebra& L, const MultiPoly& A, bool with_jp_group) {
    const MultiPoly jp = dot("j", "p");
    std::vector<MultiPoly> groups;
    if (with_jp_group) groups.push_back(jp * jp);
    groups.push_back(dot("p", "p") * dot("k", "k"));
    const MultiPoly pk = dot("p", "k");
    groups.push_back(pk * pk);
    groups.push_back((A * triple_product()).scaled(Rational(2)));
    const auto hits = resolve_sign_variants(L, A * A * dot("j", "j"), groups);
    if (hits.size() != 1)
        throw Error("catalog: quartic sign resolution is not unique for '" + L.name() + "'");
    return hits.front().polynomial;
}

CatalogEntry entry_so3() {
    CatalogEntry e;
    e.algebra = build_so3();
    e.reference_invariants.push_back({"JJ", dot("j", "j"), "so3", false});
    e.expected_invariant_count = 1;
    return e;
}

CatalogEntry entry_iso3_h() {
    CatalogEntry e;
    e.algebra = build_iso3_h();
    e.expected_invariant_count = 3;
    return e;
}

CatalogEntry entry_galilei() {
    CatalogEntry e;
    e.algebra = build_galilei(false);
    e.expected_invariant_count = 2;
    return e;
}

CatalogEntry entry_extended_galilei() {
    CatalogEntry e;
    e.algebra = build_galilei(true);
    e.reference_invariants.push_back({"C1G", pv("m"), "eq-5.2", false});
    e.reference_invariants.push_back(
        {"C2G", pv("m") * pv("h") - half() * dot("p", "p"), "eq-5.2", false});
    e.reference_invariants.push_back(
        {"C4G-printed-eq52", quartic(pv("m"), 0, -1, +1, -1), "eq-5.2", true});
    e.reference_invariants.push_back(
        {"C4G", resolved_quartic(e.algebra, pv("m"), false), "eq-5.2", false});
    e.expected_invariant_count = 3;
    return e;
}

CatalogEntry entry_poincare() {
    CatalogEntry e;
    e.algebra = build_poincare();
    e.reference_invariants.push_back(
        {"C2P", pv("h") * pv("h") - dot("p", "p"), "eq-13", false});
    e.reference_invariants.push_back(
        {"C4P-printed-eq13", quartic(pv("h"), +1, -1, -1, -1), "eq-13", true});
    e.reference_invariants.push_back(
        {"C4P-printed-eq511-style", quartic(pv("h"), -1, -1, +1, -1), "eq-5.11", true});
    e.reference_invariants.push_back(
        {"C4P", resolved_quartic(e.algebra, pv("h"), true), "eq-13", false});
    e.expected_invariant_count = 2;
    return e;
}

CatalogEntry entry_poincare_lorentz4() {
    CatalogEntry e;
    e.algebra = build_poincare_lorentz4();
    e.expected_invariant_count = 2;
    return e;
}

CatalogEntry entry_extended_poincare() {
    CatalogEntry e;
    e.algebra = build_extended_poincare();
    e.reference_invariants.push_back({"C1PE", pv("m"), "eq-5.11", false});
    e.reference_invariants.push_back(
        {"C2P", pv("h") * pv("h") - dot("p", "p"), "eq-13", false});
    e.reference_invariants.push_back(
        {"C4P", resolved_quartic(e.algebra, pv("h"), true), "eq-13", false});
    e.expected_invariant_count = 3;
    return e;
}

CatalogEntry entry_extended_poincare_hbar() {
    CatalogEntry e;
    e.algebra = build_extended_poincare_hbar();
    const MultiPoly A = pv("hbar") + pv("m");
    e.reference_invariants.push_back({"C1PE", pv("m"), "eq-5.11", false});
    e.reference_invariants.push_back({"C2PE", A * A - dot("p", "p"), "eq-5.11", false});
    e.reference_invariants.push_back(
        {"C4PE-printed-eq511", quartic(A, -1, -1, +1, -1), "eq-5.11", true});
    e.reference_invariants.push_back(
        {"C4PE-printed-eq13-style", quartic(A, +1, -1, -1, -1), "eq-13", true});
    e.reference_invariants.push_back(
        {"C4PE", resolved_quartic(e.algebra, A, true), "eq-5.11", false});
    e.expected_invariant_count = 3;
    return e;
}

}  // namespace

CatalogEntry load_builtin(const std::string& name) {
    if (name == "so3") return entry_so3();
    if (name == "iso3_h") return entry_iso3_h();
    if (name == "galilei") return entry_galilei();
    if (name == "extended_galilei") return entry_extended_galilei();
    if (name == "poincare") return entry_poincare();
    if (name == "poincare_lorentz4") return entry_poincare_lorentz4();
    if (name == "extended_poincare") return entry_extended_poincare();
    if (name == "extended_poincare_hbar") return entry_extended_poincare_hbar();
    throw UnknownCatalogName("no builtin algebra named '" + name + "'");
}

bool is_builtin(const std::string& name) {
    static const char* names[] = {"so3",      "iso3_h",           "galilei",
                                  "extended_galilei", "poincare", "poincare_lorentz4",
                                  "extended_poincare", "extended_poincare_hbar"};
    for (const char* n : names)
        if (name == n) return true;
    return false;
}

std::vector<std::pair<std::string, int>> list_builtins() {
    std::vector<std::pair<std::string, int>> out;
    for (const char* n : {"so3", "iso3_h", "galilei", "extended_galilei", "poincare",
                          "poincare_lorentz4", "extended_poincare", "extended_poincare_hbar"})
        out.emplace_back(n, load_builtin(n).algebra.dimension());
    return out;
}

const ReferenceInvariant& find_reference(const CatalogEntry& entry, const std::string& label) {
    for (const auto& r : entry.reference_invariants)
        if (r.label == label) return r;
    throw Error("catalog entry '" + entry.algebra.name() + "' has no reference '" + label + "'");
}

std::vector<std::pair<std::string, DiffOperator>> printed_appendix_operators() {
    auto v = [](const char* n) { return MultiPoly::variable(var(n)); };
    const MultiPoly A = v("hbar") + v("m");
    auto T = [&](MultiPoly coeff, const char* target) {
        return DiffOperator::Term{std::move(coeff), var(target)};
    };
    std::vector<std::pair<std::string, DiffOperator>> ops;
    // Verbatim transcription; the audit flags where it disagrees with the
    // machine-derived operators.
    ops.emplace_back("j1", DiffOperator({T(v("j3"), "j2"), T(-v("j2"), "j3"),
                                         T(v("p3"), "p2"), T(-v("p2"), "p3"),
                                         T(v("k3"), "k2"), T(-v("p2"), "k3")}));
    ops.emplace_back("j2", DiffOperator({T(-v("j3"), "j1"), T(v("j1"), "j3"),
                                         T(-v("p3"), "p1"), T(v("p1"), "p3"),
                                         T(-v("k3"), "k1"), T(-v("k1"), "k3")}));
    ops.emplace_back("j3", DiffOperator({T(v("j2"), "j1"), T(-v("j1"), "j2"),
                                         T(v("p2"), "p1"), T(-v("p1"), "p2"),
                                         T(v("k2"), "k1"), T(-v("k1"), "k2")}));
    ops.emplace_back("p1", DiffOperator({T(v("p3"), "j2"), T(-v("p2"), "j3"), T(-A, "k1")}));
    ops.emplace_back("p2", DiffOperator({T(-v("p3"), "j1"), T(v("p1"), "j3"), T(-A, "k2")}));
    ops.emplace_back("p3", DiffOperator({T(v("p2"), "j1"), T(-v("p1"), "j2"), T(-A, "k3")}));
    ops.emplace_back("kp1", DiffOperator({T(v("k3"), "j2"), T(-v("k2"), "j3"), T(A, "p1"),
                                          T(-v("j3"), "k2"), T(v("j2"), "k3"),
                                          T(v("p1"), "hbar")}));
    ops.emplace_back("kp2", DiffOperator({T(-v("k3"), "j1"), T(v("k1"), "j3"), T(A, "p2"),
                                          T(v("j3"), "k1"), T(-v("j1"), "k3"),
                                          T(v("p2"), "hbar")}));
    ops.emplace_back("kp3", DiffOperator({T(v("k2"), "j1"), T(-v("k1"), "j2"), T(A, "p3"),
                                          T(-v("j2"), "k1"), T(v("j1"), "k2"),
                                          T(v("p3"), "hbar")}));
    ops.emplace_back("hbar", DiffOperator({T(v("p1"), "k1"), T(v("p2"), "k2"),
                                           T(v("p3"), "k3")}));
    ops.emplace_back("m", DiffOperator());
    return ops;
}

std::map<std::string, std::string> lorentz4_relabel() {
    return {{"p0", "h"},    {"p1", "p1"},   {"p2", "p2"},   {"p3", "p3"},
            {"m01", "kp1"}, {"m02", "kp2"}, {"m03", "kp3"}, {"j23", "j1"},
            {"j31", "j2"},  {"j12", "j3"}};
}

GradedScaling canonical_contraction_scaling() {
    GradedScaling s;
    for (const char* g : {"j1", "j2", "j3"}) s.exponents[g] = 0;
    for (const char* g : {"p1", "p2", "p3", "kp1", "kp2", "kp3"}) s.exponents[g] = 1;
    s.exponents["hbar"] = 0;
    s.exponents["m"] = 2;
    return s;
}

std::map<std::string, std::string> contraction_relabel() {
    std::map<std::string, std::string> relabel;
    for (const char* g : {"j1", "j2", "j3", "p1", "p2", "p3", "m"}) relabel[g] = g;
    relabel["kp1"] = "kg1";
    relabel["kp2"] = "kg2";
    relabel["kp3"] = "kg3";
    relabel["hbar"] = "h";
    return relabel;
}

}  // namespace liealg
