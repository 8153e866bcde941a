#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liealg/algebra_io.hpp"
#include "liealg/catalog.hpp"
#include "liealg/errors.hpp"
#include "liealg/invariants.hpp"
#include "liealg/report.hpp"

namespace py = pybind11;
using namespace liealg;

namespace {

GradedScaling scaling_from_dict(const std::map<std::string, int>& exponents) {
    GradedScaling s;
    s.exponents = std::map<std::string, int>(exponents.begin(), exponents.end());
    return s;
}

}  // namespace

PYBIND11_MODULE(_liealg, m) {
    m.doc() = "exact-arithmetic Lie algebra contractions and Casimir invariants";

    // translators run newest-first, so the base class goes in first
    py::register_exception<Error>(m, "LiealgError");
    py::register_exception<IllDefinedContraction>(m, "IllDefinedContractionError");

    py::class_<Rational>(m, "Rational")
        .def(py::init([](long n, long d) { return Rational(n, d); }), py::arg("numerator"),
             py::arg("denominator") = 1)
        .def_static("parse", &Rational::parse)
        .def("__str__", &Rational::to_string)
        .def("__repr__",
             [](const Rational& r) { return "Rational(\"" + r.to_string() + "\")"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; });

    py::class_<MultiPoly>(m, "Poly")
        .def("__str__", &MultiPoly::to_string)
        .def("__repr__", [](const MultiPoly& p) { return "Poly(" + p.to_string() + ")"; })
        .def("__eq__", [](const MultiPoly& a, const MultiPoly& b) { return a == b; })
        .def("__add__", [](const MultiPoly& a, const MultiPoly& b) { return a + b; })
        .def("__sub__", [](const MultiPoly& a, const MultiPoly& b) { return a - b; })
        .def("__mul__", [](const MultiPoly& a, const MultiPoly& b) { return a * b; })
        .def("__neg__", [](const MultiPoly& a) { return -a; })
        .def("is_zero", &MultiPoly::is_zero)
        .def("total_degree", &MultiPoly::total_degree)
        .def("partial", [](const MultiPoly& p, const std::string& v) {
            return poly_partial(p, var(v));
        });

    m.def("poly_var", [](const std::string& name) { return MultiPoly::variable(var(name)); },
          "degree-one polynomial for a single variable");
    m.def("poly_const", [](long n, long d) { return MultiPoly::constant(Rational(n, d)); },
          py::arg("numerator"), py::arg("denominator") = 1);

    py::class_<AlgebraElement>(m, "Element")
        .def("__str__", &AlgebraElement::to_string)
        .def("__repr__",
             [](const AlgebraElement& e) { return "Element(" + e.to_string() + ")"; })
        .def("__eq__", [](const AlgebraElement& a, const AlgebraElement& b) { return a == b; })
        .def("is_zero", &AlgebraElement::is_zero)
        .def("coefficients", &AlgebraElement::coefficients);

    py::class_<LieAlgebra>(m, "LieAlgebra")
        .def_property_readonly("name", &LieAlgebra::name)
        .def_property_readonly("generators", &LieAlgebra::generators)
        .def_property_readonly("dimension", &LieAlgebra::dimension)
        .def_property_readonly("dual_names", &LieAlgebra::dual_names)
        .def("bracket",
             [](const LieAlgebra& L, const std::string& a, const std::string& b) {
                 return bracket(L, AlgebraElement::generator(a), AlgebraElement::generator(b));
             })
        .def("bracket_elements",
             [](const LieAlgebra& L, const AlgebraElement& u, const AlgebraElement& v) {
                 return bracket(L, u, v);
             })
        .def("jacobi_violations", [](const LieAlgebra& L) { return jacobi_check(L); })
        .def("__repr__", [](const LieAlgebra& L) {
            return "LieAlgebra(" + L.name() + ", dim=" + std::to_string(L.dimension()) + ")";
        });

    m.def("element", [](const std::map<std::string, Rational>& coeffs) {
        std::map<std::string, Rational> m2(coeffs.begin(), coeffs.end());
        return AlgebraElement(std::move(m2));
    });
    m.def("generator", &AlgebraElement::generator);

    m.def("load_builtin", [](const std::string& name) { return load_builtin(name).algebra; });
    m.def("list_builtins", []() { return list_builtins(); });
    m.def("reference_invariants", [](const std::string& name) {
        std::vector<std::tuple<std::string, MultiPoly, std::string, bool>> out;
        for (const auto& r : load_builtin(name).reference_invariants)
            out.emplace_back(r.label, r.polynomial, r.anchor, r.printed_variant);
        return out;
    });
    m.def("expected_invariant_count",
          [](const std::string& name) { return load_builtin(name).expected_invariant_count; });

    m.def("parse_algebra", &parse_algebra);
    m.def("save_algebra", &save_algebra);

    m.def("trivial_central_extension", &trivial_central_extension);
    m.def("subalgebra", &subalgebra);
    m.def("same_structure", &same_structure);

    m.def("rescale_exponents",
          [](const LieAlgebra& L, const std::map<std::string, int>& exponents) {
              const ScaledAlgebra sa = rescale(L, scaling_from_dict(exponents));
              std::map<std::tuple<std::string, std::string, std::string>, std::pair<int, std::string>>
                  out;
              for (const auto& [key, sc] : sa.scaled_constants) {
                  const auto& g = L.generators();
                  out[{g[std::get<0>(key)], g[std::get<1>(key)], g[std::get<2>(key)]}] = {
                      sc.exponent, sc.value.to_string()};
              }
              return out;
          });
    m.def("contraction_limit",
          [](const LieAlgebra& L, const std::map<std::string, int>& exponents) {
              return contraction_limit(rescale(L, scaling_from_dict(exponents)));
          });
    m.def("contract_and_compare",
          [](const LieAlgebra& L, const std::map<std::string, int>& exponents,
             const LieAlgebra& reference, const std::map<std::string, std::string>& relabel) {
              return contract_and_compare(L, scaling_from_dict(exponents), reference, relabel);
          });
    m.def("parse_scale_spec", [](const LieAlgebra& L, const std::string& spec) {
        return parse_scale_spec(L, spec).exponents;
    });

    m.def("coadjoint_operator_text", [](const LieAlgebra& L, const std::string& g) {
        return coadjoint_operator(L, g).to_string();
    });
    m.def("apply_coadjoint", [](const LieAlgebra& L, const std::string& g, const MultiPoly& p) {
        return coadjoint_operator(L, g).apply(p);
    });
    m.def("is_invariant", &is_invariant);
    m.def("invariant_space", [](const LieAlgebra& L, int degree) {
        return invariant_space(L, degree).polynomials;
    });
    m.def("new_invariants", [](const LieAlgebra& L, int degree) {
        std::vector<InvariantBasis> lower;
        for (int d = 1; d < degree; ++d) lower.push_back(invariant_space(L, d));
        return new_invariants(L, degree, lower).polynomials;
    });
    m.def("invariant_count", &invariant_count, py::arg("algebra"), py::arg("seed") = 1ul);
    m.def("contract_invariant",
          [](const LieAlgebra& L, const std::map<std::string, int>& exponents,
             const MultiPoly& p) {
              const auto got = contract_invariant(L, scaling_from_dict(exponents), p);
              std::map<int, MultiPoly> expansion;
              for (const auto& [k, q] : got.expansion.coefficients()) expansion[k] = q;
              return py::make_tuple(got.shift, got.limit, expansion);
          });
    m.def("evaluate_at_rest", &evaluate_at_rest);

    m.def("verify_paper", [](unsigned long seed) {
        VerifyOptions options;
        options.seed = seed;
        options.second_seed = seed + 1;
        const VerificationReport report = run_paper_verification(options);
        std::vector<std::tuple<std::string, std::string, std::string, std::vector<std::string>>>
            records;
        for (const auto& c : report.checks) {
            const char* status = c.status == CheckStatus::Pass   ? "pass"
                                 : c.status == CheckStatus::Fail ? "fail"
                                                                 : "info";
            records.emplace_back(c.id, status, c.anchor, c.detail);
        }
        return py::make_tuple(report.fail_count() == 0, records);
    }, py::arg("seed") = 1ul);
}
