#include "liealg/invariants.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"
#include "liealg/errors.hpp"
#include "liealg/matrix.hpp"

namespace liealg {

DiffOperator::DiffOperator(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->coefficient.is_zero()) {
            it = terms_.erase(it);
            continue;
        }
        if (!(it->coefficient.is_homogeneous() && it->coefficient.total_degree() == 1))
            throw Error("DiffOperator coefficients must be homogeneous of degree 1");
        ++it;
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.target < b.target; });
}

MultiPoly DiffOperator::apply(const MultiPoly& p) const {
    MultiPoly r;
    for (const auto& t : terms_) r = r + t.coefficient * poly_partial(p, t.target);
    return r;
}

DiffOperator DiffOperator::negated() const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back({-t.coefficient, t.target});
    return DiffOperator(std::move(terms));
}

std::string DiffOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coefficient.leading_coefficient().sign() < 0;
        const MultiPoly mag = neg ? -t.coefficient : t.coefficient;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag.term_count() > 1)
            os << "(" << mag.to_string() << ")";
        else
            os << mag.to_string();
        os << "*d/d(" << var_name(t.target) << ")";
    }
    return os.str();
}

DiffOperator coadjoint_operator(const LieAlgebra& L, const std::string& generator) {
    const int a = L.generator_index(generator);  // throws UnknownGenerator
    const int n = L.dimension();
    std::vector<Var> duals;
    duals.reserve(n);
    for (const auto& d : L.dual_names()) duals.push_back(var(d));

    std::vector<DiffOperator::Term> terms;
    for (int b = 0; b < n; ++b) {
        MultiPoly coeff;
        for (int c = 0; c < n; ++c) {
            const Rational f = L.structure_constant(a, b, c);
            if (!f.is_zero()) coeff.add_term(f, Monomial::of(duals[c]));
        }
        if (!coeff.is_zero()) terms.push_back({std::move(coeff), duals[b]});
    }
    return DiffOperator(std::move(terms));
}

namespace {

void check_variables(const LieAlgebra& L, const MultiPoly& p) {
    std::set<Var> allowed;
    for (const auto& d : L.dual_names()) allowed.insert(var(d));
    for (Var v : p.variables())
        if (!allowed.count(v))
            throw ForeignVariable("polynomial uses variable '" + var_name(v) +
                                  "' outside the dual coordinates of '" + L.name() + "'");
}

std::vector<DiffOperator> coadjoint_operators(const LieAlgebra& L) {
    std::vector<DiffOperator> ops;
    ops.reserve(L.dimension());
    for (const auto& g : L.generators()) ops.push_back(coadjoint_operator(L, g));
    return ops;
}

// All degree-d monomials over `vars`, in descending monomial order.
void enumerate_monomials(const std::vector<Var>& vars, std::size_t at, int degree,
                         std::vector<std::pair<Var, unsigned>>& prefix,
                         std::vector<Monomial>& out) {
    if (at + 1 == vars.size()) {
        auto factors = prefix;
        if (degree > 0) factors.emplace_back(vars[at], degree);
        out.emplace_back(std::move(factors));
        return;
    }
    for (int e = degree; e >= 0; --e) {
        if (e > 0) prefix.emplace_back(vars[at], e);
        enumerate_monomials(vars, at + 1, degree - e, prefix, out);
        if (e > 0) prefix.pop_back();
    }
}

std::vector<Monomial> monomial_column_order(const LieAlgebra& L, int degree) {
    std::vector<Var> duals;
    for (const auto& d : L.dual_names()) duals.push_back(var(d));
    std::sort(duals.begin(), duals.end());
    if (duals.empty()) {
        if (degree == 0) return {Monomial::one()};
        return {};
    }
    std::vector<Monomial> cols;
    std::vector<std::pair<Var, unsigned>> prefix;
    enumerate_monomials(duals, 0, degree, prefix, cols);
    return cols;
}

// Canonicalizes a spanning set: reduced row echelon over descending monomial
// columns, integer content 1, positive leading coefficient, sorted by
// leading monomial.
std::vector<MultiPoly> canonical_basis(std::vector<MultiPoly> span) {
    std::vector<MultiPoly> rows;
    for (auto& p : span) {
        for (const auto& row : rows) {
            if (p.is_zero()) break;
            const Rational c = p.coefficient(row.leading_monomial());
            if (!c.is_zero()) p = p - row.scaled(c / row.leading_coefficient());
        }
        if (!p.is_zero()) {
            rows.push_back(p.scaled(p.leading_coefficient().inverse()));
            std::sort(rows.begin(), rows.end(), [](const MultiPoly& a, const MultiPoly& b) {
                return compare_monomials_desc(a.leading_monomial(), b.leading_monomial()) < 0;
            });
        }
    }
    // Back-reduce to reduced echelon form.
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const Rational c = rows[i].coefficient(rows[j].leading_monomial());
            if (!c.is_zero()) rows[i] = rows[i] - rows[j].scaled(c);
        }
    // Integer content 1, leading coefficient positive.
    for (auto& p : rows) {
        mpz_class lcm = 1;
        mpz_class content = 0;
        for (const auto& [m, c] : p.terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
        for (const auto& [m, c] : p.terms()) {
            mpz_class scaled = c.numerator() * (lcm / c.denominator());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        }
        Rational scale = Rational(mpq_class(lcm, content));
        if (p.leading_coefficient().sign() < 0) scale = -scale;
        p = p.scaled(scale);
    }
    return rows;
}

}  // namespace

bool is_invariant(const LieAlgebra& L, const MultiPoly& p) {
    check_variables(L, p);
    for (const auto& g : L.generators())
        if (!coadjoint_operator(L, g).apply(p).is_zero()) return false;
    return true;
}

InvariantBasis invariant_space(const LieAlgebra& L, int degree) {
    if (degree < 0) throw Error("invariant_space: degree must be nonnegative");
    const auto cols = monomial_column_order(L, degree);
    std::map<Monomial, int, MonomialDescLess> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], static_cast<int>(i));

    // Stacked system: one row per (operator, image monomial) with a nonzero
    // entry; columns are the degree-d monomials.
    const auto ops = coadjoint_operators(L);
    std::vector<std::map<Monomial, std::map<int, Rational>, MonomialDescLess>> rows_per_op(
        ops.size());
    for (std::size_t oi = 0; oi < ops.size(); ++oi) {
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            const MultiPoly image = ops[oi].apply(MultiPoly::term(Rational(1), cols[ci]));
            for (const auto& [m, c] : image.terms())
                rows_per_op[oi][m][static_cast<int>(ci)] = c;
        }
    }
    int row_count = 0;
    for (const auto& rows : rows_per_op) row_count += static_cast<int>(rows.size());

    RationalMatrix system(row_count, static_cast<int>(cols.size()));
    int r = 0;
    for (const auto& rows : rows_per_op)
        for (const auto& [m, entries] : rows) {
            for (const auto& [c, v] : entries) system.set(r, c, v);
            ++r;
        }

    std::vector<MultiPoly> span;
    for (const auto& tuple : nullspace(system)) {
        MultiPoly p;
        for (std::size_t i = 0; i < cols.size(); ++i)
            p.add_term(tuple[i], cols[i]);
        span.push_back(std::move(p));
    }
    return InvariantBasis{L.name(), degree, canonical_basis(std::move(span))};
}

std::string serialize_invariant_basis(const InvariantBasis& basis, bool fresh_only) {
    nlohmann::json j;
    j["algebra"] = basis.algebra;
    j["degree"] = basis.degree;
    j["new"] = fresh_only;
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& p : basis.polynomials) polys.push_back(p.to_string());
    j["polynomials"] = polys;
    return j.dump(2) + "\n";
}

namespace {

// Products of lower-degree invariants that are homogeneous of degree d.
void product_span(const std::vector<InvariantBasis>& lower, int remaining, int min_degree,
                  const MultiPoly& acc, std::vector<MultiPoly>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (const auto& basis : lower) {
        if (basis.degree < min_degree || basis.degree > remaining || basis.degree <= 0)
            continue;
        for (const auto& p : basis.polynomials)
            product_span(lower, remaining - basis.degree, basis.degree, acc * p, out);
    }
}

}  // namespace

InvariantBasis new_invariants(const LieAlgebra& L, int degree,
                              const std::vector<InvariantBasis>& lower) {
    for (int d = 1; d < degree; ++d) {
        const bool covered = std::any_of(lower.begin(), lower.end(),
                                         [&](const InvariantBasis& b) { return b.degree == d; });
        if (!covered)
            throw Error("new_invariants: lower bases must cover degree " + std::to_string(d));
    }
    InvariantBasis full = invariant_space(L, degree);

    std::vector<MultiPoly> products;
    product_span(lower, degree, 1, MultiPoly::constant(Rational(1)), products);
    const std::vector<MultiPoly> product_basis = canonical_basis(std::move(products));

    // Reduce the full space modulo the product span.
    std::vector<MultiPoly> fresh;
    for (MultiPoly p : full.polynomials) {
        for (const auto& row : product_basis) {
            if (p.is_zero()) break;
            const Rational c = p.coefficient(row.leading_monomial());
            if (!c.is_zero()) p = p - row.scaled(c / row.leading_coefficient());
        }
        if (!p.is_zero()) fresh.push_back(std::move(p));
    }
    return InvariantBasis{L.name(), degree, canonical_basis(std::move(fresh))};
}

int invariant_count(const LieAlgebra& L, unsigned long seed) {
    const int n = L.dimension();
    std::mt19937_64 rng(seed);
    auto draw_point = [&]() {
        std::vector<Rational> x(n);
        for (int i = 0; i < n; ++i) {
            // Uniform in [-10^6, 10^6], written out so the stream is
            // reproducible across standard libraries.
            const auto r = static_cast<long>(rng() % 2000001ul);
            x[i] = Rational(r - 1000000);
        }
        return x;
    };
    auto rank_at = [&](const std::vector<Rational>& x) {
        RationalMatrix m(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                Rational v(0);
                for (int c = 0; c < n; ++c) {
                    const Rational f = L.structure_constant(a, b, c);
                    if (!f.is_zero()) v += f * x[c];
                }
                m.set(a, b, v);
            }
        return generic_rank(m);
    };

    constexpr int kRetries = 5;
    int best = rank_at(draw_point());
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        const int other = rank_at(draw_point());
        if (other == best) return n - best;
        best = std::max(best, other);
    }
    throw RankUnstable("invariant_count: rank did not stabilize for algebra '" + L.name() +
                       "'");
}

ContractedInvariant contract_invariant(const LieAlgebra& L, const GradedScaling& s,
                                       const MultiPoly& p) {
    if (!is_invariant(L, p))
        throw NotInvariant("contract_invariant: input is not an invariant of '" + L.name() +
                           "'");
    const LieAlgebra contracted = contraction_limit(rescale(L, s));  // may throw

    // Dual coordinates scale inversely to the generators.
    std::map<Var, EpsilonImage> images;
    for (int i = 0; i < L.dimension(); ++i) {
        const Var v = var(L.dual_names()[i]);
        images[v] = EpsilonImage{-s.exponent(L.generators()[i]), v};
    }
    const EpsilonSeries series = poly_substitute(p, images);
    auto [shift, limit] = eps_limit(series);
    if (!is_invariant(contracted, limit))
        throw Error("internal: contracted invariant limit fails invariance");
    return ContractedInvariant{shift, limit, series.shifted(shift)};
}

MultiPoly evaluate_at_rest(const MultiPoly& p) {
    std::set<Var> allowed;
    for (const auto& name : seeded_variable_names()) allowed.insert(var(name));
    for (Var v : p.variables())
        if (!allowed.count(v))
            throw ForeignVariable("evaluate_at_rest: variable '" + var_name(v) +
                                  "' is not a kinematical coordinate");
    return poly_substitute_zero(p, {var("p1"), var("p2"), var("p3")});
}

std::vector<SignResolution> resolve_sign_variants(const LieAlgebra& L,
                                                  const MultiPoly& base,
                                                  const std::vector<MultiPoly>& groups) {
    if (groups.size() > 16) throw Error("resolve_sign_variants: too many groups");
    std::vector<SignResolution> hits;
    const std::size_t combos = std::size_t(1) << groups.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        MultiPoly candidate = base;
        std::vector<int> signs(groups.size(), 1);
        for (std::size_t i = 0; i < groups.size(); ++i) {
            if (mask & (std::size_t(1) << i)) {
                signs[i] = -1;
                candidate = candidate - groups[i];
            } else {
                candidate = candidate + groups[i];
            }
        }
        if (is_invariant(L, candidate)) hits.push_back({std::move(signs), std::move(candidate)});
    }
    return hits;
}

}  // namespace liealg
