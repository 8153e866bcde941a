#include "liealg/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "liealg/errors.hpp"

namespace liealg {

AlgebraElement::AlgebraElement(std::map<std::string, Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
}

AlgebraElement AlgebraElement::generator(const std::string& name) {
    AlgebraElement e;
    e.coeffs_[name] = Rational(1);
    return e;
}

Rational AlgebraElement::coefficient(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const std::string& name, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(name, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (const auto& [g, c] : coeffs_) r.coeffs_.emplace(g, -c);
    return r;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    for (const auto& [g, c] : b.coeffs_) r.add(g, c);
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    for (const auto& [g, c] : b.coeffs_) r.add(g, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (const auto& [g, x] : coeffs_) r.coeffs_.emplace(g, x * c);
    return r;
}

std::string AlgebraElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : coeffs_) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        os << c.abs().to_string() << "*" << g;
    }
    return os.str();
}

bool LieAlgebra::has_generator(const std::string& g) const {
    return index_.count(g) != 0;
}

int LieAlgebra::generator_index(const std::string& g) const {
    auto it = index_.find(g);
    if (it == index_.end())
        throw UnknownGenerator("unknown generator '" + g + "' in algebra '" + name_ + "'");
    return it->second;
}

LieAlgebra LieAlgebra::with_dual_names(std::vector<std::string> duals) const {
    if (static_cast<int>(duals.size()) != dimension())
        throw Error("dual name list must match the generator count");
    LieAlgebra r = *this;
    r.dual_names_ = std::move(duals);
    return r;
}

LieAlgebra LieAlgebra::renamed(const std::string& new_name) const {
    LieAlgebra r = *this;
    r.name_ = new_name;
    return r;
}

Rational LieAlgebra::structure_constant(int a, int b, int c) const {
    if (a == b) return Rational(0);
    if (a < b) {
        auto it = constants_.find({a, b, c});
        return it == constants_.end() ? Rational(0) : it->second;
    }
    auto it = constants_.find({b, a, c});
    return it == constants_.end() ? Rational(0) : -it->second;
}

AlgebraElement LieAlgebra::bracket_basis(int a, int b) const {
    AlgebraElement r;
    if (a == b) return r;
    const bool flip = a > b;
    if (flip) std::swap(a, b);
    auto it = constants_.lower_bound({a, b, 0});
    for (; it != constants_.end(); ++it) {
        const auto& [key, c] = *it;
        if (std::get<0>(key) != a || std::get<1>(key) != b) break;
        r.add(generators_[std::get<2>(key)], flip ? -c : c);
    }
    return r;
}

LieAlgebra make_algebra(const std::string& name,
                        const std::vector<std::string>& generators,
                        const std::vector<BracketSpec>& brackets) {
    LieAlgebra L;
    L.name_ = name;
    L.generators_ = generators;
    L.dual_names_ = generators;
    for (int i = 0; i < static_cast<int>(generators.size()); ++i) {
        auto [it, inserted] = L.index_.emplace(generators[i], i);
        if (!inserted)
            throw DuplicateGenerator("duplicate generator '" + generators[i] + "'");
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& spec : brackets) {
        auto check = [&](const std::string& g) {
            auto it = L.index_.find(g);
            if (it == L.index_.end())
                throw UnknownGeneratorInBracket("bracket mentions unknown generator '" + g + "'");
            return it->second;
        };
        int a = check(spec.left);
        int b = check(spec.right);
        if (a == b)
            throw DuplicateBracketPair("bracket [" + spec.left + ", " + spec.right +
                                       "] pairs a generator with itself");
        Rational sign(1);
        if (a > b) {
            std::swap(a, b);
            sign = Rational(-1);
        }
        if (!seen.insert({a, b}).second)
            throw DuplicateBracketPair("bracket pair {" + spec.left + ", " + spec.right +
                                       "} listed more than once");
        for (const auto& [coeff, gen] : spec.terms) {
            const int c = check(gen);
            if (coeff.is_zero()) continue;
            auto [it, inserted] = L.constants_.emplace(std::make_tuple(a, b, c), coeff * sign);
            if (!inserted) {
                it->second += coeff * sign;
                if (it->second.is_zero()) L.constants_.erase(it);
            }
        }
    }
    return L;
}

AlgebraElement bracket(const LieAlgebra& L, const AlgebraElement& u, const AlgebraElement& v) {
    for (const auto* e : {&u, &v})
        for (const auto& [g, c] : e->coefficients())
            if (!L.has_generator(g))
                throw ForeignGenerator("element mentions generator '" + g +
                                       "' foreign to algebra '" + L.name() + "'");
    AlgebraElement r;
    for (const auto& [ga, ca] : u.coefficients()) {
        const int a = L.generator_index(ga);
        for (const auto& [gb, cb] : v.coefficients()) {
            const int b = L.generator_index(gb);
            const AlgebraElement base = L.bracket_basis(a, b);
            for (const auto& [gc, cc] : base.coefficients()) r.add(gc, ca * cb * cc);
        }
    }
    return r;
}

std::vector<std::array<std::string, 3>> jacobi_check(const LieAlgebra& L) {
    std::vector<std::array<std::string, 3>> violations;
    const int n = L.dimension();
    const auto& gens = L.generators();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                auto nested = [&](int x, int y, int z) {
                    AlgebraElement inner = L.bracket_basis(x, y);
                    AlgebraElement zel = AlgebraElement::generator(gens[z]);
                    return bracket(L, inner, zel);
                };
                AlgebraElement sum =
                    nested(a, b, c) + nested(b, c, a) + nested(c, a, b);
                if (!sum.is_zero()) violations.push_back({gens[a], gens[b], gens[c]});
            }
    return violations;
}

LieAlgebra trivial_central_extension(const LieAlgebra& L, const std::string& central_name) {
    if (L.has_generator(central_name))
        throw DuplicateGenerator("central generator '" + central_name + "' already present");
    std::vector<std::string> gens = L.generators();
    gens.push_back(central_name);
    std::vector<BracketSpec> brackets;
    const int n = L.dimension();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            AlgebraElement e = L.bracket_basis(a, b);
            if (e.is_zero()) continue;
            BracketSpec spec{L.generators()[a], L.generators()[b], {}};
            for (const auto& [g, c] : e.coefficients()) spec.terms.emplace_back(c, g);
            brackets.push_back(std::move(spec));
        }
    std::vector<std::string> duals = L.dual_names();
    duals.push_back(central_name);
    return make_algebra(L.name() + "+" + central_name, gens, brackets).with_dual_names(duals);
}

namespace {

// Dense rational inverse via Gauss-Jordan; empty result when singular.
std::vector<std::vector<Rational>> invert(const std::vector<std::vector<Rational>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> m = a;
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) return {};
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational d = m[col][col].inverse();
        for (int c = 0; c < n; ++c) {
            m[col][c] *= d;
            inv[col][c] *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational f = m[r][col];
            for (int c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace

LieAlgebra change_basis(const LieAlgebra& L, const BasisChange& bc) {
    const int n = L.dimension();
    if (bc.matrix.rows() != n || bc.matrix.cols() != n ||
        static_cast<int>(bc.new_names.size()) != n)
        throw SingularBasisChange("basis change must be square of the algebra dimension");

    std::vector<std::vector<Rational>> B(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B[i][j] = bc.matrix.get(i, j);
    const auto Binv = invert(B);
    if (Binv.empty()) throw SingularBasisChange("basis change matrix is singular");

    // [Y_i, Y_j] = sum_{k,l} B_ik B_jl [X_k, X_l], re-expressed through
    // X_m = sum_n (B^-1)_mn Y_n.
    std::vector<BracketSpec> brackets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> w(n, Rational(0));  // coefficients over old basis
            for (int k = 0; k < n; ++k) {
                if (B[i][k].is_zero()) continue;
                for (int l = 0; l < n; ++l) {
                    if (B[j][l].is_zero() || k == l) continue;
                    const Rational f = B[i][k] * B[j][l];
                    AlgebraElement e = L.bracket_basis(k, l);
                    for (const auto& [g, c] : e.coefficients())
                        w[L.generator_index(g)] += f * c;
                }
            }
            BracketSpec spec{bc.new_names[i], bc.new_names[j], {}};
            for (int t = 0; t < n; ++t) {
                Rational coeff(0);
                for (int s = 0; s < n; ++s)
                    if (!w[s].is_zero()) coeff += w[s] * Binv[s][t];
                if (!coeff.is_zero()) spec.terms.emplace_back(coeff, bc.new_names[t]);
            }
            if (!spec.terms.empty()) brackets.push_back(std::move(spec));
        }
    return make_algebra(L.name() + "'", bc.new_names, brackets);
}

LieAlgebra subalgebra(const LieAlgebra& L, const std::vector<std::string>& subset) {
    std::set<std::string> keep(subset.begin(), subset.end());
    for (const auto& g : subset) L.generator_index(g);  // validate names

    // Keep the parent's generator order.
    std::vector<std::string> gens;
    std::vector<std::string> duals;
    for (int i = 0; i < L.dimension(); ++i)
        if (keep.count(L.generators()[i])) {
            gens.push_back(L.generators()[i]);
            duals.push_back(L.dual_names()[i]);
        }

    std::vector<BracketSpec> brackets;
    for (std::size_t x = 0; x < gens.size(); ++x)
        for (std::size_t y = x + 1; y < gens.size(); ++y) {
            const int a = L.generator_index(gens[x]);
            const int b = L.generator_index(gens[y]);
            AlgebraElement e = L.bracket_basis(a, b);
            BracketSpec spec{gens[x], gens[y], {}};
            for (const auto& [g, c] : e.coefficients()) {
                if (!keep.count(g))
                    throw NotClosed("subset is not bracket-closed: [" + gens[x] + ", " +
                                        gens[y] + "] leaves the span (term " + g + ")",
                                    gens[x], gens[y]);
                spec.terms.emplace_back(c, g);
            }
            if (!spec.terms.empty()) brackets.push_back(std::move(spec));
        }
    return make_algebra(L.name() + "|sub", gens, brackets).with_dual_names(duals);
}

bool same_structure(const LieAlgebra& L1, const LieAlgebra& L2,
                    const std::map<std::string, std::string>& relabel) {
    if (L1.dimension() != L2.dimension()) return false;
    if (static_cast<int>(relabel.size()) != L1.dimension())
        throw NotBijective("relabeling must cover every generator exactly once");
    std::set<std::string> targets;
    std::vector<int> image(L1.dimension(), -1);
    for (const auto& [from, to] : relabel) {
        if (!L1.has_generator(from))
            throw NotBijective("relabeling source '" + from + "' is not a generator");
        if (!L2.has_generator(to))
            throw NotBijective("relabeling target '" + to + "' is not a generator");
        if (!targets.insert(to).second)
            throw NotBijective("relabeling target '" + to + "' used twice");
        image[L1.generator_index(from)] = L2.generator_index(to);
    }
    const int n = L1.dimension();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (L1.structure_constant(a, b, c) !=
                    L2.structure_constant(image[a], image[b], image[c]))
                    return false;
    return true;
}

}  // namespace liealg
