#include "liealg/contraction.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "liealg/errors.hpp"

namespace liealg {

int GradedScaling::exponent(const std::string& g) const {
    auto it = exponents.find(g);
    if (it == exponents.end())
        throw IncompleteScaling("scaling has no exponent for generator '" + g + "'");
    return it->second;
}

GradedScaling GradedScaling::plus(const GradedScaling& o) const {
    GradedScaling r = *this;
    for (const auto& [g, n] : o.exponents) r.exponents[g] += n;
    return r;
}

GradedScaling GradedScaling::shifted(int delta) const {
    GradedScaling r = *this;
    for (auto& [g, n] : r.exponents) n += delta;
    return r;
}

ScaledAlgebra rescale(const LieAlgebra& L, const GradedScaling& s) {
    for (const auto& g : L.generators())
        if (!s.exponents.count(g))
            throw IncompleteScaling("scaling misses generator '" + g + "' of algebra '" +
                                    L.name() + "'");
    for (const auto& [g, n] : s.exponents)
        if (!L.has_generator(g))
            throw IncompleteScaling("scaling mentions '" + g + "' which is not a generator of '" +
                                    L.name() + "'");
    ScaledAlgebra sa{L, s, {}};
    for (const auto& [key, f] : L.constants()) {
        const auto& [a, b, c] = key;
        const int exp = s.exponent(L.generators()[a]) + s.exponent(L.generators()[b]) -
                        s.exponent(L.generators()[c]);
        sa.scaled_constants.emplace(key, ScaledConstant{exp, f});
    }
    return sa;
}

LieAlgebra contraction_limit(const ScaledAlgebra& sa) {
    std::vector<std::array<std::string, 3>> offending;
    const auto& gens = sa.base.generators();
    for (const auto& [key, sc] : sa.scaled_constants)
        if (sc.exponent < 0)
            offending.push_back(
                {gens[std::get<0>(key)], gens[std::get<1>(key)], gens[std::get<2>(key)]});
    if (!offending.empty()) {
        std::ostringstream os;
        os << "contraction is ill defined; diverging brackets:";
        for (const auto& t : offending)
            os << " [" << t[0] << ", " << t[1] << "] -> " << t[2];
        throw IllDefinedContraction(os.str(), std::move(offending));
    }

    std::map<std::pair<int, int>, BracketSpec> specs;
    for (const auto& [key, sc] : sa.scaled_constants) {
        if (sc.exponent != 0) continue;
        const auto& [a, b, c] = key;
        auto [it, inserted] =
            specs.emplace(std::make_pair(a, b), BracketSpec{gens[a], gens[b], {}});
        it->second.terms.emplace_back(sc.value, gens[c]);
    }
    std::vector<BracketSpec> brackets;
    brackets.reserve(specs.size());
    for (auto& [key, spec] : specs) brackets.push_back(std::move(spec));

    LieAlgebra limit = make_algebra(sa.base.name() + "@0", gens, brackets)
                           .with_dual_names(sa.base.dual_names());
    if (!jacobi_check(limit).empty())
        throw Error("internal: contraction limit violates the Jacobi identity");
    return limit;
}

bool contract_and_compare(const LieAlgebra& L, const GradedScaling& s,
                          const LieAlgebra& reference,
                          const std::map<std::string, std::string>& relabel) {
    return same_structure(contraction_limit(rescale(L, s)), reference, relabel);
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// Expands a (case-insensitive) family token against an algebra's generators:
// exact name, indexed family name+1..n, or the unique boost family for "k".
std::vector<std::string> expand_family(const LieAlgebra& L, const std::string& token) {
    const std::string t = lower(token);
    if (t == "all") return L.generators();
    for (const auto& g : L.generators())
        if (lower(g) == t) return {g};
    std::vector<std::string> family;
    for (const auto& g : L.generators()) {
        const std::string lg = lower(g);
        if (lg.size() > t.size() && lg.compare(0, t.size(), t) == 0 &&
            std::all_of(lg.begin() + t.size(), lg.end(),
                        [](unsigned char c) { return std::isdigit(c); }))
            family.push_back(g);
    }
    if (!family.empty()) return family;
    if (t == "k") {
        for (const char* prefix : {"kp", "kg"}) {
            auto boosts = expand_family(L, prefix);
            if (!boosts.empty()) return boosts;
        }
    }
    return {};
}

std::vector<std::pair<std::string, std::string>> split_spec(const std::string& spec) {
    std::vector<std::pair<std::string, std::string>> items;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw ParseError("malformed spec item '" + item + "' (expected name=value)");
        items.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    if (items.empty()) throw ParseError("empty spec");
    return items;
}

}  // namespace

GradedScaling parse_scale_spec(const LieAlgebra& L, const std::string& spec) {
    GradedScaling s;
    for (const auto& [name, value] : split_spec(spec)) {
        int n = 0;
        try {
            std::size_t pos = 0;
            n = std::stoi(value, &pos);
            if (pos != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw ParseError("scaling exponent '" + value + "' is not an integer");
        }
        const auto family = expand_family(L, name);
        if (family.empty())
            throw ParseError("scaling token '" + name + "' matches no generator of '" +
                             L.name() + "'");
        for (const auto& g : family) s.exponents[g] = n;
    }
    return s;
}

std::map<std::string, std::string> parse_map_spec(const LieAlgebra& from,
                                                  const LieAlgebra& to,
                                                  const std::string& spec) {
    std::map<std::string, std::string> relabel;
    if (!spec.empty()) {
        for (const auto& [lhs, rhs] : split_spec(spec)) {
            const auto sources = expand_family(from, lhs);
            const auto targets = expand_family(to, rhs);
            if (sources.empty())
                throw ParseError("map token '" + lhs + "' matches no generator of '" +
                                 from.name() + "'");
            if (sources.size() != targets.size())
                throw ParseError("map token '" + lhs + "=" + rhs +
                                 "' expands to families of different sizes");
            for (std::size_t i = 0; i < sources.size(); ++i)
                relabel[sources[i]] = targets[i];
        }
    }
    for (const auto& g : from.generators())
        if (!relabel.count(g) && to.has_generator(g)) relabel[g] = g;
    return relabel;
}

}  // namespace liealg
