#include "liealg/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "liealg/errors.hpp"

namespace liealg {

namespace {

using nlohmann::json;

void require_fields(const json& obj, std::initializer_list<const char*> allowed,
                    const char* what) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* f : allowed)
            if (it.key() == f) { ok = true; break; }
        if (!ok)
            throw ParseError(std::string(what) + ": unknown field '" + it.key() + "'");
    }
    for (const char* f : allowed)
        if (!obj.contains(f))
            throw ParseError(std::string(what) + ": missing field '" + std::string(f) + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

std::string save_algebra(const LieAlgebra& L) {
    json j;
    j["name"] = L.name();
    j["generators"] = L.generators();
    json brackets = json::array();
    const auto& gens = L.generators();
    std::map<std::pair<int, int>, json> per_pair;
    for (const auto& [key, c] : L.constants()) {
        const auto& [a, b, cc] = key;
        auto& entry = per_pair[{a, b}];
        if (entry.is_null()) {
            entry = json::object();
            entry["left"] = gens[a];
            entry["right"] = gens[b];
            entry["terms"] = json::array();
        }
        entry["terms"].push_back({{"coeff", c.to_string()}, {"gen", gens[cc]}});
    }
    for (auto& [key, entry] : per_pair) brackets.push_back(std::move(entry));
    j["brackets"] = brackets;
    return j.dump(2) + "\n";
}

LieAlgebra parse_algebra(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("algebra file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("algebra file must hold a JSON object");
    require_fields(j, {"name", "generators", "brackets"}, "algebra");
    if (!j["name"].is_string()) throw ParseError("algebra: 'name' must be a string");
    if (!j["generators"].is_array()) throw ParseError("algebra: 'generators' must be a list");
    std::vector<std::string> gens;
    for (const auto& g : j["generators"]) {
        if (!g.is_string()) throw ParseError("algebra: generators must be strings");
        gens.push_back(g.get<std::string>());
    }
    if (!j["brackets"].is_array()) throw ParseError("algebra: 'brackets' must be a list");
    std::vector<BracketSpec> brackets;
    for (const auto& b : j["brackets"]) {
        if (!b.is_object()) throw ParseError("algebra: each bracket must be an object");
        require_fields(b, {"left", "right", "terms"}, "bracket");
        BracketSpec spec;
        spec.left = b["left"].get<std::string>();
        spec.right = b["right"].get<std::string>();
        for (const auto& t : b["terms"]) {
            if (!t.is_object()) throw ParseError("algebra: bracket terms must be objects");
            require_fields(t, {"coeff", "gen"}, "bracket term");
            spec.terms.emplace_back(Rational::parse(t["coeff"].get<std::string>()),
                                    t["gen"].get<std::string>());
        }
        brackets.push_back(std::move(spec));
    }
    return make_algebra(j["name"].get<std::string>(), gens, brackets);
}

LieAlgebra load_algebra_file(const std::string& path) {
    return parse_algebra(read_file(path));
}

void write_algebra_file(const LieAlgebra& L, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << save_algebra(L);
}

std::string save_scaling(const std::string& algebra_name, const GradedScaling& s) {
    json j;
    j["algebra"] = algebra_name;
    json exps = json::object();
    for (const auto& [g, n] : s.exponents) exps[g] = n;
    j["exponents"] = exps;
    return j.dump(2) + "\n";
}

std::pair<std::string, GradedScaling> parse_scaling(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scaling file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("scaling file must hold a JSON object");
    require_fields(j, {"algebra", "exponents"}, "scaling");
    GradedScaling s;
    for (auto it = j["exponents"].begin(); it != j["exponents"].end(); ++it) {
        if (!it.value().is_number_integer())
            throw ParseError("scaling: exponent for '" + it.key() + "' must be an integer");
        s.exponents[it.key()] = it.value().get<int>();
    }
    return {j["algebra"].get<std::string>(), s};
}

std::pair<std::string, GradedScaling> load_scaling_file(const std::string& path) {
    return parse_scaling(read_file(path));
}

}  // namespace liealg
