#include "liealg/variables.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace liealg {

namespace {

struct Interner {
    std::deque<std::string> names;  // deque: stable references under growth
    std::unordered_map<std::string, std::uint32_t> ids;
    std::mutex mu;

    Interner() {
        for (const char* n : {"m", "h", "hbar", "j1", "j2", "j3",
                              "p1", "p2", "p3", "k1", "k2", "k3"}) {
            ids.emplace(n, static_cast<std::uint32_t>(names.size()));
            names.emplace_back(n);
        }
    }
};

Interner& interner() {
    static Interner it;
    return it;
}

}  // namespace

Var var(std::string_view name) {
    if (name.empty()) throw std::domain_error("variable name must be nonempty");
    auto& it = interner();
    std::lock_guard<std::mutex> lock(it.mu);
    const std::string key(name);
    auto found = it.ids.find(key);
    if (found != it.ids.end()) return Var{found->second};
    const auto id = static_cast<std::uint32_t>(it.names.size());
    it.ids.emplace(key, id);
    it.names.push_back(key);
    return Var{id};
}

bool var_exists(std::string_view name) {
    auto& it = interner();
    std::lock_guard<std::mutex> lock(it.mu);
    return it.ids.count(std::string(name)) != 0;
}

const std::string& var_name(Var v) {
    auto& it = interner();
    std::lock_guard<std::mutex> lock(it.mu);
    if (v.id >= it.names.size()) throw std::domain_error("unknown variable id");
    return it.names[v.id];
}

const std::vector<std::string>& seeded_variable_names() {
    static const std::vector<std::string> seeded = {
        "m", "h", "hbar", "j1", "j2", "j3",
        "p1", "p2", "p3", "k1", "k2", "k3"};
    return seeded;
}

}  // namespace liealg
