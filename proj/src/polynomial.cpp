#include "liealg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "liealg/errors.hpp"

namespace liealg {

Monomial::Monomial(std::vector<std::pair<Var, unsigned>> factors)
    : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Var, unsigned>> merged;
    for (const auto& [v, e] : factors_) {
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    factors_ = std::move(merged);
}

Monomial Monomial::of(Var v, unsigned exp) {
    Monomial m;
    if (exp > 0) m.factors_.emplace_back(v, exp);
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

unsigned Monomial::exponent(Var v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

Monomial Monomial::without_one(Var v) const {
    Monomial r;
    bool found = false;
    for (const auto& [w, e] : factors_) {
        if (w == v) {
            found = true;
            if (e > 1) r.factors_.emplace_back(w, e - 1);
        } else {
            r.factors_.emplace_back(w, e);
        }
    }
    if (!found) throw std::domain_error("Monomial::without_one: variable absent");
    return r;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first) os << "*";
        first = false;
        os << var_name(v);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

int compare_monomials_desc(const Monomial& a, const Monomial& b) {
    const unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? -1 : 1;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    // Walk variables in significance order; the monomial with the higher
    // exponent on the first differing variable is greater (sorts first).
    while (ia != ea || ib != eb) {
        if (ib == eb) return -1;  // a has an extra factor on a more significant var
        if (ia == ea) return 1;
        if (ia->first < ib->first) return -1;
        if (ib->first < ia->first) return 1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    return 0;
}

MultiPoly MultiPoly::constant(Rational c) {
    MultiPoly p;
    p.add_term(c, Monomial::one());
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    MultiPoly p;
    p.add_term(Rational(1), Monomial::of(v));
    return p;
}

MultiPoly MultiPoly::term(Rational c, Monomial m) {
    MultiPoly p;
    p.add_term(c, m);
    return p;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Var> MultiPoly::variables() const {
    std::set<Var> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.insert(v);
    return vars;
}

void MultiPoly::add_term(const Rational& c, const Monomial& m) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(c, m);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(-c, m);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma.times(mb));
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_one())
            os << a.to_string();
        else if (a.is_one())
            os << m.to_string();
        else
            os << a.to_string() << "*" << m.to_string();
    }
    return os.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly poly_partial(const MultiPoly& p, Var v) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(c * Rational(static_cast<long>(e)), m.without_one(v));
    }
    return r;
}

MultiPoly poly_substitute_zero(const MultiPoly& p, const std::set<Var>& vars) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        bool killed = false;
        for (const auto& [v, e] : m.factors())
            if (vars.count(v)) { killed = true; break; }
        if (!killed) r.add_term(c, m);
    }
    return r;
}

MultiPoly poly_substitute_linear(const MultiPoly& p,
                                 const std::map<Var, std::pair<Rational, Var>>& images) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        Rational coeff = c;
        std::vector<std::pair<Var, unsigned>> factors;
        bool killed = false;
        for (const auto& [v, e] : m.factors()) {
            auto it = images.find(v);
            if (it == images.end()) {
                factors.emplace_back(v, e);
                continue;
            }
            const auto& [scale, image] = it->second;
            if (scale.is_zero()) { killed = true; break; }
            for (unsigned i = 0; i < e; ++i) coeff *= scale;
            factors.emplace_back(image, e);
        }
        if (!killed) r.add_term(coeff, Monomial(std::move(factors)));
    }
    return r;
}

EpsilonSeries poly_substitute(const MultiPoly& p, const std::map<Var, EpsilonImage>& images) {
    EpsilonSeries s;
    for (const auto& [m, c] : p.terms()) {
        int exponent = 0;
        std::vector<std::pair<Var, unsigned>> factors;
        for (const auto& [v, e] : m.factors()) {
            auto it = images.find(v);
            if (it == images.end())
                throw UnmappedVariable("poly_substitute: no image for variable '" +
                                       var_name(v) + "'");
            exponent += it->second.exponent * static_cast<int>(e);
            factors.emplace_back(it->second.image, e);
        }
        s.add(exponent, MultiPoly::term(c, Monomial(std::move(factors))));
    }
    return s;
}

EpsilonSeries::EpsilonSeries(std::map<int, MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
}

int EpsilonSeries::min_exponent() const {
    if (coeffs_.empty()) throw EmptySeries("empty epsilon series");
    return coeffs_.begin()->first;
}

int EpsilonSeries::max_exponent() const {
    if (coeffs_.empty()) throw EmptySeries("empty epsilon series");
    return coeffs_.rbegin()->first;
}

void EpsilonSeries::add(int exponent, const MultiPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(exponent, p);
    if (!inserted) {
        it->second = it->second + p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

EpsilonSeries operator+(const EpsilonSeries& a, const EpsilonSeries& b) {
    EpsilonSeries r = a;
    for (const auto& [k, p] : b.coeffs_) r.add(k, p);
    return r;
}

EpsilonSeries operator*(const EpsilonSeries& a, const EpsilonSeries& b) {
    EpsilonSeries r;
    for (const auto& [ka, pa] : a.coeffs_)
        for (const auto& [kb, pb] : b.coeffs_) r.add(ka + kb, pa * pb);
    return r;
}

EpsilonSeries EpsilonSeries::shifted(int delta) const {
    EpsilonSeries r;
    for (const auto& [k, p] : coeffs_) r.coeffs_.emplace(k + delta, p);
    return r;
}

std::string EpsilonSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "eps^" << k << "*(" << p.to_string() << ")";
    }
    return os.str();
}

std::pair<int, MultiPoly> eps_limit(const EpsilonSeries& s) {
    const int k = s.min_exponent();  // throws EmptySeries
    return {-k, s.coefficients().begin()->second};
}

MultiPoly eps_coefficient(const EpsilonSeries& s, int k) {
    auto it = s.coefficients().find(k);
    return it == s.coefficients().end() ? MultiPoly::zero() : it->second;
}

}  // namespace liealg
