#include "liealg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace liealg {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            const mpz_class n(s);
            return Rational(mpq_class(n));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("Rational: cannot parse '" + s + "'");
    }
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace liealg
