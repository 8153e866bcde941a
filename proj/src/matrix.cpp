#include "liealg/matrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace liealg {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::domain_error("matrix dimensions must be nonnegative");
}

void RationalMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of bounds");
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

Rational RationalMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of bounds");
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

namespace {

// Sparse integer row: (column, coefficient) sorted by column.
using IntRow = std::vector<std::pair<int, mpz_class>>;

// Divides the row by the gcd of its entries and makes no sign choice.
void strip_content(IntRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& [c, v] : row) v /= g;
}

// r <- pr.lead * r - r[pivot] * pr, over integers, content-stripped.
// pr has leading column pr.front().first which must appear in r.
void reduce_row(IntRow& r, const IntRow& pr, const mpz_class& r_coeff_at_pivot) {
    const mpz_class& plead = pr.front().second;
    IntRow out;
    out.reserve(r.size() + pr.size());
    auto a = r.begin();
    auto b = pr.begin();
    while (a != r.end() && b != pr.end()) {
        if (a->first < b->first) {
            out.emplace_back(a->first, plead * a->second);
            ++a;
        } else if (b->first < a->first) {
            out.emplace_back(b->first, -r_coeff_at_pivot * b->second);
            ++b;
        } else {
            mpz_class v = plead * a->second - r_coeff_at_pivot * b->second;
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a, ++b;
        }
    }
    for (; a != r.end(); ++a) out.emplace_back(a->first, plead * a->second);
    for (; b != pr.end(); ++b) out.emplace_back(b->first, -r_coeff_at_pivot * b->second);
    strip_content(out);
    r = std::move(out);
}

struct Echelon {
    // pivot column -> reduced integer row with that leading column
    std::map<int, IntRow> rows;

    // Reduces `row` against current pivots; inserts it if nonzero.
    void insert(IntRow row) {
        while (!row.empty()) {
            auto it = rows.find(row.front().first);
            if (it == rows.end()) {
                strip_content(row);
                rows.emplace(row.front().first, std::move(row));
                return;
            }
            mpz_class coeff = row.front().second;
            reduce_row(row, it->second, coeff);
        }
    }
};

Echelon eliminate(const RationalMatrix& m) {
    // Scale each row to integer entries before insertion; scaling by the
    // positive lcm of denominators does not change the nullspace.
    std::map<int, std::map<int, Rational>> by_row;
    for (const auto& [rc, v] : m.entries()) by_row[rc.first][rc.second] = v;

    Echelon ech;
    for (const auto& [r, cols] : by_row) {
        mpz_class lcm = 1;
        for (const auto& [c, v] : cols)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
        IntRow row;
        row.reserve(cols.size());
        for (const auto& [c, v] : cols) {
            mpz_class val = v.numerator() * (lcm / v.denominator());
            row.emplace_back(c, std::move(val));
        }
        ech.insert(std::move(row));
    }
    return ech;
}

}  // namespace

int generic_rank(const RationalMatrix& m) {
    return static_cast<int>(eliminate(m).rows.size());
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    Echelon ech = eliminate(m);
    const int n = m.cols();

    std::vector<bool> is_pivot(n, false);
    for (const auto& [c, row] : ech.rows) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        // Back-substitute the echelon system with v[f] = 1.
        std::vector<Rational> v(n, Rational(0));
        v[f] = Rational(1);
        for (auto it = ech.rows.rbegin(); it != ech.rows.rend(); ++it) {
            const IntRow& row = it->second;
            Rational acc(0);
            for (std::size_t i = 1; i < row.size(); ++i) {
                const auto& [c, coeff] = row[i];
                if (!v[c].is_zero())
                    acc += v[c] * Rational(mpq_class(coeff));
            }
            const auto& lead = row.front();
            v[lead.first] = -acc / Rational(mpq_class(lead.second));
        }
        // Scale to integer entries with content 1; the scale is positive, so
        // the +1 at the free column keeps its sign.
        mpz_class lcm = 1;
        for (const auto& x : v)
            if (!x.is_zero())
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
        mpz_class content = 0;
        std::vector<mpz_class> scaled(n);
        for (int i = 0; i < n; ++i) {
            scaled[i] = v[i].numerator() * (lcm / v[i].denominator());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled[i].get_mpz_t());
        }
        for (int i = 0; i < n; ++i)
            v[i] = Rational(mpq_class(scaled[i] / content));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace liealg
