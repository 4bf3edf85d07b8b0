#include "hkdv/linsolve.hpp"

#include <utility>

namespace hkdv {
namespace {

using IntRow = std::vector<mpz_class>;

// Scales a rational row by the lcm of its denominators.
IntRow integer_row(const std::vector<Rational>& row, const Rational& rhs)
{
    mpz_class l = 1;
    for (const Rational& q : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.denominator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs.denominator().get_mpz_t());
    IntRow out;
    out.reserve(row.size() + 1);
    for (const Rational& q : row)
        out.push_back(q.numerator() * (l / q.denominator()));
    out.push_back(rhs.numerator() * (l / rhs.denominator()));
    return out;
}

struct Echelon {
    std::vector<IntRow> m;
    std::vector<int> pivots;
};

Echelon bareiss(const RationalMatrix& a, const std::vector<Rational>& b, std::size_t cols)
{
    Echelon e;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != cols)
            throw std::invalid_argument("solve_linear_system: ragged matrix");
        e.m.push_back(integer_row(a[i], b[i]));
    }
    const std::size_t rows = e.m.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(e.m[p][c]) == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(e.m[p], e.m[r]);
        const mpz_class& piv = e.m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            IntRow& row = e.m[i];
            const mpz_class f = row[c];
            for (std::size_t j = c + 1; j <= cols; ++j) {
                mpz_class v = piv * row[j] - f * e.m[r][j];
                mpz_divexact(row[j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = piv;
        e.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return e;
}

} // namespace

LinearSolution solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("solve_linear_system: row count mismatch");
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    Echelon e = bareiss(a, b, cols);
    const std::size_t rank = e.pivots.size();
    for (std::size_t i = rank; i < e.m.size(); ++i)
        if (sgn(e.m[i][cols]) != 0)
            throw InconsistentSystem("linear system has no solution (row " + std::to_string(i) + ")");

    LinearSolution s;
    s.x.assign(cols, Rational(0));
    s.pivot_columns = e.pivots;
    for (std::size_t k = rank; k-- > 0;) {
        const auto pc = static_cast<std::size_t>(e.pivots[k]);
        Rational acc(e.m[k][cols]);
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (sgn(e.m[k][j]) != 0 && !s.x[j].is_zero())
                acc -= Rational(e.m[k][j]) * s.x[j];
        s.x[pc] = acc / Rational(e.m[k][pc]);
    }
    return s;
}

int matrix_rank(const RationalMatrix& a)
{
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    return static_cast<int>(bareiss(a, std::vector<Rational>(a.size(), Rational(0)), cols).pivots.size());
}

} // namespace hkdv
