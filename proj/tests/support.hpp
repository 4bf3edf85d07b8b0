#ifndef HKDV_TESTS_SUPPORT_HPP
#define HKDV_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "hkdv/diffpoly.hpp"
#include "hkdv/rational.hpp"

namespace hkdv::testing {

// All monomials prod u_k^{a_k} with the given weight and degree (degree >= 1).
inline void monomials_rec(int weight, int degree, int min_index, std::vector<int>& exps, std::vector<Monomial>& out)
{
    if (degree == 0) {
        if (weight == 0)
            out.emplace_back(exps);
        return;
    }
    for (int k = min_index; k <= weight; ++k) {
        if (static_cast<int>(exps.size()) <= k)
            exps.resize(static_cast<std::size_t>(k) + 1, 0);
        ++exps[static_cast<std::size_t>(k)];
        monomials_rec(weight - k, degree - 1, k, exps, out);
        --exps[static_cast<std::size_t>(k)];
    }
}

inline std::vector<Monomial> monomials_of(int weight, int degree)
{
    std::vector<Monomial> out;
    std::vector<int> exps;
    monomials_rec(weight, degree, 0, exps, out);
    return out;
}

inline DiffPoly random_homogeneous(std::mt19937& rng, int weight, int degree, int spread = 4)
{
    std::uniform_int_distribution<int> c(-spread, spread);
    DiffPoly f;
    for (const Monomial& m : monomials_of(weight, degree))
        f += DiffPoly::term(GaussianRational(c(rng)), m);
    return f;
}

inline DiffPoly random_poly(std::mt19937& rng, int max_weight, int max_degree, int density = 3)
{
    std::uniform_int_distribution<int> w(0, max_weight), d(1, max_degree), c(-5, 5);
    DiffPoly f;
    for (int i = 0; i < density; ++i) {
        const auto ms = monomials_of(w(rng), d(rng));
        if (ms.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
        f += DiffPoly::term(GaussianRational(c(rng)), ms[pick(rng)]);
    }
    return f;
}

// Plain Gauss-Jordan rank over Q, written independently of the library solver.
inline int naive_rank(std::vector<std::vector<Rational>> m)
{
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < m.size() && m[p][c].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[static_cast<std::size_t>(rank)]);
        const auto& pr = m[static_cast<std::size_t>(rank)];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || m[i][c].is_zero())
                continue;
            const Rational f = m[i][c] / pr[c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] -= f * pr[j];
        }
        ++rank;
    }
    return rank;
}

// Membership of f in the span of d_x(m) over monomials m of weight-1, same degree.
inline bool in_exact_span(const DiffPoly& f, int weight, int degree)
{
    std::vector<DiffPoly> gens;
    if (weight >= 1)
        for (const Monomial& m : monomials_of(weight - 1, degree))
            gens.push_back(partial_x(DiffPoly::term(GaussianRational(1), m)));
    const auto basis = monomials_of(weight, degree);
    auto column = [&](const DiffPoly& g) {
        std::vector<Rational> v;
        for (const Monomial& m : basis)
            v.push_back(g.coefficient(m).re());
        return v;
    };
    std::vector<std::vector<Rational>> rows;
    for (const DiffPoly& g : gens)
        rows.push_back(column(g));
    const int r0 = naive_rank(rows);
    rows.push_back(column(f));
    return naive_rank(rows) == r0;
}

} // namespace hkdv::testing

#endif
