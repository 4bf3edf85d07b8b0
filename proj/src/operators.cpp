#include "hkdv/operators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace hkdv {

DiffOperator::DiffOperator(Coefficients c)
{
    for (auto& [j, a] : c)
        add(j, a);
}

DiffOperator DiffOperator::dx(int power)
{
    DiffOperator k;
    k.add(power, DiffPoly(1));
    return k;
}

DiffOperator DiffOperator::multiplication(const DiffPoly& a)
{
    DiffOperator k;
    k.add(0, a);
    return k;
}

DiffPoly DiffOperator::coefficient(int j) const
{
    auto it = c_.find(j);
    return it == c_.end() ? DiffPoly() : it->second;
}

void DiffOperator::add(int j, const DiffPoly& a)
{
    if (j < 0)
        throw std::invalid_argument("DiffOperator: negative power of d_x");
    if (a.is_zero())
        return;
    DiffPoly& slot = c_[j];
    slot += a;
    if (slot.is_zero())
        c_.erase(j);
}

DiffOperator DiffOperator::truncated(const Truncation& t) const
{
    DiffOperator r;
    for (const auto& [j, a] : c_)
        r.add(j, a.truncated(t));
    return r;
}

DiffOperator DiffOperator::operator-() const
{
    DiffOperator r = *this;
    for (auto& [j, a] : r.c_)
        a = -a;
    return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o)
{
    for (const auto& [j, a] : o.c_)
        add(j, a);
    return *this;
}

std::string DiffOperator::to_string() const
{
    std::map<std::pair<int, int>, DiffPoly> grouped;
    for (const auto& [j, a] : c_)
        for (const auto& [key, c] : a.terms()) {
            TermKey stripped = key;
            stripped.params.hbar = 0;
            grouped[{key.params.hbar, j}].add_term(stripped, c);
        }
    std::vector<std::string> out;
    for (const auto& [ij, f] : grouped) {
        std::string s = "(" + f.to_string() + ")";
        if (ij.first == 1)
            s += "*hbar";
        else if (ij.first != 0)
            s += "*hbar^" + std::to_string(ij.first);
        if (ij.second == 1)
            s += "*dx";
        else if (ij.second != 0)
            s += "*dx^" + std::to_string(ij.second);
        out.push_back(std::move(s));
    }
    return detail::join_terms(out);
}

bool satisfies_poisson_grading(const PoissonOperator& k)
{
    for (const auto& [j, a] : k.coefficients())
        for (const auto& [key, c] : a.terms())
            if (term_deg_dif(key) + j != 1)
                return false;
    return true;
}

DiffPoly apply(const DiffOperator& k, const DiffPoly& f, const Truncation& t)
{
    DiffPoly r;
    DiffPoly d = f.truncated(t);
    int done = 0;
    for (const auto& [j, a] : k.coefficients()) {
        for (; done < j; ++done)
            d = partial_x(d);
        r += mul(a, d, t);
    }
    return r;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b, const Truncation& t)
{
    int top = 0;
    for (const auto& [i, x] : a.coefficients())
        top = std::max(top, i);
    DiffOperator r;
    for (const auto& [j, bj] : b.coefficients()) {
        // d_x^k b_j for every k needed by the left factor.
        std::vector<DiffPoly> derivs{bj.truncated(t)};
        for (int k = 1; k <= top; ++k)
            derivs.push_back(partial_x(derivs.back()));
        for (const auto& [i, ai] : a.coefficients())
            for (int k = 0; k <= i; ++k) {
                if (derivs[static_cast<std::size_t>(k)].is_zero())
                    continue;
                DiffPoly term = mul(ai, derivs[static_cast<std::size_t>(k)], t);
                term *= GaussianRational(binomial(i, k));
                r.add(i + j - k, term);
            }
    }
    return r;
}

DiffOperator adjoint(const DiffOperator& a, const Truncation& t)
{
    DiffOperator r;
    for (const auto& [j, aj] : a.coefficients()) {
        DiffOperator left;
        left.add(j, DiffPoly(j % 2 == 0 ? 1 : -1));
        r += compose(left, DiffOperator::multiplication(aj), t);
    }
    return r;
}

LocalFunctional poisson_bracket(const LocalFunctional& g, const LocalFunctional& h, const PoissonOperator& k,
                                const Truncation& t)
{
    const DiffPoly dg = variational_derivative(g).truncated(t);
    const DiffPoly kh = apply(k, variational_derivative(h), t);
    return normalized(LocalFunctional(mul(dg, kh, t)));
}

} // namespace hkdv
