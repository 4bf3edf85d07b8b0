#include "hkdv/hierarchy.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <mutex>
#include <sstream>
#include <vector>

#include "hkdv/bernoulli.hpp"
#include "hkdv/linsolve.hpp"

namespace hkdv {
namespace {

DiffPoly leading_term(int n) { return DiffPoly::u(0, n + 2) * GaussianRational(factorial(n + 2).inverse()); }

DiffPoly monomial_term(const Rational& c, const Monomial& m, int hbar, int eps)
{
    return DiffPoly::term(GaussianRational(c), m, ParamExp{hbar, 2 * eps, 0});
}

Hamiltonian finish(int n, int hbar_order, DiffPoly f, EpsilonMode mode)
{
    if (mode == EpsilonMode::eps_zero)
        f = f.at_eps_zero();
    return {n, hbar_order, LocalFunctional(f.truncated(Truncation::hbar_order(hbar_order)))};
}

// Monomials of weight w and degree d >= 1 in canonical order.
std::vector<Monomial> monomial_basis(int w, int d)
{
    std::vector<Monomial> out;
    if (d < 1)
        return out;
    std::vector<int> exps;
    auto rec = [&](auto&& self, int weight, int degree, int min_index) -> void {
        if (degree == 0) {
            if (weight == 0)
                out.emplace_back(exps);
            return;
        }
        for (int k = min_index; k * degree <= weight; ++k) {
            if (static_cast<int>(exps.size()) <= k)
                exps.resize(static_cast<std::size_t>(k) + 1, 0);
            ++exps[static_cast<std::size_t>(k)];
            self(self, weight - k, degree - 1, k);
            --exps[static_cast<std::size_t>(k)];
        }
    };
    rec(rec, w, d, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Hamiltonian h1_closed_form(int hbar_order, EpsilonMode mode)
{
    DiffPoly f = leading_term(1);
    for (int g = 1; g <= hbar_order; ++g)
        f += monomial_term(bernoulli_weight(g) / Rational(2), Monomial::variable(0) * Monomial::variable(2 * g), g,
                           g - 1);
    return finish(1, hbar_order, std::move(f), mode);
}

Hamiltonian h2_closed_form(int hbar_order, EpsilonMode mode)
{
    DiffPoly f = leading_term(2);
    if (hbar_order >= 1)
        f += monomial_term(Rational(1, 48), Monomial({2, 0, 1}), 1, 0);
    for (int g = 2; g <= hbar_order; ++g) {
        const Rational b = bernoulli_weight(g);
        f += monomial_term(b * Rational(g + 1, 2), Monomial::variable(0) * Monomial::variable(2 * g), g, g - 2);
        f += monomial_term(b * Rational(1, 4), Monomial::variable(0, 2) * Monomial::variable(2 * g), g, g - 1);
    }
    return finish(2, hbar_order, std::move(f), mode);
}

Hamiltonian casimir_hamiltonian(int n, int hbar_order)
{
    if (n == 0)
        return {0, hbar_order, LocalFunctional(DiffPoly::u(0, 2) * GaussianRational(Rational(1, 2)))};
    if (n == -1)
        return {-1, hbar_order, LocalFunctional(DiffPoly::u())};
    throw std::invalid_argument("casimir_hamiltonian: n must be 0 or -1");
}

Hamiltonian construct_hamiltonian(int n, int hbar_order, EpsilonMode mode)
{
    if (n < 1)
        throw std::invalid_argument("construct_hamiltonian: n must be at least 1");
    if (hbar_order < 0)
        throw std::invalid_argument("construct_hamiltonian: negative hbar order");
    const Hamiltonian h1 = h1_closed_form(hbar_order, mode);
    if (n == 1)
        return h1;

    // δh_1/δu split by hbar power; index 0 is u^2/2.
    std::vector<DiffPoly> dh1(static_cast<std::size_t>(hbar_order) + 1);
    const DiffPoly dh1_full = variational_derivative(h1.functional);
    for (const auto& [key, c] : dh1_full.terms()) {
        TermKey k = key;
        k.params.hbar = 0;
        dh1[static_cast<std::size_t>(key.params.hbar)].add_term(k, c);
    }
    const DiffPoly& half_u2 = dh1[0];

    // x-derivatives of δh_n^{(g)}/δu for the orders already found.
    std::vector<DiffPoly> dx_dhn{partial_x(variational_derivative(leading_term(n)))};
    DiffPoly result = leading_term(n);
    const int max_j = mode == EpsilonMode::eps_zero ? 0 : kUnbounded;

    for (int g = 1; g <= hbar_order; ++g) {
        DiffPoly known;
        for (int a = 1; a <= g; ++a)
            known += dh1[static_cast<std::size_t>(a)] * dx_dhn[static_cast<std::size_t>(g - a)];
        known = variational_derivative(known);

        DiffPoly order_g;
        std::set<int> slots;
        for (int j = std::max(0, g - n); j <= std::min(g, max_j); ++j)
            slots.insert(j);
        for (int eps2 : [&] {
                 std::set<int> s;
                 for (const ParamExp& p : known.param_exponents())
                     s.insert(p.eps2);
                 return s;
             }()) {
            if (eps2 % 2 != 0 || !slots.count(eps2 / 2))
                throw InconsistentSystem("construct_hamiltonian: order " + std::to_string(g) +
                                         " has an obstruction outside the ansatz");
        }
        for (int j : slots) {
            const DiffPoly rhs = -known.param_part(ParamExp{0, 2 * j, 0});
            const std::vector<Monomial> basis = monomial_basis(2 * g, n + 2 + j - g);
            std::vector<DiffPoly> columns;
            std::set<Monomial> rows_set = rhs.monomials();
            for (const Monomial& m : basis) {
                const DiffPoly dm = variational_derivative(DiffPoly::term(GaussianRational(1), m));
                columns.push_back(variational_derivative(half_u2 * partial_x(dm)));
                for (const Monomial& r : columns.back().monomials())
                    rows_set.insert(r);
            }
            const std::vector<Monomial> rows(rows_set.begin(), rows_set.end());
            RationalMatrix a(rows.size(), std::vector<Rational>(basis.size()));
            std::vector<Rational> b(rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                for (std::size_t c = 0; c < basis.size(); ++c)
                    a[r][c] = columns[c].coefficient(rows[r]).re();
                b[r] = rhs.coefficient(rows[r]).re();
            }
            const LinearSolution s = solve_linear_system(a, b);
            for (std::size_t c = 0; c < basis.size(); ++c)
                order_g += monomial_term(s.x[c], basis[c], 0, j);
        }
        order_g = ibp_normal_form(LocalFunctional(order_g));
        dx_dhn.push_back(partial_x(variational_derivative(order_g)));
        for (const auto& [key, c] : order_g.terms()) {
            TermKey k = key;
            k.params.hbar = g;
            result.add_term(k, c);
        }
    }
    return {n, hbar_order, LocalFunctional(std::move(result))};
}

bool satisfies_hamiltonian_gradings(const Hamiltonian& h)
{
    const int n = h.n;
    if (n < 1)
        return true;
    const DiffPoly& f = h.functional.integrand();
    if (!(LocalFunctional(f.param_part(ParamExp{})) == LocalFunctional(leading_term(n))))
        return false;
    for (const auto& [key, c] : f.terms()) {
        const int g = key.params.hbar;
        if (key.params.mu != 0 || key.params.eps2 % 2 != 0 || g > h.hbar_order)
            return false;
        const int j = key.params.eps2 / 2;
        if (j < std::max(0, g - n) || j > g)
            return false;
        if (key.mono.weight() != 2 * g || key.mono.degree() != n + 2 + j - g)
            return false;
    }
    return true;
}

DiffPoly flow_rhs(const Hamiltonian& h) { return partial_x(variational_derivative(h.functional)); }

DiffPoly bernoulli_pair_polynomial(int g, const BernoulliSource& b)
{
    if (g < 0)
        throw std::invalid_argument("bernoulli_pair_polynomial: negative g");
    DiffPoly s;
    const DiffPoly u1 = DiffPoly::u(1);
    for (int i = 0; i <= g; ++i) {
        const Rational c = b(2 * i) * b(2 * g - 2 * i) / (factorial(2 * i) * factorial(2 * g - 2 * i));
        const DiffPoly bracket = DiffPoly::u(2 * i) * DiffPoly::u(2 * g - 2 * i + 1) -
                                 partial_x(u1 * DiffPoly::u(2 * g - 2 * i), 2 * i);
        s += bracket * GaussianRational(c);
    }
    return s;
}

VerificationReport bernoulli_pair_suite(int g_max, const BernoulliSource& b)
{
    VerificationReport r;
    for (int g = 0; g <= g_max; ++g) {
        const DiffPoly p = bernoulli_pair_polynomial(g, b);
        const DiffPoly expected = g == 1 ? DiffPoly::parse("-1/4*u1*u2") : DiffPoly();
        const std::string name = "Bernoulli pair identity, g = " + std::to_string(g);
        r.add(name, p == expected, p.to_string());
        if (g != 1)
            r.add(name + " (d_x-exact)", functional_is_zero(LocalFunctional(p)), p.to_string());
    }
    return r;
}

PoissonOperator dz_operator(int hbar_order)
{
    PoissonOperator k = DiffOperator::dx();
    for (int g = 1; g <= hbar_order; ++g)
        k.add(2 * g + 1, monomial_term(Rational(2 * g - 1) * bernoulli_weight(g), Monomial(), g, g));
    return k;
}

PoissonOperator dz_operator_product_form(int hbar_order)
{
    DiffOperator b = DiffOperator::multiplication(DiffPoly(1));
    for (int g = 1; g <= hbar_order; ++g) {
        const Rational p = power(Rational(2), 2 * g - 1);
        b.add(2 * g, monomial_term((p - Rational(1)) / p * bernoulli_weight(g), Monomial(), g, g));
    }
    const Truncation t = Truncation::hbar_order(hbar_order);
    return compose(compose(b, DiffOperator::dx(), t), b, t);
}

MiuraTransformation dz_miura(int hbar_order)
{
    DiffPoly image = DiffPoly::u();
    for (int g = 1; g <= hbar_order; ++g) {
        const Rational c = Rational(g % 2 == 0 ? 1 : -1) / (power(Rational(2), 2 * g) * factorial(2 * g + 1));
        image += monomial_term(c, Monomial::variable(2 * g), g, g);
    }
    return MiuraTransformation(image);
}

HierarchyContext::HierarchyContext(int hbar_order, EpsilonMode mode) : g_(hbar_order), mode_(mode)
{
    if (hbar_order < 0)
        throw std::invalid_argument("HierarchyContext: negative hbar order");
}

Hamiltonian HierarchyContext::hamiltonian(int n) const
{
    if (n < -1)
        throw std::invalid_argument("hamiltonian index must be at least -1");
    {
        std::shared_lock lock(mutex_);
        auto it = hamiltonians_.find(n);
        if (it != hamiltonians_.end())
            return it->second;
    }
    Hamiltonian h = n <= 0 ? casimir_hamiltonian(n, g_)
                   : n == 1 ? h1_closed_form(g_, mode_)
                   : n == 2 ? h2_closed_form(g_, mode_)
                            : construct_hamiltonian(n, g_, mode_);
    std::unique_lock lock(mutex_);
    return hamiltonians_.try_emplace(n, std::move(h)).first->second;
}

DiffPoly HierarchyContext::flow(int n) const
{
    {
        std::shared_lock lock(mutex_);
        auto it = flows_.find(n);
        if (it != flows_.end())
            return it->second;
    }
    DiffPoly f = flow_rhs(hamiltonian(n));
    std::unique_lock lock(mutex_);
    return flows_.try_emplace(n, std::move(f)).first->second;
}

void HierarchyContext::save_cache(const std::filesystem::path& path) const
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write cache file " + path.string());
    std::shared_lock lock(mutex_);
    for (const auto& [n, h] : hamiltonians_)
        out << n << '\t' << h.hbar_order << '\t' << h.functional.to_string() << '\n';
}

int HierarchyContext::load_cache(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        return 0;
    int loaded = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string n_text, g_text, body;
        if (!std::getline(fields, n_text, '\t') || !std::getline(fields, g_text, '\t') || !std::getline(fields, body))
            throw std::runtime_error("malformed cache record: " + line);
        const int n = std::stoi(n_text);
        if (std::stoi(g_text) != g_)
            continue;
        Hamiltonian h{n, g_, LocalFunctional::parse(body)};
        std::unique_lock lock(mutex_);
        hamiltonians_.insert_or_assign(n, std::move(h));
        flows_.erase(n);
        ++loaded;
    }
    return loaded;
}

std::size_t HierarchyContext::cached_count() const
{
    std::shared_lock lock(mutex_);
    return hamiltonians_.size();
}

} // namespace hkdv
