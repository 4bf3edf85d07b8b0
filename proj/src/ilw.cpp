#include "hkdv/ilw.hpp"

#include <stdexcept>

#include "hkdv/bernoulli.hpp"

namespace hkdv {
namespace {

DiffPoly scalar(const GaussianRational& c, ParamExp p) { return DiffPoly::term(c, Monomial(), p); }

} // namespace

DiffPoly op_R(const DiffPoly& f, int mu_order)
{
    const Truncation t = Truncation::mu_order(mu_order);
    DiffPoly r;
    DiffPoly d = partial_x(f);
    for (int g = 1; 2 * g - 1 <= mu_order; ++g) {
        if (g > 1)
            d = partial_x(d, 2);
        r += mul(scalar(GaussianRational(bernoulli_weight(g)), {0, 2 * (g - 1), 2 * g - 1}), d, t);
    }
    return r;
}

std::map<int, DiffPoly> op_T(const DiffPoly& f, int max_delta_power)
{
    std::map<int, DiffPoly> r;
    DiffPoly d = partial_x(f);
    for (int n = 1; 2 * n - 1 <= max_delta_power; ++n) {
        if (n > 1)
            d = partial_x(d, 2);
        DiffPoly term = d * GaussianRational(power(Rational(2), 2 * n) * bernoulli_weight(n));
        if (!term.is_zero())
            r.emplace(2 * n - 1, std::move(term));
    }
    return r;
}

DiffPoly rescaled_ilw_flow(int mu_order)
{
    // u_t = u u_x + (mu / (2 sqrt(eps))) T(u_xx) with delta^p = (mu sqrt(eps) / 2)^p.
    DiffPoly r = DiffPoly::u(0) * DiffPoly::u(1);
    for (const auto& [p, coeff] : op_T(DiffPoly::u(2), mu_order)) {
        const Rational c = power(Rational(1, 2), p + 1);
        r += mul(scalar(GaussianRational(c), {0, p - 1, p + 1}), coeff, Truncation::mu_order(mu_order));
    }
    return r;
}

SigmaExpansion sigma_sequence(int n_max, int mu_order)
{
    if (n_max < 1 || mu_order < 0)
        throw std::invalid_argument("sigma_sequence: need n_max >= 1 and mu_order >= 0");
    const Truncation t = Truncation::mu_order(mu_order);
    // mu i / sqrt(eps)
    const DiffPoly mu_i = scalar(GaussianRational::i(), {0, -1, 1});
    SigmaExpansion out;
    out.mu_order = mu_order;
    // powers[k][m] = coefficient of lambda^{-m} in sigma^k, for m < current n.
    std::vector<std::vector<DiffPoly>> powers(static_cast<std::size_t>(n_max) + 1,
                                              std::vector<DiffPoly>(static_cast<std::size_t>(n_max) + 1));
    for (int n = 1; n <= n_max; ++n) {
        DiffPoly e;
        if (n == 1) {
            e = DiffPoly::u() * GaussianRational(2);
        } else {
            const DiffPoly& prev = out.sigma(n - 1);
            const DiffPoly px = partial_x(prev);
            e = mul(scalar(GaussianRational(2), {0, -2, 0}), prev, t);
            e -= mul(mu_i, px, t);
            e -= mul(scalar(GaussianRational(2), {0, 0, 1}), op_R(px, mu_order - 1), t);
        }
        // Contributions of sigma^k / k!, k >= 2, need only sigma_1 .. sigma_{n-1}.
        for (int k = 2; k <= n; ++k) {
            DiffPoly pk;
            for (int m = 1; m <= n - k + 1; ++m)
                pk += mul(out.sigma(m), powers[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n - m)], t);
            powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = pk;
            e -= pk * GaussianRational(factorial(k).inverse());
        }
        out.terms.push_back(e);
        powers[1][static_cast<std::size_t>(n)] = e;
    }
    return out;
}

DiffPoly ilw_first_flow(int mu_order)
{
    return flow_rhs(h1_closed_form(mu_order / 2)).hbar_to_mu_squared().truncated(Truncation::mu_order(mu_order));
}

bool conservation_check(const SigmaExpansion& sigmas, int n)
{
    const int m = sigmas.mu_order;
    const Truncation t = Truncation::mu_order(m);
    const DiffPoly& s = sigmas.sigma(n);
    const DiffPoly flow = ilw_first_flow(m);
    DiffPoly dt;
    DiffPoly d = flow;
    for (int k = 0; k <= s.max_index(); ++k) {
        dt += mul(partial_u(s, k), d, t);
        d = partial_x(d);
    }
    return variational_derivative(dt).is_zero();
}

Rational ilw_leading_coefficient(int n)
{
    return Rational(n % 2 == 1 ? 1 : -1) * power(Rational(2), n) * factorial(n - 1);
}

std::string HamiltonianDecomposition::to_text() const
{
    std::string s;
    for (const auto& [k, c] : coefficients)
        s += std::to_string(k) + '\t' + c.to_string() + '\n';
    s += "residual: " + (residual_is_zero() ? std::string("0") : residual.to_string()) + '\n';
    return s;
}

HamiltonianDecomposition decompose_in_hamiltonians(const SigmaExpansion& sigmas, int n, const HierarchyContext& ctx)
{
    const int m = sigmas.mu_order;
    if (2 * ctx.hbar_order() < m)
        throw std::invalid_argument("decompose_in_hamiltonians: hierarchy truncated below the mu order");
    const Truncation t = Truncation::mu_order(m);
    const DiffPoly& s = sigmas.sigma(n);

    HamiltonianDecomposition out;
    out.n = n;
    // On the mu^0 part, δ/δu of sum_k c_k u^{k+2}/(k+2)! is sum_k c_k u^{k+1}/(k+1)!.
    DiffPoly s0;
    for (const auto& [key, c] : s.terms())
        if (key.params.mu == 0)
            s0.add_term(key, c);
    const DiffPoly d0 = variational_derivative(s0);
    for (const auto& [key, c] : d0.terms()) {
        if (key.mono.max_index() > 0)
            throw std::runtime_error("decompose_in_hamiltonians: mu^0 part is not a function of u alone");
        const int k = key.mono.degree() - 1;
        if (k > n - 2)
            throw std::runtime_error("decompose_in_hamiltonians: degree exceeds h_{n-2}");
        ParamExp p = key.params;
        out.coefficients[k].add_term(p, c * GaussianRational(factorial(k + 1)));
    }

    DiffPoly residual = s;
    for (const auto& [k, c] : out.coefficients) {
        const DiffPoly h = ctx.hamiltonian(k).functional.integrand().hbar_to_mu_squared().truncated(t);
        residual -= mul(DiffPoly(c), h, t);
    }
    out.residual = LocalFunctional(residual);

    out.leading_matches = out.coefficients.count(n - 2) &&
                          out.coefficients.at(n - 2) == ScalarPoly(ilw_leading_coefficient(n));
    out.all_real = true;
    for (const auto& [k, c] : out.coefficients)
        for (const auto& [p, x] : c.terms())
            out.all_real = out.all_real && x.is_real();
    return out;
}

} // namespace hkdv
