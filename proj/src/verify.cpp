#include "hkdv/verify.hpp"

#include <stdexcept>

#include "hkdv/givental.hpp"
#include "hkdv/ilw.hpp"
#include "hkdv/series_identities.hpp"

namespace hkdv {
namespace {

DiffPoly P(const char* s) { return DiffPoly::parse(s); }

DiffPoly with_params(const DiffPoly& f, const Rational& c, int hbar, int eps)
{
    return f * DiffPoly::term(GaussianRational(c), Monomial(), ParamExp{hbar, 2 * eps, 0});
}

// u_t1 = u u_x + sum_g hbar^g eps^{g-1} |B_2g|/(2g)! u_{2g+1}.
DiffPoly displayed_first_flow(int hbar_order)
{
    DiffPoly f = P("u0*u1");
    for (int g = 1; g <= hbar_order; ++g)
        f += with_params(DiffPoly::u(2 * g + 1), bernoulli_weight(g), g, g - 1);
    return f;
}

// u_t2 = u^2 u_x/2 + sum_g |B_2g|/(2g)! hbar^g eps^{g-1}/4 (2 (u u_2g)_x + d_x^{2g+1} u^2)
//        + sum_{g>=2} |B_2g|/(2g)! hbar^g eps^{g-2} (g+1) u_{2g+1}.
DiffPoly displayed_second_flow(int hbar_order)
{
    DiffPoly f = P("1/2*u0^2*u1");
    for (int g = 1; g <= hbar_order; ++g) {
        const Rational b = bernoulli_weight(g);
        const DiffPoly inner = partial_x(DiffPoly::u(0) * DiffPoly::u(2 * g)) * GaussianRational(2) +
                               partial_x(DiffPoly::u(0, 2), 2 * g + 1);
        f += with_params(inner, b / Rational(4), g, g - 1);
        if (g >= 2)
            f += with_params(DiffPoly::u(2 * g + 1), b * Rational(g + 1), g, g - 2);
    }
    return f;
}

void add_equal(VerificationReport& r, std::string name, const DiffPoly& got, const DiffPoly& expected)
{
    const DiffPoly diff = got - expected;
    r.add(std::move(name), diff.is_zero(), diff.is_zero() ? "" : "difference " + diff.to_string());
}

} // namespace

VerificationReport verify_series(const SuiteConfig& c)
{
    const int k_max = c.z_order >= 4 ? (c.z_order - 4) / 2 : -1;
    return series_identity_suite(c.z_order, k_max, c.bernoulli_numbers);
}

VerificationReport verify_brackets(const SuiteConfig& c)
{
    VerificationReport r;
    const int g = c.hbar_order;
    const Truncation t = Truncation::hbar_order(g);
    const LocalFunctional h1 = h1_closed_form(g).functional;
    const LocalFunctional h2 = h2_closed_form(g).functional;
    const DiffPoly b12 = poisson_bracket(h1, h2, DiffOperator::dx(), t).integrand();
    r.add("{h1, h2} = 0 at hbar^" + std::to_string(g), b12.is_zero(), b12.to_string());
    for (int n : {0, -1}) {
        const DiffPoly b = poisson_bracket(casimir_hamiltonian(n, g).functional, h2, DiffOperator::dx(), t).integrand();
        r.add("{h" + std::to_string(n) + ", h2} = 0", b.is_zero(), b.to_string());
    }
    r.append(bernoulli_pair_suite(8, c.bernoulli_numbers));
    return r;
}

VerificationReport verify_hamiltonians(const SuiteConfig& c, const HierarchyContext& ctx)
{
    VerificationReport r;
    const int g = ctx.hbar_order();
    const Truncation t = Truncation::hbar_order(g);

    const Hamiltonian built = construct_hamiltonian(2, g);
    r.add("constructed h2 equals the closed form at hbar^" + std::to_string(g),
          built.functional == h2_closed_form(g).functional, built.functional.to_string());

    std::vector<Hamiltonian> hs;
    for (int n = 1; n <= 4; ++n) {
        hs.push_back(ctx.hamiltonian(n));
        r.add("h" + std::to_string(n) + " satisfies the gradings", satisfies_hamiltonian_gradings(hs.back()));
    }
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const DiffPoly b = poisson_bracket(hs[i].functional, hs[j].functional, DiffOperator::dx(), t).integrand();
            r.add("{h" + std::to_string(i + 1) + ", h" + std::to_string(j + 1) + "} = 0", b.is_zero(), b.to_string());
        }

    add_equal(r, "flow t1 matches the displayed equation", ctx.flow(1), displayed_first_flow(g));
    add_equal(r, "flow t2 matches the displayed equation", ctx.flow(2), displayed_second_flow(g));
    add_equal(r, "flow t1 at eps = 0 is KdV", flow_rhs(h1_closed_form(g, EpsilonMode::eps_zero)),
              P("u0*u1 + 1/12*hbar*u3").truncated(t));
    add_equal(r, "flow t2 at eps = 0 is KdV", flow_rhs(h2_closed_form(g, EpsilonMode::eps_zero)),
              P("1/2*u0^2*u1 + 1/6*hbar*u1*u2 + 1/12*hbar*u0*u3 + 1/240*hbar^2*u5").truncated(t));
    (void)c;
    return r;
}

VerificationReport verify_operator(const SuiteConfig& c)
{
    VerificationReport r;
    const int g = c.hbar_order;
    const PoissonOperator k = dz_operator(g);
    const PoissonOperator prod = dz_operator_product_form(g);
    r.add("product form equals d_x + sum (2g-1)|B_2g|/(2g)! (hbar eps)^g d_x^{2g+1}", prod == k, prod.to_string());
    r.add("operator gradings", satisfies_poisson_grading(k));
    const PoissonOperator image = miura_apply_operator(dz_miura(g), k, g);
    r.add("Miura transformation maps it to d_x at hbar^" + std::to_string(g), image == DiffOperator::dx(),
          image.to_string());
    return r;
}

VerificationReport verify_appendix_a(const SuiteConfig&)
{
    return appendix_a_check().checks;
}

VerificationReport verify_appendix_b(const SuiteConfig& c)
{
    VerificationReport r = bernoulli_pair_suite(8, c.bernoulli_numbers);
    const int k_max = c.z_order >= 4 ? (c.z_order - 4) / 2 : -1;
    r.append(series_identity_suite(c.z_order, std::min(k_max, 4), c.bernoulli_numbers));
    return r;
}

VerificationReport verify_ilw(const SuiteConfig& c)
{
    VerificationReport r;
    const int m = c.mu_order;
    const SigmaExpansion s = sigma_sequence(5, m);
    add_equal(r, "sigma_1 = 2u", s.sigma(1), P("2*u0"));
    const Truncation tm = Truncation::mu_order(m);
    const DiffPoly sigma2 = P("-2*u0^2 + 4*eps^-1*u0") - mul(P("2*im*eps^(-1/2)*mu"), P("u1"), tm) -
                            mul(P("4*mu"), op_R(P("u1"), m - 1), tm);
    add_equal(r, "sigma_2 = -2u^2 - 2 mu (i/sqrt(eps) + 2R) u_x + 4u/eps", s.sigma(2), sigma2);
    const SigmaExpansion s4 = sigma_sequence(3, std::min(m, 4));
    for (int n = 1; n <= 3; ++n)
        r.add("int sigma_" + std::to_string(n) + " dx is conserved at mu^" + std::to_string(std::min(m, 4)),
              conservation_check(s4, n));
    const HierarchyContext ctx((m + 1) / 2);
    for (int n = 1; n <= 5; ++n) {
        const HamiltonianDecomposition d = decompose_in_hamiltonians(s, n, ctx);
        const std::string tag = "sigma_" + std::to_string(n);
        const bool zero = d.residual_is_zero();
        r.add(tag + " decomposes with zero residual at mu^" + std::to_string(m), zero,
              zero ? "" : normalized(d.residual).to_string());
        const auto top = d.coefficients.begin();
        r.add(tag + " leading coefficient " + ilw_leading_coefficient(n).to_string(), d.leading_matches,
              top == d.coefficients.end() ? "" : "h" + std::to_string(top->first) + ": " + top->second.to_string());
        std::string coeffs;
        for (const auto& [k, v] : d.coefficients)
            coeffs += (coeffs.empty() ? "h" : ", h") + std::to_string(k) + ": " + v.to_string();
        r.add(tag + " coefficients are real", d.all_real, coeffs);
    }
    return r;
}

VerificationReport verify_hodge(const SuiteConfig& c, const HierarchyContext& ctx)
{
    const HodgeRun run = run_hodge_pipeline(ctx, c.bounds);
    VerificationReport r = run.checks;
    const CorrelatorTable& t = run.table;
    auto expect = [&](const char* name, CorrelatorKey key, Rational v) {
        const Rational got = t.get(key);
        r.add(name, got == v, got.to_string());
    };
    expect("<tau_0^3>_0 = 1", make_correlator(0, 0, {0, 0, 0}), Rational(1));
    expect("<lambda_1 tau_0>_1 = 1/24", make_correlator(1, 1, {0}), Rational(1, 24));
    expect("<tau_1>_1 = 1/24", make_correlator(1, 0, {1}), Rational(1, 24));
    if (c.bounds.genus >= 2 && std::min(c.bounds.descendants, c.bounds.degree) >= 4)
        expect("<lambda_2 tau_2>_2 = 7/5760", make_correlator(2, 2, {2}), Rational(7, 5760));
    return r;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"series",   "brackets",  "hamiltonians", "operator",
                                                "appendixA", "appendixB", "ilw",          "hodge"};
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& c, const HierarchyContext& ctx)
{
    if (name == "all") {
        VerificationReport r;
        for (const std::string& s : suite_names())
            r.append(run_suite(s, c, ctx));
        return r;
    }
    if (name == "series")
        return verify_series(c);
    if (name == "brackets")
        return verify_brackets(c);
    if (name == "hamiltonians")
        return verify_hamiltonians(c, ctx);
    if (name == "operator")
        return verify_operator(c);
    if (name == "appendixA")
        return verify_appendix_a(c);
    if (name == "appendixB")
        return verify_appendix_b(c);
    if (name == "ilw")
        return verify_ilw(c);
    if (name == "hodge")
        return verify_hodge(c, ctx);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace hkdv
