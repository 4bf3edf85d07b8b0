// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hkdv/bernoulli.hpp"
#include "hkdv/givental.hpp"
#include "hkdv/hierarchy.hpp"
#include "hkdv/hodge.hpp"
#include "hkdv/ilw.hpp"
#include "hkdv/series_identities.hpp"
#include "support.hpp"

using namespace hkdv;

namespace {

DiffPoly P(const char* s) { return DiffPoly::parse(s); }

// |B_2g| / (2g)!
Rational bw(int g) { return bernoulli(2 * g).abs() / factorial(2 * g); }

DiffPoly with(const DiffPoly& f, const Rational& c, int hbar, int eps)
{
    return f * DiffPoly::term(GaussianRational(c), Monomial(), ParamExp{hbar, 2 * eps, 0});
}

DiffPoly uu(int a, int b) { return DiffPoly::u(a) * DiffPoly::u(b); }

// The two commuting functionals as displayed.
LocalFunctional display_h1(int G)
{
    DiffPoly f = P("1/6*u0^3");
    for (int g = 1; g <= G; ++g)
        f += with(uu(0, 2 * g), bw(g) / Rational(2), g, g - 1);
    return LocalFunctional(f);
}

LocalFunctional display_h2(int G)
{
    DiffPoly f = P("1/24*u0^4 + 1/48*hbar*u0^2*u2").truncated(Truncation::hbar_order(G));
    for (int g = 2; g <= G; ++g) {
        f += with(uu(0, 2 * g), bw(g) * Rational(g + 1, 2), g, g - 2);
        f += with(DiffPoly::u(0, 2) * DiffPoly::u(2 * g), bw(g) / Rational(4), g, g - 1);
    }
    return LocalFunctional(f);
}

bool bracket_zero(const LocalFunctional& a, const LocalFunctional& b, int G)
{
    return functional_is_zero(poisson_bracket(a, b, DiffOperator::dx(), Truncation::hbar_order(G)));
}

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

Outcome criterion_commutativity()
{
    Outcome o;
    const int G = 8;
    o.require(display_h1(G) == h1_closed_form(G).functional, "h1 closed form differs from display");
    o.require(display_h2(G) == h2_closed_form(G).functional, "h2 closed form differs from display");
    o.require(bracket_zero(display_h1(G), display_h2(G), G), "{h1, h2} != 0");
    return o;
}

Outcome criterion_bernoulli_pair()
{
    Outcome o;
    for (int g = 0; g <= 8; ++g) {
        DiffPoly s;
        for (int i = 0; i <= g; ++i)
            s += (uu(2 * i, 2 * g - 2 * i + 1) - partial_x(uu(1, 2 * g - 2 * i), 2 * i)) *
                 GaussianRational(bernoulli(2 * i) * bernoulli(2 * g - 2 * i) /
                                  (factorial(2 * i) * factorial(2 * g - 2 * i)));
        o.require(s == bernoulli_pair_polynomial(g), "library polynomial differs at g=" + std::to_string(g));
        if (g == 1)
            o.require(s == P("-1/4*u1*u2"), "g=1 value " + s.to_string());
        else
            o.require(s.is_zero() && functional_is_zero(LocalFunctional(s)), "g=" + std::to_string(g));
    }
    o.require(bernoulli_pair_suite(8).all_passed(), "suite");
    return o;
}

Outcome criterion_series()
{
    Outcome o;
    const VerificationReport r = series_identity_suite(16, 4);
    for (const auto& c : r.checks)
        o.require(c.passed, c.name + ": " + c.detail);
    o.require(r.checks.size() == 13, "expected 13 identities, got " + std::to_string(r.checks.size()));
    // Convolution sum directly, 2 <= m <= 8.
    for (int m = 2; m <= 8; ++m) {
        Rational s(0);
        for (int a = 1; a < m; ++a)
            s += bw(a) * bw(m - a);
        o.require(s == Rational(2 * m + 1) * bw(m), "convolution at m=" + std::to_string(m));
    }
    return o;
}

Outcome criterion_operator()
{
    Outcome o;
    const int G = 8;
    DiffOperator::Coefficients c{{1, P("1")}};
    for (int g = 1; g <= G; ++g)
        c[2 * g + 1] = with(P("1"), Rational(2 * g - 1) * bw(g), g, g);
    const DiffOperator expected(c);
    o.require(dz_operator_product_form(G) == expected, dz_operator_product_form(G).to_string());
    o.require(dz_operator(G) == expected, "closed form");
    const PoissonOperator image = miura_apply_operator(dz_miura(G), expected, G);
    o.require(image == DiffOperator::dx(), image.to_string());
    return o;
}

Outcome criterion_construction()
{
    Outcome o;
    o.require(construct_hamiltonian(2, 3).functional == display_h2(3), "construct(2, 3)");
    std::vector<LocalFunctional> hs{display_h1(2), display_h2(2)};
    for (int n : {3, 4}) {
        const Hamiltonian h = construct_hamiltonian(n, 2);
        o.require(satisfies_hamiltonian_gradings(h), "gradings of h" + std::to_string(n));
        hs.push_back(h.functional);
    }
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            o.require(bracket_zero(hs[i], hs[j], 2), "{h" + std::to_string(i + 1) + ", h" + std::to_string(j + 1) + "}");
    return o;
}

Outcome criterion_flows()
{
    Outcome o;
    const int G = 4;
    DiffPoly f1 = P("u0*u1");
    DiffPoly f2 = P("1/2*u0^2*u1");
    for (int g = 1; g <= G; ++g) {
        f1 += with(DiffPoly::u(2 * g + 1), bw(g), g, g - 1);
        f2 += with(partial_x(uu(0, 2 * g)) * GaussianRational(2) + partial_x(DiffPoly::u(0, 2), 2 * g + 1),
                   bw(g) / Rational(4), g, g - 1);
        if (g >= 2)
            f2 += with(DiffPoly::u(2 * g + 1), bw(g) * Rational(g + 1), g, g - 2);
    }
    o.require(flow_rhs(h1_closed_form(G)) == f1, "t1 flow");
    o.require(flow_rhs(h2_closed_form(G)) == f2, "t2 flow");
    o.require(flow_rhs(h1_closed_form(G, EpsilonMode::eps_zero)) == P("u0*u1 + 1/12*hbar*u3"), "t1 at eps=0");
    o.require(flow_rhs(h2_closed_form(G, EpsilonMode::eps_zero)) ==
                  P("1/2*u0^2*u1 + 1/6*hbar*u1*u2 + 1/12*hbar*u0*u3 + 1/240*hbar^2*u5"),
              "t2 at eps=0");
    return o;
}

Outcome criterion_hodge()
{
    Outcome o;
    const HierarchyContext ctx(3);
    const HodgeRun run = run_hodge_pipeline(ctx, CompletionBounds{3, 6, 8});
    for (const auto& c : run.checks.checks)
        o.require(c.passed, c.name + ": " + c.detail);
    const CorrelatorTable& t = run.table;
    o.require(t.get(make_correlator(0, 0, {0, 0, 0})) == Rational(1), "<tau_0^3>_0");
    o.require(t.get(make_correlator(1, 1, {0})) == Rational(1, 24), "<lambda_1 tau_0>_1");
    o.require(t.get(make_correlator(1, 0, {1})) == Rational(1, 24), "<tau_1>_1");
    o.require(t.get(make_correlator(2, 2, {2})) == Rational(7, 5760), "<lambda_2 tau_2>_2");
    int count = 0;
    for (const auto& [key, v] : t.entries()) {
        if (key.j != key.g || key.g == 0)
            continue;
        const int g = key.g, n = static_cast<int>(key.k.size());
        Rational expected = (power(Rational(2), 2 * g - 1) - Rational(1)) / power(Rational(2), 2 * g - 1) * bw(g) *
                            factorial(2 * g - 3 + n);
        for (int d : key.k)
            expected /= factorial(d);
        o.require(v == expected, "lambda_g mismatch at g=" + std::to_string(g));
        ++count;
    }
    o.require(count > 0, "no lambda_g entries");
    o.note = o.ok ? std::to_string(t.size()) + " correlators, " + std::to_string(count) + " lambda_g entries" : o.note;
    return o;
}

Outcome criterion_appendix_a()
{
    Outcome o;
    const OmegaTable omega = omega_kdv_table();
    o.require(givental_z_apply(1, omega, 0, 2, 2) == LocalFunctional(P("1/4*hbar*u0^2*u2 + 1/30*hbar^2*u0*u4")),
              "z^1 functional");
    const AppendixAResult r = appendix_a_check();
    o.require(r.hbar2_eps == LocalFunctional(P("-1/360*u0*u4")), r.hbar2_eps.to_string());
    o.require(r.c2 == Rational(1, 1440), "c2 = " + r.c2.to_string());
    o.require(r.checks.all_passed(), "internal checks");
    return o;
}

Outcome criterion_ilw()
{
    Outcome o;
    const SigmaExpansion s6 = sigma_sequence(5, 6);
    o.require(s6.sigma(1) == P("2*u0"), "sigma_1");
    const Truncation t = Truncation::mu_order(6);
    const DiffPoly sigma2 = P("-2*u0^2 + 4*eps^-1*u0") - mul(P("2*im*eps^(-1/2)*mu"), P("u1"), t) -
                            mul(P("4*mu"), op_R(P("u1"), 5), t);
    o.require(s6.sigma(2) == sigma2, "sigma_2");
    const SigmaExpansion s4 = sigma_sequence(3, 4);
    for (int n = 1; n <= 3; ++n)
        o.require(conservation_check(s4, n), "conservation n=" + std::to_string(n));
    const HierarchyContext ctx(3);
    for (int n = 1; n <= 5; ++n) {
        const HamiltonianDecomposition d = decompose_in_hamiltonians(s6, n, ctx);
        o.require(d.residual_is_zero(), "residual n=" + std::to_string(n));
        const Rational lead = Rational(n % 2 == 1 ? 1 : -1) * power(Rational(2), n) * factorial(n - 1);
        o.require(d.coefficients.count(n - 2) && d.coefficients.at(n - 2) == ScalarPoly(lead),
                  "leading n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion_properties()
{
    using namespace hkdv::testing;
    Outcome o;
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        const DiffPoly f = random_poly(rng, 6, 4, 5);
        o.require(variational_derivative(partial_x(f)).is_zero(), "delta d_x " + f.to_string());
    }
    const auto dx = DiffOperator::dx();
    const auto none = Truncation::none();
    for (int i = 0; i < 10; ++i) {
        const LocalFunctional f(random_poly(rng, 4, 4, 3)), g(random_poly(rng, 4, 4, 3)), h(random_poly(rng, 4, 4, 3));
        o.require(functional_is_zero(poisson_bracket(f, g, dx, none) + poisson_bracket(g, f, dx, none)), "antisymmetry");
        o.require(functional_is_zero(poisson_bracket(poisson_bracket(f, g, dx, none), h, dx, none) +
                                     poisson_bracket(poisson_bracket(g, h, dx, none), f, dx, none) +
                                     poisson_bracket(poisson_bracket(h, f, dx, none), g, dx, none)),
                  "Jacobi");
    }
    const int G = 3;
    for (const char* image : {"u0 + hbar*u0*u2 + 1/2*hbar*u1^2 + -hbar^2*u4",
                              "u0 + 1/3*hbar*u2 + hbar^2*u0*u4 + hbar^3*u6", "u0 + -1/24*hbar*eps*u2"}) {
        const MiuraTransformation m{P(image)};
        o.require(miura_compose(m, miura_invert(m, G), G).is_identity(), std::string("round trip ") + image);
        o.require(miura_compose(miura_invert(m, G), m, G).is_identity(), std::string("round trip ") + image);
        const PoissonOperator k = miura_apply_operator(miura_invert(m, G), miura_apply_operator(m, dx, G), G);
        o.require(k == dx, std::string("operator round trip ") + image);
    }
    int monomials = 0;
    for (int w = 0; w <= 6; ++w)
        for (int d = 1; d <= 3; ++d)
            for (const Monomial& m : monomials_of(w, d)) {
                const DiffPoly f = DiffPoly::term(GaussianRational(1), m);
                o.require(functional_is_zero(LocalFunctional(f)) == in_exact_span(f, w, d), "span oracle " + f.to_string());
                ++monomials;
            }
    if (o.ok)
        o.note = std::to_string(monomials) + " monomials against the span oracle";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"commutativity {h1, h2} = 0 at hbar^8", criterion_commutativity},
        {"Bernoulli pair identity for 0 <= g <= 8", criterion_bernoulli_pair},
        {"series identities to z^16", criterion_series},
        {"Poisson operator product form and Miura image at hbar^8", criterion_operator},
        {"construction and commutation of h1..h4", criterion_construction},
        {"flows t1, t2 at hbar^4 and at eps = 0", criterion_flows},
        {"Hodge integrals at (G, N, D) = (3, 6, 8)", criterion_hodge},
        {"Givental deformation and c2 = 1/1440", criterion_appendix_a},
        {"ILW sigma densities and decompositions", criterion_ilw},
        {"property suites", criterion_properties},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << index << "] " << name;
        if (!o.note.empty())
            std::cout << " (" << o.note << ")";
        std::cout << '\n';
    }
    return failed == 0 ? 0 : 1;
}
