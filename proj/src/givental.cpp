#include "hkdv/givental.hpp"

#include <stdexcept>
#include <string>

#include "hkdv/hierarchy.hpp"
#include "hkdv/miura.hpp"

namespace hkdv {
namespace {

DiffPoly P(const char* s) { return DiffPoly::parse(s); }

// Signed sum over i of (-1)^{i+1} f(Omega_{a,i}, Omega_{2l-2-i,b}).
template <class F>
DiffPoly alternating(int l, const OmegaTable& omega, int a, int b, F f)
{
    DiffPoly s;
    for (int i = 0; i <= 2 * l - 2; ++i) {
        const DiffPoly term = f(omega_entry(omega, a, i), omega_entry(omega, 2 * l - 2 - i, b));
        if (i % 2 == 0)
            s -= term;
        else
            s += term;
    }
    return s;
}

// The coefficient c with int part dx = c int u u_{2g} dx; throws if part has another shape.
Rational coefficient_of_u_u2g(const DiffPoly& part, int g)
{
    const DiffPoly ref = ibp_normal_form(LocalFunctional(DiffPoly::u(0) * DiffPoly::u(2 * g)));
    const DiffPoly got = part.is_zero() ? DiffPoly() : ibp_normal_form(LocalFunctional(part));
    const Monomial m = *ref.monomials().begin();
    const Rational c = got.coefficient(m).re() / ref.coefficient(m).re();
    if (got != ref * GaussianRational(c))
        throw std::runtime_error("unexpected shape: " + got.to_string());
    return c;
}

DiffPoly param_slice(const DiffPoly& f, int hbar, int eps) { return f.param_part(ParamExp{hbar, 2 * eps, 0}); }

} // namespace

OmegaTable omega_kdv_table()
{
    OmegaTable t;
    auto put = [&](int p, int q, const DiffPoly& f) {
        t[{p, q}] = f;
        t[{q, p}] = f;
    };
    put(0, 0, P("u0"));
    put(0, 1, P("1/2*u0^2 + 1/12*hbar*u2"));
    put(0, 2, P("1/6*u0^3 + 1/24*hbar*u1^2 + 1/12*hbar*u0*u2 + 1/240*hbar^2*u4"));
    put(0, 3, P("1/24*u0^4 + 1/24*hbar*u0^2*u2 + 1/24*hbar*u0*u1^2 + 1/240*hbar^2*u0*u4 + 1/120*hbar^2*u1*u3 + "
                "1/160*hbar^2*u2^2 + 1/6720*hbar^3*u6"));
    put(1, 2, P("1/8*u0^4 + 1/8*hbar*u0^2*u2 + 1/12*hbar*u0*u1^2 + 1/90*hbar^2*u0*u4 + 23/1440*hbar^2*u2^2 + "
                "1/60*hbar^2*u1*u3 + 1/2880*hbar^3*u6"));
    return t;
}

const DiffPoly& omega_entry(const OmegaTable& omega, int p, int q)
{
    auto it = omega.find({p, q});
    if (it == omega.end())
        throw std::out_of_range("missing Omega_{" + std::to_string(p) + "," + std::to_string(q) + "}");
    return it->second;
}

DiffPoly givental_z_density(int l, const OmegaTable& omega, int p, int q, int hbar_order)
{
    if (l < 1)
        throw std::invalid_argument("givental_z_density: l must be >= 1");
    const Truncation t = Truncation::hbar_order(hbar_order);
    const int s = 2 * l - 1;
    const DiffPoly& target = omega_entry(omega, p, q);

    DiffPoly out = omega_entry(omega, p + s, q) + omega_entry(omega, p, q + s);
    out += alternating(l, omega, p, q, [&](const DiffPoly& a, const DiffPoly& b) { return mul(a, b, t); });

    const DiffPoly& w = omega_entry(omega, 0, s);
    for (int n = 0; n <= target.max_index(); ++n) {
        const DiffPoly d = partial_u(target, n);
        if (d.is_zero())
            continue;
        DiffPoly inner = partial_x(w, n) * GaussianRational(n + 2);
        inner += alternating(l, omega, 0, 0, [&](const DiffPoly& a, const DiffPoly& b) {
            DiffPoly acc;
            for (int k = 0; k <= n - 1; ++k)
                acc += mul(partial_x(a, k + 1), partial_x(b, n - k - 1), t) * GaussianRational(binomial(n, k));
            return acc + partial_x(mul(a, b, t), n);
        });
        out -= mul(d, inner, t);
    }

    DiffPoly second;
    for (int n = 0; n <= target.max_index(); ++n)
        for (int m = 0; m <= target.max_index(); ++m) {
            const DiffPoly d2 = partial_u(partial_u(target, n), m);
            if (d2.is_zero())
                continue;
            second += mul(d2, alternating(l, omega, 0, 0, [&](const DiffPoly& a, const DiffPoly& b) {
                              return mul(partial_x(a, n + 1), partial_x(b, m + 1), t);
                          }), t);
        }
    out += mul(P("1/2*hbar"), second, t);
    return out.truncated(t);
}

LocalFunctional givental_z_apply(int l, const OmegaTable& omega, int p, int q, int hbar_order)
{
    return normalized(LocalFunctional(givental_z_density(l, omega, p, q, hbar_order)));
}

AppendixAResult appendix_a_check()
{
    constexpr int G = 2;
    AppendixAResult r;
    const OmegaTable omega = omega_kdv_table();
    const DiffPoly z = givental_z_density(1, omega, 0, 2, G);
    r.z_functional = normalized(LocalFunctional(z));
    r.checks.add("int z^1[u](Omega_02) dx = int (hbar/4 u^2 u2 + hbar^2/30 u u4) dx",
                 r.z_functional == LocalFunctional(P("1/4*hbar*u0^2*u2 + 1/30*hbar^2*u0*u4")),
                 r.z_functional.to_string());

    // d/d eps at eps = 0 is -B_2/2! z^1 = -1/12 z^1.
    const DiffPoly eps_part = mul(P("-1/12*eps"), z, Truncation::hbar_order(G));
    r.hbar2_eps = normalized(LocalFunctional(param_slice(eps_part, 2, 1)));
    r.checks.add("hbar^2 eps coefficient of int Omega_02 dx = -1/360 int u u4 dx",
                 r.hbar2_eps == LocalFunctional(P("-1/360*u0*u4")), r.hbar2_eps.to_string());

    const LocalFunctional h1(omega_entry(omega, 0, 2) + eps_part);
    const LocalFunctional full = miura_apply_functional(dz_miura(G), h1, G);
    DiffPoly moved;
    for (const auto& [key, c] : full.integrand().terms())
        if (key.params.eps2 <= 2)
            moved.add_term(key, c);
    r.transported = normalized(LocalFunctional(moved));
    const DiffPoly& f = r.transported.integrand();
    r.checks.add("hbar eps part vanishes after the Miura transformation",
                 param_slice(f, 1, 1).is_zero() || functional_is_zero(LocalFunctional(param_slice(f, 1, 1))));
    r.c1 = coefficient_of_u_u2g(param_slice(f, 1, 0), 1);
    r.c2 = coefficient_of_u_u2g(param_slice(f, 2, 1), 2);
    r.checks.add("c_1 = 1/24", r.c1 == Rational(1, 24), r.c1.to_string());
    r.checks.add("c_2 = 1/1440", r.c2 == Rational(1, 1440), r.c2.to_string());
    return r;
}

} // namespace hkdv
