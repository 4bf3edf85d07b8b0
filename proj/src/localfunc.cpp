#include "hkdv/localfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkdv {

LocalFunctional::LocalFunctional(DiffPoly integrand) : f_(std::move(integrand))
{
    if (f_.has_constant_term())
        throw std::invalid_argument("LocalFunctional: integrand has a constant term");
}

LocalFunctional& LocalFunctional::operator+=(const LocalFunctional& o)
{
    f_ += o.f_;
    return *this;
}

LocalFunctional& LocalFunctional::operator-=(const LocalFunctional& o)
{
    f_ -= o.f_;
    return *this;
}

bool operator==(const LocalFunctional& a, const LocalFunctional& b) { return functional_is_zero(a - b); }

std::string LocalFunctional::to_string() const { return "int( " + f_.to_string() + " ) dx"; }

LocalFunctional LocalFunctional::parse(std::string_view text)
{
    constexpr std::string_view open = "int( ";
    constexpr std::string_view close = " ) dx";
    if (!text.starts_with(open) || !text.ends_with(close) || text.size() < open.size() + close.size())
        throw std::invalid_argument("LocalFunctional::parse: expected 'int( ... ) dx'");
    return LocalFunctional(DiffPoly::parse(text.substr(open.size(), text.size() - open.size() - close.size())));
}

DiffPoly variational_derivative(const DiffPoly& f)
{
    DiffPoly r;
    const int top = f.max_index();
    for (int i = top; i >= 0; --i) {
        // Horner form: r = dF/du_i - d_x r, evaluated from the top index down.
        r = partial_u(f, i) - partial_x(r);
    }
    return r;
}

DiffPoly variational_derivative(const LocalFunctional& h) { return variational_derivative(h.integrand()); }

bool functional_is_zero(const LocalFunctional& h) { return variational_derivative(h).is_zero(); }

namespace {

// A term is reducible when its monomial is Q * u_{m-1}^a * u_m with m >= 1 and Q
// free of u_{m-1}, u_m; returns m, or 0 if not reducible.
int reducible_index(const Monomial& m)
{
    const int top = m.max_index();
    if (top < 1 || m.exponent(top) != 1)
        return 0;
    return top;
}

} // namespace

DiffPoly ibp_normal_form(const LocalFunctional& h)
{
    DiffPoly f = h.integrand();
    while (true) {
        // Highest top index first, then the largest term; each step only creates
        // monomials of smaller top index.
        const DiffPoly::Terms& terms = f.terms();
        auto best = terms.end();
        int best_m = 0;
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            const int m = reducible_index(it->first.mono);
            if (m > best_m || (m == best_m && m > 0)) {
                best = it;
                best_m = m;
            }
        }
        if (best_m == 0)
            return f;
        const TermKey key = best->first;
        const GaussianRational c = best->second;
        const int m = best_m;
        const int alpha = key.mono.exponent(m - 1);
        const Monomial q = key.mono.divided(m).divided(m - 1, alpha);
        // c Q u_{m-1}^a u_m = c/(a+1) d_x(Q u_{m-1}^{a+1}) - c/(a+1) (d_x Q) u_{m-1}^{a+1}.
        const GaussianRational w = c * GaussianRational(Rational(1, alpha + 1));
        DiffPoly exact = partial_x(DiffPoly::term(w, q.times(m - 1, alpha + 1), key.params));
        f -= exact;
    }
}

LocalFunctional normalized(const LocalFunctional& h) { return LocalFunctional(ibp_normal_form(h)); }

DiffPoly evolutionary_bracket(const DiffPoly& q, const DiffPoly& r)
{
    DiffPoly out;
    const int top = std::max(q.max_index(), r.max_index());
    DiffPoly dq = q, dr = r;
    for (int s = 0; s <= top; ++s) {
        out += dq * partial_u(r, s);
        out -= dr * partial_u(q, s);
        dq = partial_x(dq);
        dr = partial_x(dr);
    }
    return out;
}

} // namespace hkdv
