#ifndef HKDV_LOCALFUNC_HPP
#define HKDV_LOCALFUNC_HPP

#include <string>
#include <string_view>

#include "hkdv/diffpoly.hpp"

namespace hkdv {

// A class of integrands modulo total x-derivatives. The stored integrand is
// whatever representative was supplied; comparisons go through δ/δu.
class LocalFunctional {
public:
    LocalFunctional() = default;
    // Throws std::invalid_argument if the integrand has a constant term.
    explicit LocalFunctional(DiffPoly integrand);

    const DiffPoly& integrand() const { return f_; }

    LocalFunctional operator-() const { return LocalFunctional(-f_); }
    LocalFunctional& operator+=(const LocalFunctional& o);
    LocalFunctional& operator-=(const LocalFunctional& o);
    friend LocalFunctional operator+(LocalFunctional a, const LocalFunctional& b) { return a += b; }
    friend LocalFunctional operator-(LocalFunctional a, const LocalFunctional& b) { return a -= b; }
    friend LocalFunctional operator*(const GaussianRational& c, const LocalFunctional& h)
    {
        return LocalFunctional(h.f_ * c);
    }

    LocalFunctional truncated(const Truncation& t) const { return LocalFunctional(f_.truncated(t)); }

    // Equality in the quotient space.
    friend bool operator==(const LocalFunctional& a, const LocalFunctional& b);

    // "int( <integrand> ) dx".
    std::string to_string() const;
    static LocalFunctional parse(std::string_view text);

private:
    DiffPoly f_;
};

// sum_i (-d_x)^i dF/du_i.
DiffPoly variational_derivative(const DiffPoly& f);
DiffPoly variational_derivative(const LocalFunctional& h);

bool functional_is_zero(const LocalFunctional& h);

// Canonical representative: no monomial is linear in a top derivative u_m (m >= 1)
// that exceeds every other index present.
DiffPoly ibp_normal_form(const LocalFunctional& h);
LocalFunctional normalized(const LocalFunctional& h);

// [q, r] = sum_s ((d_x^s q) dr/du_s - (d_x^s r) dq/du_s).
DiffPoly evolutionary_bracket(const DiffPoly& q, const DiffPoly& r);

} // namespace hkdv

#endif
