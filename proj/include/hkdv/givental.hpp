#ifndef HKDV_GIVENTAL_HPP
#define HKDV_GIVENTAL_HPP

#include <map>
#include <utility>

#include "hkdv/check.hpp"
#include "hkdv/localfunc.hpp"

namespace hkdv {

// Two-point functions Omega_{p,q}; symmetric, stored under both orders.
using OmegaTable = std::map<std::pair<int, int>, DiffPoly>;

// Omega^{KdV}_{p,q} for (p,q) in {(0,0),(0,1),(0,2),(0,3),(1,2)}.
OmegaTable omega_kdv_table();

// Throws std::out_of_range naming the missing Omega_{p,q}.
const DiffPoly& omega_entry(const OmegaTable& omega, int p, int q);

// z^{2l-1}[u](Omega_{p,q}) as a differential polynomial, truncated at hbar^G.
DiffPoly givental_z_density(int l, const OmegaTable& omega, int p, int q, int hbar_order);
LocalFunctional givental_z_apply(int l, const OmegaTable& omega, int p, int q, int hbar_order);

struct AppendixAResult {
    LocalFunctional z_functional;
    // Coefficient of hbar^2 eps in int Omega_{0,2} dx.
    LocalFunctional hbar2_eps;
    // h_1 in the Miura-transformed variable, through hbar^2 eps.
    LocalFunctional transported;
    Rational c1;
    Rational c2;
    VerificationReport checks;
};

// The hbar^2 eps coefficient of int Omega_{0,2} dx from the l = 1 deformation of
// the KdV table, and the coefficients c_1, c_2 of h_1 after the DZ Miura transformation.
AppendixAResult appendix_a_check();

} // namespace hkdv

#endif
