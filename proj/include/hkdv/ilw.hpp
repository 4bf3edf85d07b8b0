#ifndef HKDV_ILW_HPP
#define HKDV_ILW_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hkdv/hierarchy.hpp"

namespace hkdv {

// R f = sum_g mu^{2g-1} eps^{g-1} |B_2g|/(2g)! d_x^{2g-1} f, up to mu^M.
DiffPoly op_R(const DiffPoly& f, int mu_order);

// T f = sum_n delta^{2n-1} 2^{2n} |B_2n|/(2n)! d_x^{2n-1} f, returned as delta power -> coefficient,
// for delta powers up to max_delta_power.
std::map<int, DiffPoly> op_T(const DiffPoly& f, int max_delta_power);

// Right-hand side u_t of the ILW equation after w = sqrt(eps)/mu u, tau = -mu/(2 sqrt(eps)) t,
// delta = mu sqrt(eps)/2, up to mu^M.
DiffPoly rescaled_ilw_flow(int mu_order);

struct SigmaExpansion {
    int mu_order = 0;
    // terms[n - 1] is sigma_n.
    std::vector<DiffPoly> terms;

    const DiffPoly& sigma(int n) const { return terms.at(static_cast<std::size_t>(n - 1)); }
};

// Solves e^sigma - 1 = (2 sigma/eps - mu (i/sqrt(eps) + 2R) sigma_x + 2u)/lambda order by order in 1/lambda.
SigmaExpansion sigma_sequence(int n_max, int mu_order);

// The first ILW flow (hbar = mu^2) at matching truncation.
DiffPoly ilw_first_flow(int mu_order);

// True iff d/dt int sigma_n dx vanishes along the first flow up to mu^M.
bool conservation_check(const SigmaExpansion& sigmas, int n);

struct HamiltonianDecomposition {
    int n = 0;
    // Keyed by Hamiltonian index, printed from the highest index down.
    std::map<int, ScalarPoly, std::greater<>> coefficients;
    LocalFunctional residual;
    bool leading_matches = false;
    bool all_real = false;

    bool residual_is_zero() const { return functional_is_zero(residual); }
    // "k<TAB>coefficient" lines followed by "residual: 0" (or the residual functional).
    std::string to_text() const;
};

// Expands int sigma_n dx over h_{n-2}, ..., h_{-1} (hbar = mu^2). The coefficients are read
// off the mu^0 part; the residual is then checked to mu^M. The context must have
// hbar order at least M/2.
HamiltonianDecomposition decompose_in_hamiltonians(const SigmaExpansion& sigmas, int n, const HierarchyContext& ctx);

// (-1)^{n+1} 2^n (n-1)!
Rational ilw_leading_coefficient(int n);

} // namespace hkdv

#endif
