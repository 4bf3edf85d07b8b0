#ifndef HKDV_HIERARCHY_HPP
#define HKDV_HIERARCHY_HPP

#include <filesystem>
#include <map>
#include <shared_mutex>
#include <stdexcept>

#include "hkdv/bernoulli.hpp"
#include "hkdv/check.hpp"
#include "hkdv/miura.hpp"

namespace hkdv {

enum class EpsilonMode {
    general,
    // The specialization eps = 0, which is the classical KdV hierarchy.
    eps_zero,
};

struct Hamiltonian {
    int n = 1;
    int hbar_order = 0;
    LocalFunctional functional;
};

Hamiltonian h1_closed_form(int hbar_order, EpsilonMode mode = EpsilonMode::general);
Hamiltonian h2_closed_form(int hbar_order, EpsilonMode mode = EpsilonMode::general);
// h_0 = int u^2/2 and h_{-1} = int u.
Hamiltonian casimir_hamiltonian(int n, int hbar_order);

// Solves {h_1, h_n} = 0 order by order in hbar over an ansatz of all monomials allowed
// by the gradings; exact-term freedom is fixed by the ibp normal form. n = 1 returns
// the closed form. Throws InconsistentSystem if some order has no solution.
Hamiltonian construct_hamiltonian(int n, int hbar_order, EpsilonMode mode = EpsilonMode::general);

// Checks the leading term and the (g, j) bidegree constraints.
bool satisfies_hamiltonian_gradings(const Hamiltonian& h);

// d_x δh/δu.
DiffPoly flow_rhs(const Hamiltonian& h);

// sum_{i=0}^g B_2i B_{2g-2i}/((2i)!(2g-2i)!) (u_2i u_{2g-2i+1} - d_x^{2i}(u_1 u_{2g-2i})),
// the polynomial behind {h_1, h_2} = 0.
DiffPoly bernoulli_pair_polynomial(int g, const BernoulliSource& b = bernoulli);
// For 0 <= g <= g_max: equals -u1 u2/4 at g = 1 and vanishes otherwise, both as a
// polynomial and as a functional.
VerificationReport bernoulli_pair_suite(int g_max, const BernoulliSource& b = bernoulli);

// d_x + sum_g (2g-1)|B_2g|/(2g)! (hbar eps)^g d_x^{2g+1}.
PoissonOperator dz_operator(int hbar_order);
// B ∘ d_x ∘ B with B = 1 + sum_g (2^{2g-1}-1)/2^{2g-1} |B_2g|/(2g)! (hbar eps)^g d_x^{2g}.
PoissonOperator dz_operator_product_form(int hbar_order);
// u~ = u + sum_g (-1)^g / (2^{2g} (2g+1)!) (hbar eps)^g u_{2g}.
MiuraTransformation dz_miura(int hbar_order);

// Memoized hierarchy at a fixed truncation. Lookups may run concurrently.
class HierarchyContext {
public:
    explicit HierarchyContext(int hbar_order, EpsilonMode mode = EpsilonMode::general);

    int hbar_order() const { return g_; }
    EpsilonMode mode() const { return mode_; }

    // h_n for n >= -1; closed forms for n <= 2, constructed otherwise.
    Hamiltonian hamiltonian(int n) const;
    DiffPoly flow(int n) const;

    // Records are "n<TAB>G<TAB>int( ... ) dx". Loading ignores records for another G.
    void save_cache(const std::filesystem::path& path) const;
    int load_cache(const std::filesystem::path& path);
    std::size_t cached_count() const;

private:
    int g_;
    EpsilonMode mode_;
    mutable std::shared_mutex mutex_;
    mutable std::map<int, Hamiltonian> hamiltonians_;
    mutable std::map<int, DiffPoly> flows_;
};

} // namespace hkdv

#endif
