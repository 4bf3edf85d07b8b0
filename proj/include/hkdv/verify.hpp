#ifndef HKDV_VERIFY_HPP
#define HKDV_VERIFY_HPP

#include <string>
#include <vector>

#include "hkdv/bernoulli.hpp"
#include "hkdv/check.hpp"
#include "hkdv/hierarchy.hpp"
#include "hkdv/hodge.hpp"

namespace hkdv {

struct SuiteConfig {
    int hbar_order = 3;
    int mu_order = 6;
    int z_order = 16;
    CompletionBounds bounds;
    BernoulliSource bernoulli_numbers = bernoulli;
};

// Product identity, Bernoulli convolution and the two derivative identities.
VerificationReport verify_series(const SuiteConfig& c);
// {h_1, h_2} = 0, Casimirs, the Bernoulli pair identity.
VerificationReport verify_brackets(const SuiteConfig& c);
// Construction, gradings, pairwise brackets of h_1..h_4 and the displayed flows.
VerificationReport verify_hamiltonians(const SuiteConfig& c, const HierarchyContext& ctx);
// Product form of the Poisson operator and its Miura image.
VerificationReport verify_operator(const SuiteConfig& c);
VerificationReport verify_appendix_a(const SuiteConfig& c);
VerificationReport verify_appendix_b(const SuiteConfig& c);
// sigma_1, sigma_2, conservation and the Hamiltonian decompositions.
VerificationReport verify_ilw(const SuiteConfig& c);
VerificationReport verify_hodge(const SuiteConfig& c, const HierarchyContext& ctx);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite; "all" runs every suite in order.
VerificationReport run_suite(const std::string& name, const SuiteConfig& c, const HierarchyContext& ctx);

} // namespace hkdv

#endif
