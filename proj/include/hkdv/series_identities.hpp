#ifndef HKDV_SERIES_IDENTITIES_HPP
#define HKDV_SERIES_IDENTITIES_HPP

#include "hkdv/bernoulli.hpp"
#include "hkdv/check.hpp"
#include "hkdv/trunc_series.hpp"

namespace hkdv {

// phi(z) = sum_i B_{2i} z^{2i} / (2i)!, known up to z^order.
TruncSeries bernoulli_phi(int order, const BernoulliSource& b = bernoulli);

// Checks, as identities up to z^z_order:
//   z phi' = -phi^2 + phi + z^2/4,
//   the two derivative identities for phi*phi^{(2k)} and phi*phi^{(2k+1)}, 0 <= k <= k_max,
//   the product of the two Bernoulli series entering the Miura transformation equals 1,
//   sum_{m1+m2=m} |B_{2m1}||B_{2m2}|/((2m1)!(2m2)!) = (2m+1)|B_{2m}|/(2m)! for 2 <= m <= z_order/2.
// A negative k_max skips the derivative identities. Requires z_order >= 2 k_max + 4
// when k_max >= 0.
VerificationReport series_identity_suite(int z_order, int k_max, const BernoulliSource& b = bernoulli);

} // namespace hkdv

#endif
