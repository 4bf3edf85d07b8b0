#ifndef HKDV_BERNOULLI_HPP
#define HKDV_BERNOULLI_HPP

#include <functional>

#include "hkdv/rational.hpp"

namespace hkdv {

// B_m with B_1 = -1/2, B_2 = 1/6, B_4 = -1/30. Memoized; safe to call concurrently.
Rational bernoulli(int m);

// |B_{2g}| / (2g)!, the weight that recurs in every deformed KdV formula.
Rational bernoulli_weight(int g);

// Lets verification code run against a substituted Bernoulli table.
using BernoulliSource = std::function<Rational(int)>;

} // namespace hkdv

#endif
