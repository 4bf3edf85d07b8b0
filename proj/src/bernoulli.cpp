#include "hkdv/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace hkdv {

namespace {

std::shared_mutex cache_mutex;
std::vector<Rational> cache{Rational(1)};

} // namespace

Rational bernoulli(int m)
{
    if (m < 0)
        throw std::domain_error("bernoulli: negative index");
    {
        std::shared_lock lock(cache_mutex);
        if (static_cast<std::size_t>(m) < cache.size())
            return cache[static_cast<std::size_t>(m)];
    }
    std::unique_lock lock(cache_mutex);
    // sum_{k=0}^{n} C(n+1, k) B_k = 0
    for (int n = static_cast<int>(cache.size()); n <= m; ++n) {
        if (n >= 3 && n % 2 == 1) {
            cache.emplace_back(0);
            continue;
        }
        Rational s;
        for (int k = 0; k < n; ++k)
            if (!cache[static_cast<std::size_t>(k)].is_zero())
                s += binomial(n + 1, k) * cache[static_cast<std::size_t>(k)];
        cache.push_back(-s / Rational(n + 1));
    }
    return cache[static_cast<std::size_t>(m)];
}

Rational bernoulli_weight(int g) { return bernoulli(2 * g).abs() / factorial(2 * g); }

} // namespace hkdv
